"""Exception hierarchy shared by all modules."""


class TropError(Exception):
    """Base class for all library errors."""


# -- polygon ----------------------------------------------------------------

class PolygonError(TropError):
    pass


class TooFewVertices(PolygonError):
    pass


class Degenerate(PolygonError):
    pass


class NotConvex(PolygonError):
    pass


class NotHTransverse(PolygonError):
    pass


class NotTriangleOrParallelogram(PolygonError):
    pass


class NoHorizontalSide(PolygonError):
    pass


# -- curve ------------------------------------------------------------------

class CurveError(TropError):
    pass


class Unbalanced(CurveError):
    pass


class PositionMismatch(CurveError):
    pass


class Disconnected(CurveError):
    pass


class Unstable(CurveError):
    pass


class NotTrivalent(CurveError):
    pass


class NotSimple(CurveError):
    pass


class DegreeMismatch(CurveError):
    pass


class NotAWall(CurveError):
    pass


# -- floors -----------------------------------------------------------------

class FloorError(TropError):
    pass


class NotFloorDecomposed(FloorError):
    pass


class AmbiguousOrder(FloorError):
    pass


class HasSelfIntersections(FloorError):
    pass


class NonConsecutiveAdjacency(FloorError):
    pass


class InfeasibleGaps(FloorError):
    pass


# -- moves ------------------------------------------------------------------

class MoveError(TropError):
    pass


class ForbiddenSwap(MoveError):
    pass


class IndexOutOfRange(MoveError):
    pass


class PreconditionFailed(MoveError):
    pass


class NoVerticalLeg(MoveError):
    pass


class GenusOutOfRange(MoveError):
    pass


class Inconsistent(MoveError):
    pass


class Infeasible(MoveError):
    pass


# -- constructor ------------------------------------------------------------

class NoCrossing(TropError):
    pass


class DegreeOrGenusMismatch(TropError):
    pass


# -- io ---------------------------------------------------------------------

class ParseError(TropError):
    pass
