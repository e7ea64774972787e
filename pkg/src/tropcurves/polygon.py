"""Lattice polygon geometry.

Convex lattice polygons in Z^2 with exact integer/rational arithmetic:
h-transversality, horizontal slices, interior point counts (Pick), primitive
cells, the reduced tropical degree dual to a polygon, and the sufficient
condition for very-admissibility used by the curve constructor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import errors
from .geometry import cross, ilength, primitive

LatticePoint = Tuple[int, int]


@dataclass(frozen=True)
class LatticePolygon:
    """Strictly convex lattice polygon, counterclockwise, anchored at its
    lexicographically smallest vertex.  Use :func:`validate_polygon`."""

    vertices: Tuple[LatticePoint, ...]

    def sides(self) -> List[Tuple[LatticePoint, LatticePoint]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def area(self) -> Fraction:
        """Euclidean area (shoelace), an exact rational with denominator <= 2."""
        s = 0
        for (x0, y0), (x1, y1) in self.sides():
            s += x0 * y1 - x1 * y0
        return Fraction(s, 2)

    def boundary_lattice_count(self) -> int:
        return sum(ilength((q[0] - p[0], q[1] - p[1])) for p, q in self.sides())

    def bounding_box(self) -> Tuple[int, int, int, int]:
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def contains(self, p: LatticePoint, strict: bool = False) -> bool:
        for a, b in self.sides():
            c = cross((b[0] - a[0], b[1] - a[1]), (p[0] - a[0], p[1] - a[1]))
            if c < 0 or (strict and c == 0):
                return False
        return True

    def translate(self, dx: int, dy: int) -> "LatticePolygon":
        return validate_polygon([(x + dx, y + dy) for x, y in self.vertices])

    def reflect_y(self) -> "LatticePolygon":
        return validate_polygon([(x, -y) for x, y in self.vertices])

    def reflect_x(self) -> "LatticePolygon":
        return validate_polygon([(-x, y) for x, y in self.vertices])


@dataclass(frozen=True)
class SliceProfile:
    """Horizontal slice lengths of an h-transverse polygon.

    ``heights[r]`` is the length a_r of the slice at y = r0 + r for
    0 <= r <= H; a_0 or a_H may be 0 when the polygon has a bottom/top
    vertex instead of a horizontal side.
    """

    r0: int
    heights: Tuple[int, ...]

    @property
    def H(self) -> int:
        return len(self.heights) - 1


@dataclass(frozen=True)
class TropicalDegree:
    """Multiset of nonzero integer slope vectors summing to zero."""

    slopes: Tuple[Tuple[int, int], ...]  # sorted multiset

    def __len__(self) -> int:
        return len(self.slopes)

    @property
    def is_reduced(self) -> bool:
        return all(ilength(v) == 1 for v in self.slopes)

    def counts(self) -> Dict[Tuple[int, int], int]:
        out: Dict[Tuple[int, int], int] = {}
        for v in self.slopes:
            out[v] = out.get(v, 0) + 1
        return out

    def vertical_up(self) -> int:
        return sum(1 for v in self.slopes if v[0] == 0 and v[1] > 0)

    def vertical_down(self) -> int:
        return sum(1 for v in self.slopes if v[0] == 0 and v[1] < 0)


def make_degree(slopes: Sequence[Tuple[int, int]]) -> TropicalDegree:
    slopes = tuple(sorted((int(a), int(b)) for a, b in slopes))
    if any(v == (0, 0) for v in slopes):
        raise ValueError("degree vectors must be nonzero")
    sx = sum(v[0] for v in slopes)
    sy = sum(v[1] for v in slopes)
    if (sx, sy) != (0, 0):
        raise ValueError(f"degree vectors must sum to zero, got ({sx},{sy})")
    return TropicalDegree(slopes)


def validate_polygon(vertices: Sequence[LatticePoint]) -> LatticePolygon:
    """Validate and normalize a convex lattice polygon.

    Checks >= 3 vertices, integrality, strict convexity (no three consecutive
    collinear vertices), positive area; normalizes to counterclockwise order
    with the lexicographically smallest vertex first.
    """
    verts = [(int(x), int(y)) for x, y in vertices]
    if any((x, y) != tuple(orig) for (x, y), orig in zip(verts, vertices)):
        raise errors.ParseError("vertex coordinates must be integers")
    if len(verts) < 3:
        raise errors.TooFewVertices(f"need >= 3 vertices, got {len(verts)}")
    if len(set(verts)) != len(verts):
        raise errors.NotConvex("repeated vertex")

    area2 = 0
    n = len(verts)
    for i in range(n):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % n]
        area2 += x0 * y1 - x1 * y0
    if area2 == 0:
        raise errors.Degenerate("polygon has zero area")
    if area2 < 0:
        verts.reverse()

    for i in range(n):
        a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
        turn = cross((b[0] - a[0], b[1] - a[1]), (c[0] - b[0], c[1] - b[1]))
        if turn <= 0:
            raise errors.NotConvex(f"non-convex or collinear corner at {b}")

    anchor = min(range(n), key=lambda i: verts[i])
    verts = verts[anchor:] + verts[:anchor]
    return LatticePolygon(tuple(verts))


def is_h_transverse(p: LatticePolygon) -> bool:
    """True iff every horizontal lattice line meets the boundary only in
    lattice points or along a side.

    Equivalently: every non-horizontal side has a primitive vector with
    y-component +-1, so the side passes through a lattice point at each
    integer height (its x-drift per unit height is an integer).
    """
    for a, b in p.sides():
        v = (b[0] - a[0], b[1] - a[1])
        if v[1] == 0:
            continue
        if abs(primitive(v)[1]) != 1:
            return False
    return True


def _h_transverse_by_lines(p: LatticePolygon) -> bool:
    """Independent characterization: each line y = r meets the boundary in
    lattice points, a full side, or not at all.  Used for cross-checking."""
    _, ymin, _, ymax = p.bounding_box()
    for r in range(ymin, ymax + 1):
        for a, b in p.sides():
            lo, hi = sorted((a[1], b[1]))
            if lo < r < hi:
                # interior crossing of a non-horizontal side
                num = a[0] * (b[1] - r) - b[0] * (a[1] - r)
                if num % (b[1] - a[1]) != 0:
                    return False
    return True


def _boundary_x_range(p: LatticePolygon, y: int) -> Tuple[Fraction, Fraction]:
    xs: List[Fraction] = []
    for a, b in p.sides():
        lo, hi = sorted((a[1], b[1]))
        if lo <= y <= hi:
            if a[1] == b[1]:
                xs.extend([Fraction(a[0]), Fraction(b[0])])
            else:
                t = Fraction(y - a[1], b[1] - a[1])
                xs.append(Fraction(a[0]) + t * (b[0] - a[0]))
    return min(xs), max(xs)


def slice_profile(p: LatticePolygon) -> SliceProfile:
    """Slice lengths a_r = |Delta ∩ {y = r0 + r}| for 0 <= r <= H."""
    if not is_h_transverse(p):
        raise errors.NotHTransverse("slice profile requires an h-transverse polygon")
    _, ymin, _, ymax = p.bounding_box()
    heights = []
    for y in range(ymin, ymax + 1):
        lo, hi = _boundary_x_range(p, y)
        assert lo.denominator == 1 and hi.denominator == 1
        heights.append(int(hi - lo))
    return SliceProfile(r0=ymin, heights=tuple(heights))


def strip_boundaries(p: LatticePolygon) -> Tuple[List[int], List[int]]:
    """x_L(r0+r) and x_R(r0+r) for 0 <= r <= H, as integers (h-transverse)."""
    if not is_h_transverse(p):
        raise errors.NotHTransverse("strip boundaries require an h-transverse polygon")
    _, ymin, _, ymax = p.bounding_box()
    left, right = [], []
    for y in range(ymin, ymax + 1):
        lo, hi = _boundary_x_range(p, y)
        left.append(int(lo))
        right.append(int(hi))
    return left, right


def strip_leg_slopes(p: LatticePolygon) -> Tuple[List[int], List[int]]:
    """Per-strip boundary drifts (lambda_r, rho_r) for strips r = 1..H.

    Strip r lies between heights r0+r-1 and r0+r.  The floor dual to strip r
    carries the left leg (-1, lambda_r) and the right leg (1, -rho_r): these
    are the primitive outer normals of the strip's non-horizontal sides.
    """
    left, right = strip_boundaries(p)
    lambdas = [left[r] - left[r - 1] for r in range(1, len(left))]
    rhos = [right[r] - right[r - 1] for r in range(1, len(right))]
    return lambdas, rhos


def interior_lattice_count(p: LatticePolygon) -> int:
    """Number of lattice points strictly inside the polygon."""
    xmin, ymin, xmax, ymax = p.bounding_box()
    count = 0
    for y in range(ymin + 1, ymax):
        for x in range(xmin, xmax + 1):
            if p.contains((x, y), strict=True):
                count += 1
    return count


def pick_consistent(p: LatticePolygon) -> bool:
    """2*area == 2*I + B - 2, in exact integers."""
    return 2 * p.area() == 2 * interior_lattice_count(p) + p.boundary_lattice_count() - 2


def is_primitive_cell(c: LatticePolygon) -> bool:
    """True iff a triangle/parallelogram contains no lattice points beyond
    its vertices, i.e. its area is the minimum (n-2)/2."""
    n = len(c.vertices)
    if n == 3:
        return c.area() == Fraction(1, 2)
    if n == 4:
        v = c.vertices
        if (v[1][0] - v[0][0], v[1][1] - v[0][1]) != (v[2][0] - v[3][0], v[2][1] - v[3][1]):
            raise errors.NotTriangleOrParallelogram("quadrilateral is not a parallelogram")
        return c.area() == 1
    raise errors.NotTriangleOrParallelogram(f"cell has {n} vertices")


def reduced_dual_degree(p: LatticePolygon) -> TropicalDegree:
    """For each side of integral length L with primitive outer normal n,
    emit L copies of n.  The result sums to zero and has |degree| equal to
    the lattice perimeter."""
    slopes: List[Tuple[int, int]] = []
    for a, b in p.sides():
        v = (b[0] - a[0], b[1] - a[1])
        length = ilength(v)
        u = primitive(v)
        normal = (u[1], -u[0])  # outer normal for ccw orientation
        slopes.extend([normal] * length)
    return make_degree(slopes)


def has_bottom_horizontal_side(p: LatticePolygon) -> bool:
    _, ymin, _, _ = p.bounding_box()
    return any(a[1] == b[1] == ymin for a, b in p.sides())


def has_top_horizontal_side(p: LatticePolygon) -> bool:
    _, _, _, ymax = p.bounding_box()
    return any(a[1] == b[1] == ymax for a, b in p.sides())


def satisfies_sufficient_admissibility(p: LatticePolygon) -> bool:
    """Sufficient condition for very-admissibility: a horizontal side at the
    bottom level and a_0 >= a_1 - 1."""
    if not is_h_transverse(p):
        raise errors.NotHTransverse("admissibility test requires an h-transverse polygon")
    if not has_bottom_horizontal_side(p):
        return False
    prof = slice_profile(p)
    return prof.heights[0] >= prof.heights[1] - 1


# common example polygons

def triangle(d: int) -> LatticePolygon:
    """The degree-d triangle (0,0), (d,0), (0,d)."""
    return validate_polygon([(0, 0), (d, 0), (0, d)])


def rectangle(w: int, h: int) -> LatticePolygon:
    return validate_polygon([(0, 0), (w, 0), (w, h), (0, h)])


def trapeze(k: int, l: int, n: int) -> LatticePolygon:
    """Trapeze (0,0), (0,k), (l,k), (l+kn,0): height k, top side l, drift n."""
    return validate_polygon([(0, 0), (0, k), (l, k), (l + k * n, 0)])
