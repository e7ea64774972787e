"""Parametrized tropical plane curves as exact geometric objects.

A curve is a weighted metric graph with ordered legs, a planar position for
every vertex, and an integer slope vector for every oriented edge and leg.
Validation enforces connectivity, stability, balancing, and position
coherence.  All geometry (self-intersections, simplicity, unimodularity)
is exact: segments and rays are intersected by solving 2x2 rational systems.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import errors
from .geometry import Piece, cross, ilength, primitive, vsub
from .linalg import nullspace, rank, simplex_max
from .polygon import TropicalDegree, make_degree

Slope = Tuple[int, int]
Pos = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int
    length: Fraction
    slope: Slope  # oriented tail -> head


@dataclass(frozen=True)
class Leg:
    id: int
    anchor: int
    slope: Slope  # (0,0) marks a contracted leg


@dataclass(frozen=True)
class CombinatorialType:
    """Discrete shadow of a curve: weighted graph, ordered legs, slopes."""

    weights: Tuple[Tuple[int, int], ...]          # (vertex id, weight)
    edges: Tuple[Tuple[int, int, int, Slope], ...]  # (id, tail, head, slope)
    legs: Tuple[Tuple[int, int, Slope], ...]        # ordered (id, anchor, slope)

    def weight_map(self) -> Dict[int, int]:
        return dict(self.weights)

    def genus(self) -> int:
        return len(self.edges) - len(self.weights) + 1 + sum(w for _, w in self.weights)

    def degree(self) -> TropicalDegree:
        return make_degree([s for _, _, s in self.legs if s != (0, 0)])

    def star(self, v: int) -> List[Slope]:
        out = []
        for _, t, h, s in self.edges:
            if t == v:
                out.append(s)
            if h == v:
                out.append((-s[0], -s[1]))
        for _, anchor, s in self.legs:
            if anchor == v:
                out.append(s)
        return out

    def valence(self, v: int) -> int:
        n = 0
        for _, t, h, _ in self.edges:
            n += (t == v) + (h == v)
        n += sum(1 for _, anchor, _ in self.legs if anchor == v)
        return n

    def is_balanced(self) -> bool:
        for v, _ in self.weights:
            st = self.star(v)
            if (sum(s[0] for s in st), sum(s[1] for s in st)) != (0, 0):
                return False
        return True


@dataclass(frozen=True)
class ParametrizedTropicalCurve:
    weights: Tuple[Tuple[int, int], ...]
    edges: Tuple[Edge, ...]
    legs: Tuple[Leg, ...]
    positions: Tuple[Tuple[int, Pos], ...]

    _pos: Dict[int, Pos] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_pos", dict(self.positions))

    def position(self, v: int) -> Pos:
        return self._pos[v]

    def weight_map(self) -> Dict[int, int]:
        return dict(self.weights)

    def vertex_ids(self) -> List[int]:
        return [v for v, _ in self.weights]

    def star(self, v: int) -> List[Tuple[Slope, str, int]]:
        """Oriented star: (slope pointing away from v, kind, id)."""
        out = []
        for e in self.edges:
            if e.tail == v:
                out.append((e.slope, "edge", e.id))
            if e.head == v:
                out.append(((-e.slope[0], -e.slope[1]), "edge", e.id))
        for l in self.legs:
            if l.anchor == v:
                out.append((l.slope, "leg", l.id))
        return out

    def valence(self, v: int) -> int:
        return len(self.star(v))

    def type(self) -> CombinatorialType:
        return CombinatorialType(
            weights=self.weights,
            edges=tuple((e.id, e.tail, e.head, e.slope) for e in self.edges),
            legs=tuple((l.id, l.anchor, l.slope) for l in self.legs),
        )

    def translate(self, dx: Fraction, dy: Fraction) -> "ParametrizedTropicalCurve":
        pos = tuple((v, (p[0] + dx, p[1] + dy)) for v, p in self.positions)
        return ParametrizedTropicalCurve(self.weights, self.edges, self.legs, pos)

    def reflect(self, flip_x: bool = False, flip_y: bool = False) -> "ParametrizedTropicalCurve":
        sx = -1 if flip_x else 1
        sy = -1 if flip_y else 1

        def rs(s):
            return (sx * s[0], sy * s[1])

        edges = tuple(Edge(e.id, e.tail, e.head, e.length, rs(e.slope)) for e in self.edges)
        legs = tuple(Leg(l.id, l.anchor, rs(l.slope)) for l in self.legs)
        pos = tuple((v, (sx * p[0], sy * p[1])) for v, p in self.positions)
        return ParametrizedTropicalCurve(self.weights, edges, legs, pos)

    # geometric pieces of the image
    def pieces(self) -> List[Tuple[Piece, str, int]]:
        out = []
        for e in self.edges:
            out.append((Piece(self.position(e.tail), e.slope, e.length), "edge", e.id))
        for l in self.legs:
            if l.slope != (0, 0):
                out.append((Piece(self.position(l.anchor), l.slope, None), "leg", l.id))
        return out

    def slope_of(self, kind: str, ref: int) -> Slope:
        if kind == "edge":
            return next(e.slope for e in self.edges if e.id == ref)
        return next(l.slope for l in self.legs if l.id == ref)


def make_curve(vertices, edges, legs, positions) -> ParametrizedTropicalCurve:
    """Assemble and validate a curve.

    vertices: [(id, weight)]; edges: [(id, tail, head, length, slope)];
    legs: ordered [(id, anchor, slope)]; positions: {id: (x, y)}.
    """
    weights = tuple((int(v), int(w)) for v, w in vertices)
    es = tuple(
        Edge(int(i), int(t), int(h), Fraction(ln), (int(s[0]), int(s[1])))
        for i, t, h, ln, s in edges
    )
    ls = tuple(Leg(int(i), int(a), (int(s[0]), int(s[1]))) for i, a, s in legs)
    pos = tuple(sorted((int(v), (Fraction(p[0]), Fraction(p[1]))) for v, p in positions.items()))
    return validate_curve(ParametrizedTropicalCurve(weights, es, ls, pos))


def validate_curve(c: ParametrizedTropicalCurve) -> ParametrizedTropicalCurve:
    """Check all structural invariants; return the curve or raise the first
    violation (Unbalanced, PositionMismatch, Disconnected, Unstable)."""
    ids = [v for v, _ in c.weights]
    if len(set(ids)) != len(ids):
        raise errors.CurveError("duplicate vertex id")
    idset = set(ids)
    if {v for v, _ in c.positions} != idset:
        raise errors.CurveError("positions must cover exactly the vertex set")
    if any(w < 0 for _, w in c.weights):
        raise errors.CurveError("negative vertex weight")
    eids = [e.id for e in c.edges]
    lids = [l.id for l in c.legs]
    if len(set(eids)) != len(eids) or len(set(lids)) != len(lids):
        raise errors.CurveError("duplicate edge or leg id")

    for e in c.edges:
        if e.tail not in idset or e.head not in idset:
            raise errors.CurveError(f"edge {e.id} has unknown endpoint")
        if e.length <= 0:
            raise errors.CurveError(f"edge {e.id} has non-positive length")
        if e.slope == (0, 0):
            raise errors.CurveError(f"edge {e.id} is contracted (slope (0,0) edges are not allowed)")
    for l in c.legs:
        if l.anchor not in idset:
            raise errors.CurveError(f"leg {l.id} has unknown anchor")

    # connectivity through edges
    adj: Dict[int, List[int]] = {v: [] for v in ids}
    for e in c.edges:
        adj[e.tail].append(e.head)
        adj[e.head].append(e.tail)
    seen = {ids[0]}
    stack = [ids[0]]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if seen != idset:
        raise errors.Disconnected(f"{len(idset) - len(seen)} vertices unreachable")

    wm = c.weight_map()
    for v in ids:
        if 2 * wm[v] + c.valence(v) < 3:
            raise errors.Unstable(f"vertex {v}: 2*weight + valence < 3")

    for e in c.edges:
        pt, ph = c.position(e.tail), c.position(e.head)
        if (pt[0] + e.length * e.slope[0], pt[1] + e.length * e.slope[1]) != ph:
            raise errors.PositionMismatch(f"edge {e.id}: head != tail + length*slope")

    for v in ids:
        st = c.star(v)
        sx = sum(s[0] for s, _, _ in st)
        sy = sum(s[1] for s, _, _ in st)
        if (sx, sy) != (0, 0):
            raise errors.Unbalanced(f"vertex {v}: star sums to ({sx},{sy})")
    return c


def genus(c) -> int:
    """1 - chi + sum of weights = |E| - |V| + 1 + sum w for connected curves."""
    if isinstance(c, CombinatorialType):
        return c.genus()
    return len(c.edges) - len(c.weights) + 1 + sum(w for _, w in c.weights)


def degree(c) -> TropicalDegree:
    """Multiset of nonzero leg slopes (contracted marker legs excluded)."""
    if isinstance(c, CombinatorialType):
        return c.degree()
    return make_degree([l.slope for l in c.legs if l.slope != (0, 0)])


# -- simplicity and intersections --------------------------------------------


@dataclass(frozen=True)
class SimplicityReport:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _gamma_point(c: ParametrizedTropicalCurve, kind: str, ref: int, t: Fraction, tmax):
    """Identify a point of the abstract curve: collapse piece endpoints to
    their vertices so that adjacent pieces share the same point."""
    if t == 0:
        anchor = (
            next(e.tail for e in c.edges if e.id == ref)
            if kind == "edge"
            else next(l.anchor for l in c.legs if l.id == ref)
        )
        return ("v", anchor)
    if kind == "edge" and tmax is not None and t == tmax:
        return ("v", next(e.head for e in c.edges if e.id == ref))
    return (kind[0], ref, t)


def _intersection_fibers(c: ParametrizedTropicalCurve):
    """Map image point -> set of curve points with >= 2 preimages; also
    reports whether any two pieces overlap in a segment."""
    pieces = c.pieces()
    fibers: Dict[Tuple[Fraction, Fraction], set] = {}
    for (p1, k1, r1), (p2, k2, r2) in itertools.combinations(pieces, 2):
        res = _intersect(p1, p2)
        if res[0] == "overlap":
            return None, (k1, r1, k2, r2)
        if res[0] == "point":
            _, pt, t1, t2 = res
            g1 = _gamma_point(c, k1, r1, t1, p1.tmax)
            g2 = _gamma_point(c, k2, r2, t2, p2.tmax)
            if g1 != g2:
                fibers.setdefault(pt, set()).update([g1, g2])
    return fibers, None


def _intersect(a: Piece, b: Piece):
    from .geometry import intersect_pieces

    return intersect_pieces(a, b)


def is_simple(c: ParametrizedTropicalCurve) -> SimplicityReport:
    """Weightless + 3-valent + immersion, every fiber has <= 2 points, and
    no 2-point fiber contains a vertex.  Contracted marker legs are ignored."""
    for v, w in c.weights:
        if w != 0:
            return SimplicityReport(False, f"vertex {v} has weight {w}")
    for v, _ in c.weights:
        st = [(s, k, r) for s, k, r in c.star(v) if s != (0, 0)]
        if len(st) != 3:
            return SimplicityReport(False, f"vertex {v} is not 3-valent")
        dirs = [primitive(s) for s, _, _ in st]
        for d1, d2 in itertools.combinations(dirs, 2):
            if d1 == d2:
                return SimplicityReport(False, f"two parallel directions at vertex {v}")
    fibers, overlap = _intersection_fibers(c)
    if overlap is not None:
        return SimplicityReport(False, f"overlapping pieces {overlap[:2]} and {overlap[2:]}")
    for pt, gamma in fibers.items():
        if len(gamma) > 2:
            return SimplicityReport(False, f"{len(gamma)} preimages at {pt}")
        if any(g[0] == "v" for g in gamma):
            return SimplicityReport(False, f"vertex image meets another branch at {pt}")
    return SimplicityReport(True)


def self_intersections(c: ParametrizedTropicalCurve):
    """Points with exactly two (non-vertex) preimages, for simple curves."""
    rep = is_simple(c)
    if not rep:
        raise errors.NotSimple(rep.reason)
    fibers, _ = _intersection_fibers(c)
    out = []
    for pt, gamma in sorted(fibers.items()):
        branches = sorted(g for g in gamma)
        if len(branches) == 2:
            out.append((pt, (branches[0], branches[1])))
    return out


def vertex_multiplicity(c: ParametrizedTropicalCurve, v: int) -> int:
    """|det| of two distinct star slopes at a weightless 3-valent vertex;
    well defined by balancing."""
    if c.weight_map()[v] != 0:
        raise errors.NotTrivalent(f"vertex {v} has positive weight")
    st = [s for s, _, _ in c.star(v) if s != (0, 0)]
    if len(st) != 3:
        raise errors.NotTrivalent(f"vertex {v} has valence {len(st)}")
    return abs(cross(st[0], st[1]))


def mikhalkin_multiplicity(c: ParametrizedTropicalCurve) -> int:
    """Product of the vertex multiplicities, for simple curves."""
    rep = is_simple(c)
    if not rep:
        raise errors.NotSimple(rep.reason)
    m = 1
    for v, _ in c.weights:
        m *= vertex_multiplicity(c, v)
    return m


def is_unimodular(c: ParametrizedTropicalCurve) -> bool:
    """Simple, and |det(slope_1, slope_2)| = 1 for every pair of distinct
    edges/legs whose images meet."""
    if not is_simple(c):
        return False
    pieces = c.pieces()
    for (p1, k1, r1), (p2, k2, r2) in itertools.combinations(pieces, 2):
        res = _intersect(p1, p2)
        if res[0] == "none":
            continue
        s1, s2 = c.slope_of(k1, r1), c.slope_of(k2, r2)
        if abs(cross(s1, s2)) != 1:
            return False
    return True


def combinatorial_type(c: ParametrizedTropicalCurve) -> CombinatorialType:
    return c.type()


# -- isomorphism of combinatorial types ---------------------------------------


def _vertex_invariant(t: CombinatorialType, v: int, wm):
    st = sorted(t.star(v))
    return (wm[v], len(st), tuple(st))


def types_isomorphic(a: CombinatorialType, b: CombinatorialType, respect_leg_order: bool = True) -> bool:
    """Isomorphism of weighted slope-labelled graphs.

    With respect_leg_order the i-th leg must map to the i-th leg (slopes
    equal); otherwise legs are matched as a multiset.  Internal vertices are
    matched by backtracking on adjacency with slope equality.
    """
    if len(a.weights) != len(b.weights) or len(a.edges) != len(b.edges) or len(a.legs) != len(b.legs):
        return False
    wa, wb = a.weight_map(), b.weight_map()
    if sorted(_vertex_invariant(a, v, wa) for v in wa) != sorted(
        _vertex_invariant(b, v, wb) for v in wb
    ):
        return False
    la, lb = list(a.legs), list(b.legs)
    if respect_leg_order:
        if any(sa != sb for (_, _, sa), (_, _, sb) in zip(la, lb)):
            return False
    else:
        if sorted(s for _, _, s in la) != sorted(s for _, _, s in lb):
            return False

    averts = [v for v, _ in a.weights]
    binv: Dict[tuple, List[int]] = {}
    for v in wb:
        binv.setdefault(_vertex_invariant(b, v, wb), []).append(v)

    a_edges_at: Dict[int, List[Tuple[int, int, Slope]]] = {v: [] for v in wa}
    for _, t, h, s in a.edges:
        a_edges_at[t].append((t, h, s))
        a_edges_at[h].append((t, h, s))

    def edge_multiset(t: CombinatorialType, u: int, v: int):
        out = []
        for _, et, eh, es in t.edges:
            if (et, eh) == (u, v):
                out.append(es)
            elif (et, eh) == (v, u):
                out.append((-es[0], -es[1]))
        return sorted(out)

    def compatible(mapping, v, w) -> bool:
        # edges between v and already-mapped vertices must match as multisets
        for u in mapping:
            if edge_multiset(a, u, v) != [
                s for s in edge_multiset(b, mapping[u], w)
            ]:
                return False
        # loops
        if edge_multiset(a, v, v) != edge_multiset(b, w, w):
            return False
        return True

    def legs_ok(mapping) -> bool:
        if respect_leg_order:
            for (ia, anch_a, sa), (ib, anch_b, sb) in zip(la, lb):
                if mapping[anch_a] != anch_b or sa != sb:
                    return False
            return True
        # unordered: bipartite matching on (slope, mapped anchor)
        need = {}
        for _, anch, s in la:
            need[(mapping[anch], s)] = need.get((mapping[anch], s), 0) + 1
        have = {}
        for _, anch, s in lb:
            have[(anch, s)] = have.get((anch, s), 0) + 1
        return need == have

    order = sorted(averts, key=lambda v: (len(binv.get(_vertex_invariant(a, v, wa), [])),))

    def backtrack(i, mapping, used):
        if i == len(order):
            return legs_ok(mapping)
        v = order[i]
        for w in binv.get(_vertex_invariant(a, v, wa), []):
            if w in used:
                continue
            if compatible(mapping, v, w):
                mapping[v] = w
                used.add(w)
                if backtrack(i + 1, mapping, used):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return backtrack(0, {}, set())


# -- moduli strata -------------------------------------------------------------


def _stratum_system(t: CombinatorialType):
    """Rows of the linear system h(head) - h(tail) = len_e * slope_e.

    Unknown layout: [len_e for edges...] + [x_v, y_v for vertices...].
    """
    vids = [v for v, _ in t.weights]
    vindex = {v: i for i, v in enumerate(vids)}
    ne = len(t.edges)
    ncols = ne + 2 * len(vids)
    rows = []
    for k, (_, tail, head, s) in enumerate(t.edges):
        for axis in (0, 1):
            row = [Fraction(0)] * ncols
            row[ne + 2 * vindex[head] + axis] += 1
            row[ne + 2 * vindex[tail] + axis] -= 1
            row[k] -= s[axis]
            rows.append(row)
    return rows, ne, ncols


def stratum_dimension(t: CombinatorialType) -> Optional[int]:
    """Dimension of the stratum of curves of this type, or None (empty) when
    no assignment with all edge lengths positive exists.

    The stratum lives in R^E x (R^2)^V cut out by the coherence equations;
    its dimension is the nullity of the system, provided the open cone
    {lengths > 0} is nonempty.
    """
    if not t.is_balanced():
        raise errors.Unbalanced("type is not balanced")
    rows, ne, ncols = _stratum_system(t)
    dim = ncols - rank(rows) if rows else ncols
    if ne and not _positive_lengths_feasible(rows, ne, ncols):
        return None
    return dim


def _positive_lengths_feasible(rows, ne, ncols) -> bool:
    """Is there a solution with every length strictly positive?

    Scale-invariance makes strict feasibility equivalent to: maximize t
    subject to the system, len_e >= t, t <= 1 having optimum 1.  Encoded as
    a standard-form LP with split free variables.
    """
    # variables: s_e >= 0 (len_e = s_e + t), t >= 0, sigma >= 0, h+ and h- >= 0
    nv = ncols - ne
    n = ne + 2 + 2 * nv
    a = []
    b = []
    for row in rows:
        r = [Fraction(0)] * n
        for e in range(ne):
            r[e] = row[e]
        r[ne] = sum(row[:ne])  # t appears in every length
        for j in range(nv):
            r[ne + 2 + 2 * j] = row[ne + j]
            r[ne + 2 + 2 * j + 1] = -row[ne + j]
        a.append(r)
        b.append(Fraction(0))
    tcap = [Fraction(0)] * n
    tcap[ne] = Fraction(1)
    tcap[ne + 1] = Fraction(1)
    a.append(tcap)
    b.append(Fraction(1))
    cvec = [Fraction(0)] * n
    cvec[ne] = Fraction(1)
    res = simplex_max(cvec, a, b)
    return res is not None and res[0] > 0


def expected_nice_dimension(t: CombinatorialType) -> int:
    return len(t.degree()) + t.genus() - 1


def is_nice(t: CombinatorialType) -> bool:
    """Weightless, 3-valent, and the stratum has the expected dimension
    |degree| + genus - 1."""
    if any(w != 0 for _, w in t.weights):
        return False
    if any(t.valence(v) != 3 for v, _ in t.weights):
        return False
    return stratum_dimension(t) == expected_nice_dimension(t)


def is_simple_wall(t: CombinatorialType) -> bool:
    """Weightless, exactly one 4-valent vertex (rest 3-valent), stratum of
    dimension |degree| + genus - 2."""
    if any(w != 0 for _, w in t.weights):
        return False
    valences = sorted(t.valence(v) for v, _ in t.weights)
    if valences.count(4) != 1 or any(x not in (3, 4) for x in valences):
        return False
    return stratum_dimension(t) == expected_nice_dimension(t) - 1


def contract_edge(t: CombinatorialType, edge_id: int) -> CombinatorialType:
    """Contract a non-loop bounded edge, merging its head into its tail."""
    e = next(e for e in t.edges if e[0] == edge_id)
    _, tail, head, _ = e
    if tail == head:
        raise errors.CurveError("cannot contract a loop")
    wm = t.weight_map()
    weights = tuple(
        (v, w + (wm[head] if v == tail else 0)) for v, w in t.weights if v != head
    )
    edges = tuple(
        (i, tail if et == head else et, tail if eh == head else eh, s)
        for i, et, eh, s in t.edges
        if i != edge_id
    )
    legs = tuple((i, tail if a == head else a, s) for i, a, s in t.legs)
    return CombinatorialType(weights, edges, legs)


@dataclass(frozen=True)
class WallResolution:
    type: Optional[CombinatorialType]
    new_edge: Optional[int]
    empty: bool
    reason: str = ""


def wall_resolutions(w: CombinatorialType) -> List[WallResolution]:
    """The three splittings of the unique 4-valent vertex into two 3-valent
    vertices joined by a new edge whose slope is forced by balancing.

    A resolution whose forced slope vanishes, or whose stratum admits no
    positive edge lengths, is flagged empty.
    """
    if not is_simple_wall(w):
        raise errors.NotAWall("type is not a simple wall")
    v4 = next(v for v, _ in w.weights if w.valence(v) == 4)

    # star items with enough identity to reattach: (kind, id, end, slope)
    items = []
    for i, t, h, s in w.edges:
        if t == v4:
            items.append(("edge_tail", i, s))
        if h == v4:
            items.append(("edge_head", i, (-s[0], -s[1])))
    for i, a, s in w.legs:
        if a == v4:
            items.append(("leg", i, s))
    assert len(items) == 4

    new_vertex = max(v for v, _ in w.weights) + 1
    new_edge_id = (max((e[0] for e in w.edges), default=0) + 1)
    out = []
    for pair in ([0, 1], [0, 2], [0, 3]):
        group1 = [items[i] for i in pair]
        group2 = [items[i] for i in range(4) if i not in pair]
        s_new = tuple(sum(s[k] for _, _, s in group2) for k in (0, 1))
        if s_new == (0, 0):
            out.append(WallResolution(None, None, True, "forced slope is zero"))
            continue
        weights = w.weights + ((new_vertex, 0),)
        edges = []
        for i, t, h, s in w.edges:
            nt, nh = t, h
            for kind, ref, _ in group2:
                if kind == "edge_tail" and ref == i and t == v4:
                    nt = new_vertex
                if kind == "edge_head" and ref == i and h == v4:
                    nh = new_vertex
            edges.append((i, nt, nh, s))
        edges.append((new_edge_id, v4, new_vertex, s_new))
        legs = []
        for i, a, s in w.legs:
            na = a
            if any(kind == "leg" and ref == i for kind, ref, _ in group2):
                na = new_vertex
            legs.append((i, na, s))
        t_res = CombinatorialType(tuple(weights), tuple(edges), tuple(legs))
        if not t_res.is_balanced():
            out.append(WallResolution(None, None, True, "unbalanced resolution"))
            continue
        dim = stratum_dimension(t_res)
        if dim is None:
            out.append(WallResolution(t_res, new_edge_id, True, "no positive-length curve"))
        else:
            out.append(WallResolution(t_res, new_edge_id, False))
    return out


def solution_space(t: CombinatorialType):
    """Nullspace basis of the stratum system (lengths first)."""
    rows, ne, ncols = _stratum_system(t)
    if not rows:
        basis = []
        for i in range(ncols):
            v = [Fraction(0)] * ncols
            v[i] = Fraction(1)
            basis.append(v)
        return basis, ne
    return nullspace(rows), ne
