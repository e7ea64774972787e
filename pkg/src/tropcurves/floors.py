"""Floor decomposition, stretchedness, and the skeleton calculus.

A floor-decomposed curve splits into horizontal *floors* (x-monotone paths
with one left and one right leg) joined by vertical *elevators* (edges or
legs of slope (0, +-w)).  The :class:`Skeleton` is the exact combinatorial
core of a stretched curve: per-floor leg slopes plus the left-to-right list
of elevators with their floor attachments and weights.  Skeletons realize
deterministically to stretched witness curves, and all wall-crossing moves
are surgeries on skeletons.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import errors
from .curve import (
    ParametrizedTropicalCurve,
    degree,
    genus,
    is_simple,
    make_curve,
    self_intersections,
)
from .geometry import ilength
from .polygon import (
    LatticePolygon,
    SliceProfile,
    TropicalDegree,
    slice_profile,
    validate_polygon,
)


# -- floor decomposition of a concrete curve ---------------------------------


@dataclass(frozen=True)
class Floor:
    index: int                  # 1..H, bottom to top
    vertices: Tuple[int, ...]   # in increasing x order
    edges: Tuple[int, ...]      # floor edge ids
    legs: Tuple[int, ...]       # non-vertical leg ids anchored on this floor
    level: Fraction             # y of the leftmost vertex


@dataclass(frozen=True)
class ElevatorInfo:
    kind: str                   # "edge" or "leg"
    ref: int
    weight: int
    x: Fraction
    lower: int                  # floor index; 0 means the virtual bottom floor
    upper: int                  # floor index; H+1 means the virtual top floor


@dataclass(frozen=True)
class FloorDecomposition:
    curve: ParametrizedTropicalCurve
    floors: Tuple[Floor, ...]
    elevators: Tuple[ElevatorInfo, ...]   # in increasing x order

    @property
    def H(self) -> int:
        return len(self.floors)

    def elevator_between(self, lo: int, hi: int) -> List[ElevatorInfo]:
        return [e for e in self.elevators if (e.lower, e.upper) == (lo, hi)]


def _decompose(c: ParametrizedTropicalCurve, allow_ties: bool) -> FloorDecomposition:
    for e in c.edges:
        if e.slope[0] not in (-1, 0, 1):
            raise errors.NotFloorDecomposed(f"edge {e.id} slope {e.slope}")
    for l in c.legs:
        if l.slope != (0, 0) and l.slope[0] not in (-1, 0, 1):
            raise errors.NotFloorDecomposed(f"leg {l.id} slope {l.slope}")

    adj: Dict[int, List[int]] = {v: [] for v, _ in c.weights}
    for e in c.edges:
        if e.slope[0] != 0:
            adj[e.tail].append(e.head)
            adj[e.head].append(e.tail)
    comp: Dict[int, int] = {}
    comps: List[List[int]] = []
    for v, _ in c.weights:
        if v in comp:
            continue
        group = [v]
        comp[v] = len(comps)
        stack = [v]
        while stack:
            for u in adj[stack.pop()]:
                if u not in comp:
                    comp[u] = len(comps)
                    group.append(u)
                    stack.append(u)
        comps.append(group)

    floors = []
    for idx, group in enumerate(comps):
        floor_edges = [e.id for e in c.edges if e.slope[0] != 0 and comp[e.tail] == idx]
        floor_legs = [l.id for l in c.legs if comp.get(l.anchor) == idx and l.slope[0] in (-1, 1)]
        if not floor_edges and not floor_legs:
            raise errors.NotFloorDecomposed(
                f"component of vertex {group[0]} carries no non-contracted floor piece"
            )
        verts = sorted(group, key=lambda v: (c.position(v)[0], c.position(v)[1]))
        floors.append(
            Floor(
                index=0,
                vertices=tuple(verts),
                edges=tuple(floor_edges),
                legs=tuple(floor_legs),
                level=c.position(verts[0])[1],
            )
        )
    floors.sort(key=lambda f: (f.level, c.position(f.vertices[0])[0]))
    floors = tuple(replace(f, index=i + 1) for i, f in enumerate(floors))
    floor_of = {v: f.index for f in floors for v in f.vertices}
    H = len(floors)

    elevators = []
    for e in c.edges:
        if e.slope[0] != 0:
            continue
        lo_v, hi_v = (e.tail, e.head) if e.slope[1] > 0 else (e.head, e.tail)
        elevators.append(
            ElevatorInfo("edge", e.id, ilength(e.slope), c.position(e.tail)[0],
                         floor_of[lo_v], floor_of[hi_v])
        )
    for l in c.legs:
        if l.slope == (0, 0) or l.slope[0] != 0:
            continue
        fl = floor_of[l.anchor]
        down = l.slope[1] < 0
        elevators.append(
            ElevatorInfo("leg", l.id, ilength(l.slope), c.position(l.anchor)[0],
                         0 if down else fl, fl if down else H + 1)
        )
    elevators.sort(key=lambda e: (e.x, e.kind, e.ref))
    if not allow_ties:
        for a, b in zip(elevators, elevators[1:]):
            if a.x == b.x:
                raise errors.AmbiguousOrder(
                    f"elevators {a.ref} and {b.ref} share x = {a.x}; perturb first"
                )
    return FloorDecomposition(curve=c, floors=tuple(floors), elevators=tuple(elevators))


def floor_decompose(c: ParametrizedTropicalCurve) -> FloorDecomposition:
    """Partition a curve into floors and elevators.

    Raises NotFloorDecomposed when a slope has x-component outside {0, +-1}
    or a component carries no non-contracted piece, and AmbiguousOrder when
    two elevators share an x-coordinate (use :func:`perturb_elevators`).
    """
    return _decompose(c, allow_ties=False)


def perturb_elevators(c: ParametrizedTropicalCurve) -> ParametrizedTropicalCurve:
    """Deterministic tie-break for coincident elevator x-coordinates: the
    skeleton is re-realized with ties broken by persistent id, preserving the
    combinatorial type."""
    fd = _decompose(c, allow_ties=True)
    return realize(_skeleton_of(c, fd))


def width(c: ParametrizedTropicalCurve) -> Fraction:
    xs = [c.position(v)[0] for v, _ in c.weights]
    return max(xs) - min(xs)


def default_lambda(nabla: TropicalDegree) -> int:
    return 4 * len(nabla) ** 2


def is_stretched(c: ParametrizedTropicalCurve, lam) -> bool:
    """|y_v - y_u| >= lam * max(width, 1) for vertices on distinct floors."""
    try:
        fd = _decompose(c, allow_ties=True)
    except errors.FloorError:
        return False
    bound = Fraction(lam) * max(width(c), Fraction(1))
    floor_of = {v: f.index for f in fd.floors for v in f.vertices}
    for (v, _), (u, _) in itertools.combinations(c.weights, 2):
        if floor_of[v] != floor_of[u]:
            if abs(c.position(v)[1] - c.position(u)[1]) < bound:
                return False
    return True


def is_ssfd(c: ParametrizedTropicalCurve, lam=None) -> bool:
    """Simple, floor decomposed, and stretched."""
    if lam is None:
        lam = default_lambda(degree(c))
    if not is_simple(c):
        return False
    try:
        floor_decompose(c)
    except errors.FloorError:
        return False
    return is_stretched(c, lam)


def restretch(c: ParametrizedTropicalCurve, gaps: Sequence) -> ParametrizedTropicalCurve:
    """Translate floors vertically to realize prescribed consecutive level
    gaps, recomputing elevator lengths; the combinatorial type is unchanged."""
    fd = floor_decompose(c)
    gaps = [Fraction(g) for g in gaps]
    if len(gaps) != fd.H - 1:
        raise errors.InfeasibleGaps(f"need {fd.H - 1} gaps, got {len(gaps)}")
    if any(g <= 0 for g in gaps):
        raise errors.InfeasibleGaps("gaps must be positive")

    shift: Dict[int, Fraction] = {}
    target = fd.floors[0].level
    for i, f in enumerate(fd.floors):
        if i > 0:
            target = target + gaps[i - 1]
        shift[f.index] = target - f.level
    vshift = {v: shift[f.index] for f in fd.floors for v in f.vertices}

    positions = {v: (c.position(v)[0], c.position(v)[1] + vshift[v]) for v, _ in c.weights}
    edges = []
    for e in c.edges:
        if e.slope[0] == 0:
            dy = positions[e.head][1] - positions[e.tail][1]
            ln = dy / e.slope[1]
            if ln <= 0:
                raise errors.InfeasibleGaps(f"elevator {e.id} would get length {ln}")
            edges.append((e.id, e.tail, e.head, ln, e.slope))
        else:
            edges.append((e.id, e.tail, e.head, e.length, e.slope))
    out = make_curve(
        vertices=c.weights,
        edges=edges,
        legs=[(l.id, l.anchor, l.slope) for l in c.legs],
        positions=positions,
    )
    assert out.type() == c.type()
    return out


def restretch_to_lambda(c: ParametrizedTropicalCurve, lam) -> ParametrizedTropicalCurve:
    """Re-establish lam-stretchedness, keeping the combinatorial type."""
    fd = floor_decompose(c)
    if fd.H == 1:
        return c
    w = max(width(c), Fraction(1))
    spans = []
    for f in fd.floors:
        ys = [c.position(v)[1] for v in f.vertices]
        spans.append((f.level - min(ys), max(ys) - f.level))
    gaps = []
    for i in range(fd.H - 1):
        gaps.append(spans[i][1] + spans[i + 1][0] + Fraction(lam) * w + 1)
    out = restretch(c, gaps)
    assert is_stretched(out, lam)
    return out


# -- multiplicity sequences ----------------------------------------------------


@dataclass(frozen=True)
class MultiplicitySequence:
    entries: Tuple[Tuple[int, int, int], ...]  # (band r, left-to-right index i, weight)

    def j(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for r, _, _ in self.entries:
            out[r] = out.get(r, 0) + 1
        return out

    def flat(self) -> Tuple[int, ...]:
        return tuple(w for _, _, w in sorted(self.entries))

    def row(self, r: int) -> Tuple[int, ...]:
        return tuple(w for rr, _, w in sorted(self.entries) if rr == r)


def polygon_from_degree(nabla: TropicalDegree) -> LatticePolygon:
    """The convex lattice polygon dual to a degree (up to translation)."""
    from .dualsub import _angular_sorted
    from .geometry import primitive

    groups: Dict[Tuple[int, int], int] = {}
    for s in nabla.slopes:
        u = primitive(s)
        groups[u] = groups.get(u, 0) + ilength(s)
    normals = _angular_sorted(groups)
    verts = [(0, 0)]
    for n in normals:
        length = groups[n]
        verts.append((verts[-1][0] - n[1] * length, verts[-1][1] + n[0] * length))
    assert verts[-1] == verts[0]
    return validate_polygon(verts[:-1])


def multiplicity_sequence(fd: FloorDecomposition) -> MultiplicitySequence:
    """Weights of upward elevators per band, left to right, for ssfd curves
    without self-intersections whose elevators join consecutive floors."""
    c = fd.curve
    if self_intersections(c):
        raise errors.HasSelfIntersections("multiplicity sequence needs a crossing-free curve")
    H = fd.H
    for e in fd.elevators:
        if e.lower == 0 and e.upper != 1:
            raise errors.NonConsecutiveAdjacency(f"downward leg attached to floor {e.upper}")
        if e.upper == H + 1 and e.lower != H:
            raise errors.NonConsecutiveAdjacency(f"upward leg attached to floor {e.lower}")
        if 1 <= e.lower and e.upper <= H and e.upper != e.lower + 1:
            raise errors.NonConsecutiveAdjacency(f"elevator joins floors {e.lower} and {e.upper}")

    entries = []
    for r in range(0, H + 1):
        row = sorted((e for e in fd.elevators if e.lower == r), key=lambda e: e.x)
        for i, e in enumerate(row, start=1):
            entries.append((r, i, e.weight))
    seq = MultiplicitySequence(tuple(entries))

    prof = slice_profile(polygon_from_degree(degree(c)))
    assert prof.H == H
    for r in range(0, H + 1):
        assert sum(seq.row(r)) == prof.heights[r], (r, seq.row(r), prof.heights)
    jj = seq.j()
    assert sum(jj.get(r, 0) - 1 for r in range(1, H)) == genus(c)
    return seq


def sequence_length(nabla: TropicalDegree, g: int, profile: SliceProfile) -> int:
    """j_0 + ... + j_H: the vertical vectors of the degree pin the boundary
    rows, and the genus identity sum(j_r - 1) = g pins the middle."""
    j0 = nabla.vertical_down()
    jH = nabla.vertical_up()
    H = profile.H
    if j0 != profile.heights[0] or jH != profile.heights[H]:
        raise errors.Inconsistent("vertical degree vectors do not match the slice profile")
    gmax = sum(a - 1 for a in profile.heights[1:H])
    if not 0 <= g <= gmax:
        raise errors.Inconsistent(f"genus {g} outside [0, {gmax}]")
    return j0 + jH + (H - 1) + g


# -- skeletons -------------------------------------------------------------------


@dataclass(frozen=True)
class ElevatorSpec:
    lo: int     # 0 = virtual bottom (downward leg)
    hi: int     # H+1 = virtual top (upward leg)
    w: int
    eid: int    # persistent id: edge id when bounded, leg id when unbounded


@dataclass(frozen=True)
class Skeleton:
    """Combinatorial core of a stretched floor-decomposed curve.

    Elevator list order is the left-to-right order in the plane; it induces
    the attachment order along every floor.
    """

    H: int
    left: Tuple[int, ...]        # alpha_r for floors 1..H: left leg (-1, alpha_r)
    right: Tuple[int, ...]       # beta_r: right leg (1, beta_r)
    left_ids: Tuple[int, ...]
    right_ids: Tuple[int, ...]
    elevators: Tuple[ElevatorSpec, ...]

    def is_bounded(self, e: ElevatorSpec) -> bool:
        return 1 <= e.lo and e.hi <= self.H

    def up_of(self, r: int) -> List[ElevatorSpec]:
        return [e for e in self.elevators if e.lo == r]

    def down_of(self, r: int) -> List[ElevatorSpec]:
        return [e for e in self.elevators if e.hi == r]

    def attachments(self, r: int) -> List[Tuple[int, ElevatorSpec]]:
        return [(k, e) for k, e in enumerate(self.elevators) if e.lo == r or e.hi == r]

    def bounded_elevators(self) -> List[ElevatorSpec]:
        return [e for e in self.elevators if self.is_bounded(e)]

    def genus(self) -> int:
        return len(self.bounded_elevators()) - self.H + 1

    def degree_slopes(self) -> List[Tuple[int, int]]:
        out = []
        for r in range(self.H):
            out.append((-1, self.left[r]))
            out.append((1, self.right[r]))
        for e in self.elevators:
            if e.lo == 0:
                out.append((0, -e.w))
            elif e.hi == self.H + 1:
                out.append((0, e.w))
        return out

    def check(self) -> "Skeleton":
        H = self.H
        assert len(self.left) == len(self.right) == H >= 1
        for e in self.elevators:
            assert 0 <= e.lo < e.hi <= H + 1
            assert not (e.lo == 0 and e.hi == H + 1)
            assert e.w >= 1
        ids = list(self.left_ids) + list(self.right_ids) + [e.eid for e in self.elevators]
        assert len(set(ids)) == len(ids), "persistent ids must be unique"
        for r in range(1, H + 1):
            u = sum(e.w for e in self.up_of(r))
            d = sum(e.w for e in self.down_of(r))
            if self.right[r - 1] != -self.left[r - 1] - u + d:
                raise errors.Unbalanced(
                    f"floor {r}: beta={self.right[r - 1]} != {-self.left[r - 1] - u + d}"
                )
        parent = list(range(H + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in self.bounded_elevators():
            parent[find(e.lo)] = find(e.hi)
        if len({find(r) for r in range(1, H + 1)}) != 1:
            raise errors.Disconnected("floors not connected by bounded elevators")
        return self

    def multiplicity(self) -> int:
        m = 1
        for e in self.elevators:
            ends = (1 if e.lo >= 1 else 0) + (1 if e.hi <= self.H else 0)
            m *= e.w ** ends
        return m

    def crossing_count(self) -> int:
        """Floor crossings by spanning elevators plus same-side leg crossings."""
        n = 0
        for e in self.elevators:
            n += max(0, min(e.hi, self.H + 1) - max(e.lo, 0) - 1)
        for i, j in itertools.combinations(range(self.H), 2):
            if self.left[i] > self.left[j]:
                n += 1
            if self.right[i] > self.right[j]:
                n += 1
        return n

    def band_weight(self, r: int) -> int:
        """Total elevator weight crossing the band between floors r and r+1."""
        return sum(e.w for e in self.elevators if e.lo <= r < e.hi)

    def mult_sequence_rows(self) -> Dict[int, Tuple[int, ...]]:
        """Upward elevator weights per band in left-to-right order (only
        meaningful for crossing-free skeletons)."""
        return {r: tuple(e.w for e in self.up_of(r)) for r in range(0, self.H + 1)}


def _skeleton_of(c: ParametrizedTropicalCurve, fd: FloorDecomposition) -> Skeleton:
    H = fd.H
    left, right, left_ids, right_ids = [], [], [], []
    legmap = {l.id: l for l in c.legs}
    for f in fd.floors:
        ls = [legmap[i] for i in f.legs]
        lefts = [l for l in ls if l.slope[0] == -1]
        rights = [l for l in ls if l.slope[0] == 1]
        if len(lefts) != 1 or len(rights) != 1:
            raise errors.NotFloorDecomposed(
                f"floor {f.index} must carry exactly one left and one right leg"
            )
        left.append(lefts[0].slope[1])
        right.append(rights[0].slope[1])
        left_ids.append(lefts[0].id)
        right_ids.append(rights[0].id)
    els = tuple(ElevatorSpec(e.lower, e.upper, e.weight, e.ref) for e in fd.elevators)
    return Skeleton(H, tuple(left), tuple(right), tuple(left_ids), tuple(right_ids), els).check()


def skeleton_from_curve(c: ParametrizedTropicalCurve) -> Skeleton:
    """Extract the skeleton of a floor-decomposed curve with x-monotone
    floors carrying one left and one right leg each."""
    return _skeleton_of(c, floor_decompose(c))


def realize(sk: Skeleton, lam=None, merged: Optional[Tuple[int, int]] = None) -> ParametrizedTropicalCurve:
    """Deterministic stretched witness of a skeleton.

    Elevator k sits at x = k; a merged pair (i, j) shares x(i), which creates
    the 4-valent wall vertex on their common floor.  Floors are placed bottom
    to top with gaps large enough for lam-stretchedness.
    """
    sk.check()
    H = sk.H
    xs: Dict[int, Fraction] = {}
    pos = 0
    for k in range(len(sk.elevators)):
        if merged is not None and k == merged[1]:
            xs[k] = xs[merged[0]]
        else:
            xs[k] = Fraction(pos)
            pos += 1

    floor_atts: Dict[int, List[Tuple[int, ElevatorSpec]]] = {
        r: sorted(sk.attachments(r), key=lambda ke: (xs[ke[0]], ke[0])) for r in range(1, H + 1)
    }
    for r in range(1, H + 1):
        if not floor_atts[r]:
            raise errors.Disconnected(f"floor {r} has no elevator attachments")

    max_slope = 0
    for r in range(1, H + 1):
        m = -sk.left[r - 1]
        max_slope = max(max_slope, abs(m))
        for _, e in floor_atts[r]:
            m = m - (e.w if e.lo == r else -e.w)
            max_slope = max(max_slope, abs(m))
        assert m == sk.right[r - 1]

    w_total = max(pos - 1, 1)
    if lam is None:
        lam = default_lambda_for(sk)
    var = Fraction(w_total) * (1 + max_slope)
    gap = Fraction(lam) * Fraction(w_total) + 2 * var + 1
    levels = {r: Fraction(r) * gap for r in range(1, H + 1)}

    vertices: List[Tuple[int, int]] = []
    positions: Dict[int, Tuple[Fraction, Fraction]] = {}
    edges: List[tuple] = []
    legs: List[tuple] = []
    floor_vertex_at: Dict[Tuple[int, Fraction], int] = {}
    persistent = set(sk.left_ids) | set(sk.right_ids) | {e.eid for e in sk.elevators}
    fresh_edge = max(persistent) + 1
    vid = 0

    for r in range(1, H + 1):
        vs: List[int] = []
        y = levels[r]
        m = -sk.left[r - 1]
        cur_x = None
        for k, e in floor_atts[r]:
            if cur_x is None or xs[k] != cur_x:
                if cur_x is not None:
                    y = y + m * (xs[k] - cur_x)
                vertices.append((vid, 0))
                positions[vid] = (xs[k], y)
                floor_vertex_at[(r, xs[k])] = vid
                if vs:
                    edges.append((fresh_edge, vs[-1], vid, xs[k] - cur_x, (1, m)))
                    fresh_edge += 1
                vs.append(vid)
                cur_x = xs[k]
                vid += 1
            m = m - (e.w if e.lo == r else -e.w)
        legs.append((sk.left_ids[r - 1], vs[0], (-1, sk.left[r - 1])))
        legs.append((sk.right_ids[r - 1], vs[-1], (1, sk.right[r - 1])))

    for k, e in enumerate(sk.elevators):
        x = xs[k]
        if e.lo == 0:
            legs.append((e.eid, floor_vertex_at[(e.hi, x)], (0, -e.w)))
        elif e.hi == H + 1:
            legs.append((e.eid, floor_vertex_at[(e.lo, x)], (0, e.w)))
        else:
            lo_v = floor_vertex_at[(e.lo, x)]
            hi_v = floor_vertex_at[(e.hi, x)]
            dy = positions[hi_v][1] - positions[lo_v][1]
            assert dy > 0
            edges.append((e.eid, lo_v, hi_v, dy / e.w, (0, e.w)))

    legs.sort(key=lambda t: t[0])
    return make_curve(vertices=vertices, edges=edges, legs=legs, positions=positions)


def default_lambda_for(sk: Skeleton) -> int:
    n_legs = 2 * sk.H + sum(1 for e in sk.elevators if e.lo == 0 or e.hi == sk.H + 1)
    return 4 * n_legs ** 2


def realize_ssfd(sk: Skeleton, lam=None) -> ParametrizedTropicalCurve:
    """Realize and assert the witness is ssfd."""
    c = realize(sk, lam=lam)
    if lam is None:
        lam = default_lambda(degree(c))
    if not is_ssfd(c, lam):
        raise errors.NotSimple("skeleton does not realize to an ssfd curve")
    return c
