"""Dual subdivision of the Newton polygon of a simple curve.

Each complement region of the curve image carries a lattice point: crossing
a branch of weight w and primitive direction u while walking along d shifts
the point by sign(cross(u, d)) * w * rot90(u).  Sampling one point in each
region around a vertex (three sectors) or a self-intersection (four sectors)
and accumulating these shifts along a straight walk from a common base point
yields the corners of the dual triangle/parallelogram exactly.  The whole
collection is then translated onto the target polygon and verified to tile
it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from . import errors
from .curve import ParametrizedTropicalCurve, degree, is_simple, self_intersections
from .geometry import Piece, convex_hull, cross, ilength, intersect_pieces, primitive, rot90, vsub
from .polygon import LatticePolygon, reduced_dual_degree, validate_polygon

Pt = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class DualSubdivision:
    polygon: LatticePolygon
    cells: Tuple[LatticePolygon, ...]
    vertex_cell: Tuple[Tuple[int, int], ...]          # (vertex id, cell index)
    crossing_cell: Tuple[Tuple[Pt, int], ...]         # (crossing point, cell index)

    def triangles(self) -> List[LatticePolygon]:
        return [self.cells[i] for _, i in self.vertex_cell]

    def parallelograms(self) -> List[LatticePolygon]:
        return [self.cells[i] for _, i in self.crossing_cell]


def _degrees_match(c: ParametrizedTropicalCurve, p: LatticePolygon) -> bool:
    """Total leg multiplicity per primitive outer normal must equal the
    integral side length."""
    want: Dict[Tuple[int, int], int] = {}
    for v, n in reduced_dual_degree(p).counts().items():
        want[v] = n
    have: Dict[Tuple[int, int], int] = {}
    for l in c.legs:
        if l.slope == (0, 0):
            continue
        have[primitive(l.slope)] = have.get(primitive(l.slope), 0) + ilength(l.slope)
    return want == have


def _angular_sorted(dirs):
    import functools

    def cmp(a, b):
        ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
        hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
        if ha != hb:
            return -1 if ha < hb else 1
        c = cross(a, b)
        return 0 if c == 0 else (-1 if c > 0 else 1)

    return sorted(dirs, key=functools.cmp_to_key(cmp))


def _sector_samples(center: Pt, directions: List[Tuple[int, int]], pieces, skip_refs):
    """One sample point strictly inside each sector between consecutive
    directions around `center`, close enough that the straight segment from
    the center crosses nothing."""
    dirs = _angular_sorted(set(primitive(d) for d in directions))
    samples = []
    for i, u in enumerate(dirs):
        v = dirs[(i + 1) % len(dirs)]
        d = (u[0] + v[0], u[1] + v[1])
        if d == (0, 0):
            raise errors.NotSimple("opposite branch directions at a sample site")
        eps = Fraction(1, 2)
        while True:
            s = (center[0] + eps * d[0], center[1] + eps * d[1])
            probe = Piece(center, d, eps)
            clean = True
            for piece, kind, ref in pieces:
                if (kind, ref) in skip_refs:
                    continue
                res = intersect_pieces(probe, piece)
                if res[0] == "overlap":
                    clean = False
                elif res[0] == "point" and res[2] != 0:
                    clean = False
                if not clean:
                    break
            if clean:
                samples.append(s)
                break
            eps /= 4
            if eps < Fraction(1, 2 ** 64):
                raise errors.NotSimple("cannot separate sectors; curve degenerate")
    return samples


def _walk_potential(base: Pt, target: Pt, pieces) -> Tuple[int, int]:
    """Accumulated lattice shift along the open segment base -> target."""
    d = vsub(target, base)
    dx = 0
    dy = 0
    seg_dir = d
    seg = PieceF(base, seg_dir)
    for piece, _, _ in pieces:
        res = _intersect_free(seg, piece)
        if res is None:
            continue
        t, u_param, pt = res
        if t <= 0 or t >= 1:
            # endpoint contact is a genericity failure handled by caller
            if t == 0 or t == 1:
                raise _NonGeneric()
            continue
        if piece.tmax is not None and (u_param == 0 or u_param == piece.tmax):
            raise _NonGeneric()
        if piece.tmax is None and u_param == 0:
            raise _NonGeneric()
        u = primitive(piece.direction)
        w = ilength(piece.direction)
        s = cross(u, seg_dir)
        if s == 0:
            raise _NonGeneric()
        sgn = 1 if s > 0 else -1
        shift = rot90(u)
        dx += sgn * w * shift[0]
        dy += sgn * w * shift[1]
    return dx, dy


class _NonGeneric(Exception):
    pass


class PieceF:
    """Segment with a rational (not necessarily integer) direction."""

    def __init__(self, p0: Pt, direction):
        self.p0 = p0
        self.direction = direction


def _intersect_free(seg: PieceF, piece: Piece):
    """Intersect the unit-parameter segment with an integer-direction piece;
    returns (t_on_seg, u_on_piece, point) or None."""
    d1 = seg.direction
    d2 = piece.direction
    det = d1[0] * d2[1] - d1[1] * d2[0]
    w = vsub(piece.p0, seg.p0)
    if det == 0:
        if w[0] * d1[1] - w[1] * d1[0] == 0:
            raise _NonGeneric()  # collinear with a branch
        return None
    t = Fraction(w[0] * d2[1] - w[1] * d2[0], det)
    u = Fraction(w[0] * d1[1] - w[1] * d1[0], det)
    if t < 0 or t > 1:
        return None
    if u < 0 or (piece.tmax is not None and u > piece.tmax):
        return None
    pt = (seg.p0[0] + t * d1[0], seg.p0[1] + t * d1[1])
    return t, u, pt


def dual_subdivision(c: ParametrizedTropicalCurve, p: LatticePolygon) -> DualSubdivision:
    """Dual subdivision of `p` induced by the simple curve `c`: one triangle
    per vertex, one parallelogram per self-intersection; cells tile `p`."""
    rep = is_simple(c)
    if not rep:
        raise errors.NotSimple(rep.reason)
    if not _degrees_match(c, p):
        raise errors.DegreeMismatch("curve degree is not dual to the polygon")

    pieces = c.pieces()
    crossings = self_intersections(c)

    sites = []  # (key, [sample points])
    for v, _ in c.weights:
        star = c.star(v)
        dirs = [s for s, _, _ in star if s != (0, 0)]
        skip = {(k, r) for _, k, r in star}
        sites.append((("v", v), _sector_samples(c.position(v), dirs, pieces, skip)))
    for pt, branches in crossings:
        refs = set()
        dirs = []
        for b in branches:
            kind = "edge" if b[0] == "e" else "leg"
            refs.add((kind, b[1]))
            s = c.slope_of(kind, b[1])
            dirs.extend([s, (-s[0], -s[1])])
        sites.append((("x", pt), _sector_samples(pt, dirs, pieces, refs)))

    xs = [c.position(v)[0] for v, _ in c.weights]
    ys = [c.position(v)[1] for v, _ in c.weights]
    base_try = 0
    while True:
        base = (min(xs) - 1 - Fraction(base_try, 7), min(ys) - 1 - Fraction(base_try * base_try + 1, 3))
        try:
            potentials = {
                key: [_walk_potential(base, s, pieces) for s in samples]
                for key, samples in sites
            }
            break
        except _NonGeneric:
            base_try += 1
            if base_try > 200:
                raise errors.NotSimple("no generic base point found for dual walk")

    cells: List[LatticePolygon] = []
    vertex_cell = []
    crossing_cell = []
    for key, pots in potentials.items():
        corners = [(x, y) for x, y in pots]
        cell = validate_polygon(convex_hull(corners))
        cells.append(cell)
        if key[0] == "v":
            vertex_cell.append((key[1], len(cells) - 1))
        else:
            crossing_cell.append((key[1], len(cells) - 1))

    # translate everything onto the target polygon
    all_corners = [pt for cell in cells for pt in cell.vertices]
    hull = validate_polygon(convex_hull(all_corners))
    delta = (p.vertices[0][0] - hull.vertices[0][0], p.vertices[0][1] - hull.vertices[0][1])
    cells = [cell.translate(*delta) for cell in cells]
    hull = hull.translate(*delta)
    if hull.vertices != p.vertices:
        raise errors.DegreeMismatch("dual cells do not assemble to the polygon")
    if sum(cell.area() for cell in cells) != p.area():
        raise errors.DegreeMismatch("dual cell areas do not sum to the polygon area")

    return DualSubdivision(
        polygon=p,
        cells=tuple(cells),
        vertex_cell=tuple(vertex_cell),
        crossing_cell=tuple(crossing_cell),
    )
