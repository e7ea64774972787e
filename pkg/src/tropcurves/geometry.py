"""Exact planar primitives over the rationals.

Points are pairs of `Fraction`; directions are integer vectors.  A *piece*
is a parametrized segment or ray ``p + t*d`` with ``t`` ranging over
``[0, tmax]`` (segment) or ``[0, oo)`` (ray, ``tmax is None``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple

Vec = Tuple[int, int]
Point = Tuple[Fraction, Fraction]


def frac_point(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def vadd(p: Point, q) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def vsub(p: Point, q) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def vscale(a, p) -> Point:
    return (a * p[0], a * p[1])


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def primitive(v: Vec) -> Vec:
    """Primitive integer vector parallel to v (v != 0), preserving direction."""
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


def ilength(v: Vec) -> int:
    """Integral (lattice) length of an integer vector; 0 for the zero vector."""
    return gcd(abs(v[0]), abs(v[1]))


def rot90(v):
    """Rotate by +90 degrees: (x, y) -> (-y, x)."""
    return (-v[1], v[0])


@dataclass(frozen=True)
class Piece:
    """Segment or ray p0 + t*direction, t in [0, tmax] (tmax=None for rays)."""

    p0: Point
    direction: Vec
    tmax: Optional[Fraction]  # None = ray

    def point_at(self, t: Fraction) -> Point:
        return (self.p0[0] + t * self.direction[0], self.p0[1] + t * self.direction[1])

    def contains_param(self, t: Fraction) -> bool:
        if t < 0:
            return False
        return self.tmax is None or t <= self.tmax

    def param_of(self, p: Point) -> Optional[Fraction]:
        """Parameter t with point_at(t) == p, or None if p is off the line/range."""
        d = self.direction
        w = vsub(p, self.p0)
        if cross(d, w) != 0:
            return None
        t = w[0] / Fraction(d[0]) if d[0] != 0 else w[1] / Fraction(d[1])
        return t if self.contains_param(t) else None


def segment(p: Point, q: Point) -> Piece:
    d = vsub(q, p)
    # direction reduced to a primitive integer vector when possible
    if d[0].denominator == 1 and d[1].denominator == 1 and (d[0] or d[1]):
        prim = primitive((int(d[0]), int(d[1])))
        tmax = d[0] / prim[0] if prim[0] else d[1] / prim[1]
        return Piece(p, prim, tmax)
    raise ValueError("segment endpoints must differ by an integer vector")


def intersect_pieces(a: Piece, b: Piece):
    """All common points of two pieces.

    Returns ("none",), ("point", p, ta, tb) for a transverse or touching
    intersection, or ("overlap",) when the pieces share a sub-segment of
    positive length.
    """
    d1, d2 = a.direction, b.direction
    det = cross(d1, d2)
    w = vsub(b.p0, a.p0)
    if det == 0:
        if cross(d1, w) != 0:
            return ("none",)
        # collinear: compare parameter ranges on a's line
        tb0 = a.param_of(b.p0)
        tb0_raw = (w[0] / Fraction(d1[0])) if d1[0] else (w[1] / Fraction(d1[1]))
        step = Fraction(dot(d1, d2), dot(d1, d1))
        lo_b = tb0_raw
        hi_b = None if b.tmax is None else tb0_raw + step * b.tmax
        if hi_b is not None and hi_b < lo_b:
            lo_b, hi_b = hi_b, lo_b
        lo = max(Fraction(0), lo_b)
        hi_candidates = [x for x in (a.tmax, hi_b) if x is not None]
        hi = min(hi_candidates) if hi_candidates else None
        if hi is None:
            if step > 0 or lo_b >= 0 or a.tmax is None:
                # both unbounded on a common side, or ray containment
                if b.tmax is None and a.tmax is None:
                    return ("overlap",) if (step > 0 or lo_b > 0) else _collinear_point(a, b, tb0_raw)
                return ("overlap",)
            return ("none",)
        if lo > hi:
            return ("none",)
        if lo == hi:
            p = a.point_at(lo)
            tb = b.param_of(p)
            return ("point", p, lo, tb)
        return ("overlap",)
    # transverse lines: solve t*d1 - u*d2 = w
    t = Fraction(cross(w, d2), det)
    u = Fraction(cross(w, d1), det)
    if a.contains_param(t) and b.contains_param(u):
        return ("point", a.point_at(t), t, u)
    return ("none",)


def _collinear_point(a: Piece, b: Piece, tb0):
    # two opposite rays meeting at most in a point
    if tb0 < 0:
        return ("none",)
    if tb0 == 0:
        return ("point", a.p0, Fraction(0), Fraction(0))
    return ("overlap",)


def convex_hull(points):
    """Andrew's monotone chain; returns hull in counterclockwise order."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(vsub(lower[-1], lower[-2]), vsub(p, lower[-2])) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(vsub(upper[-1], upper[-2]), vsub(p, upper[-2])) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]
