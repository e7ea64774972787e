"""Hand-built example curves shared across the test suite."""

from fractions import Fraction

from tropcurves.curve import make_curve


def tropical_line(x=0, y=0):
    """One vertex, legs (-1,0), (0,-1), (1,1): the tropical line L1."""
    return make_curve(
        vertices=[(0, 0)],
        edges=[],
        legs=[(0, 0, (-1, 0)), (1, 0, (0, -1)), (2, 0, (1, 1))],
        positions={0: (x, y)},
    )


def conic_c2(gap=100):
    """Stretched genus-0 conic dual to the d=2 triangle: two floors joined
    by one elevator, two downward legs on the bottom floor."""
    lam = Fraction(gap)
    return make_curve(
        vertices=[(1, 0), (2, 0), (3, 0), (4, 0)],
        edges=[
            (10, 1, 2, 1, (1, 1)),
            (11, 2, 3, 1, (1, 2)),
            (12, 3, 4, lam, (0, 1)),
        ],
        legs=[
            (0, 1, (-1, 0)),
            (1, 1, (0, -1)),
            (2, 2, (0, -1)),
            (3, 3, (1, 1)),
            (4, 4, (-1, 0)),
            (5, 4, (1, 1)),
        ],
        positions={1: (0, 0), 2: (1, 1), 3: (2, 3), 4: (2, 3 + lam)},
    )


def crossing_pair(gap=100):
    """Two floors, one elevator, and a downward leg from the upper floor that
    crosses the lower floor's right leg exactly once (genus 0)."""
    lam = Fraction(gap)
    return make_curve(
        vertices=[(1, 0), (2, 0), (3, 0), (4, 0), (5, 0)],
        edges=[
            (10, 1, 2, 1, (1, 1)),
            (11, 2, 3, 1, (1, 2)),
            (12, 3, 4, lam, (0, 1)),
            (13, 4, 5, 1, (1, 1)),
        ],
        legs=[
            (0, 1, (-1, 0)),
            (1, 1, (0, -1)),
            (2, 2, (0, -1)),
            (3, 3, (1, 1)),
            (4, 4, (-1, 0)),
            (5, 5, (0, -1)),
            (6, 5, (1, 2)),
        ],
        positions={
            1: (0, 0),
            2: (1, 1),
            3: (2, 3),
            4: (2, 3 + lam),
            5: (3, 4 + lam),
        },
    )
