from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropcurves import errors
from tropcurves.polygon import (
    LatticePolygon,
    _h_transverse_by_lines,
    has_bottom_horizontal_side,
    interior_lattice_count,
    is_h_transverse,
    is_primitive_cell,
    pick_consistent,
    rectangle,
    reduced_dual_degree,
    satisfies_sufficient_admissibility,
    slice_profile,
    strip_leg_slopes,
    trapeze,
    triangle,
    validate_polygon,
)
from tropcurves.geometry import convex_hull, ilength


def test_validate_unit_triangle():
    p = validate_polygon([(0, 0), (1, 0), (0, 1)])
    assert p.vertices == ((0, 0), (1, 0), (0, 1))


def test_validate_rejects_collinear_chain():
    with pytest.raises(errors.NotConvex):
        validate_polygon([(0, 0), (2, 0), (1, 0), (0, 2)])


def test_validate_rejects_too_few():
    with pytest.raises(errors.TooFewVertices):
        validate_polygon([(0, 0), (1, 0)])


def test_validate_rejects_degenerate():
    with pytest.raises((errors.Degenerate, errors.NotConvex)):
        validate_polygon([(0, 0), (1, 0), (2, 0)])


def test_orientation_normalized():
    cw = validate_polygon([(0, 1), (1, 0), (0, 0)])
    ccw = validate_polygon([(0, 0), (1, 0), (0, 1)])
    assert cw == ccw


def test_area_d3():
    assert triangle(3).area() == Fraction(9, 2)


def test_h_transverse_examples():
    assert is_h_transverse(triangle(3))
    assert is_h_transverse(rectangle(1, 1))
    # side from (1,0) to (0,2) crosses y=1 off-lattice
    assert not is_h_transverse(validate_polygon([(0, 0), (1, 0), (0, 2)]))
    # integer x-drift per unit height, even when steep in x
    assert is_h_transverse(validate_polygon([(0, 0), (3, 1), (0, 2)]))
    assert is_h_transverse(trapeze(2, 1, 2))


def test_slice_profiles():
    prof = slice_profile(triangle(2))
    assert prof.r0 == 0 and prof.heights == (2, 1, 0)
    assert slice_profile(rectangle(1, 1)).heights == (1, 1)
    tz = validate_polygon([(0, 0), (0, 1), (2, 1), (3, 0)])
    assert slice_profile(tz).heights == (3, 2)


def test_slice_profile_requires_h_transverse():
    with pytest.raises(errors.NotHTransverse):
        slice_profile(validate_polygon([(0, 0), (1, 0), (0, 2)]))


def test_interior_counts():
    assert interior_lattice_count(triangle(1)) == 0
    assert interior_lattice_count(triangle(3)) == 1
    assert interior_lattice_count(rectangle(3, 3)) == 4


def test_primitive_cells():
    assert is_primitive_cell(triangle(1))
    assert not is_primitive_cell(validate_polygon([(0, 0), (2, 0), (0, 1)]))
    assert is_primitive_cell(rectangle(1, 1))
    assert not is_primitive_cell(rectangle(2, 1))
    with pytest.raises(errors.NotTriangleOrParallelogram):
        is_primitive_cell(validate_polygon([(0, 0), (2, 0), (3, 1), (0, 1)]))


def test_reduced_dual_degree_values():
    assert reduced_dual_degree(triangle(1)).counts() == {(-1, 0): 1, (0, -1): 1, (1, 1): 1}
    assert reduced_dual_degree(triangle(2)).counts() == {(-1, 0): 2, (0, -1): 2, (1, 1): 2}
    assert reduced_dual_degree(rectangle(1, 1)).counts() == {
        (1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1,
    }


def test_sufficient_admissibility():
    assert satisfies_sufficient_admissibility(triangle(4))
    assert satisfies_sufficient_admissibility(trapeze(1, 1, 1))
    no_bottom = validate_polygon([(0, 1), (1, 0), (2, 1)])
    assert not satisfies_sufficient_admissibility(no_bottom)


def test_strip_leg_slopes_triangle():
    lambdas, rhos = strip_leg_slopes(triangle(2))
    assert lambdas == [0, 0]
    assert rhos == [-1, -1]


def test_bottom_horizontal():
    assert has_bottom_horizontal_side(triangle(2))
    assert not has_bottom_horizontal_side(validate_polygon([(0, 1), (1, 0), (2, 1)]))


# -- randomized invariants ----------------------------------------------------

points_strategy = st.lists(
    st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=3, max_size=10
)


def _hull_polygon(pts):
    hull = convex_hull(pts)
    if len(hull) < 3:
        return None
    try:
        return validate_polygon(hull)
    except errors.PolygonError:
        return None


@settings(max_examples=300, deadline=None)
@given(points_strategy)
def test_pick_consistency_random(pts):
    p = _hull_polygon(pts)
    if p is None:
        return
    assert pick_consistent(p)


@settings(max_examples=300, deadline=None)
@given(points_strategy)
def test_degree_sums_zero_and_perimeter(pts):
    p = _hull_polygon(pts)
    if p is None:
        return
    deg = reduced_dual_degree(p)
    assert sum(v[0] for v in deg.slopes) == 0
    assert sum(v[1] for v in deg.slopes) == 0
    perimeter = sum(ilength((b[0] - a[0], b[1] - a[1])) for a, b in p.sides())
    assert len(deg) == perimeter
    assert deg.is_reduced


@settings(max_examples=300, deadline=None)
@given(points_strategy)
def test_h_transverse_characterizations_agree(pts):
    p = _hull_polygon(pts)
    if p is None:
        return
    assert is_h_transverse(p) == _h_transverse_by_lines(p)


@settings(max_examples=200, deadline=None)
@given(points_strategy)
def test_slice_concavity(pts):
    p = _hull_polygon(pts)
    if p is None or not is_h_transverse(p):
        return
    a = slice_profile(p).heights
    for r in range(1, len(a) - 1):
        assert 2 * a[r] >= a[r - 1] + a[r + 1]
