from fractions import Fraction

import pytest

from tropcurves import errors
from tropcurves.curve import (
    CombinatorialType,
    combinatorial_type,
    contract_edge,
    degree,
    genus,
    is_nice,
    is_simple,
    is_simple_wall,
    is_unimodular,
    make_curve,
    mikhalkin_multiplicity,
    self_intersections,
    stratum_dimension,
    types_isomorphic,
    vertex_multiplicity,
    wall_resolutions,
)
from tropcurves.serialize import curve_from_dict, curve_to_dict

from helpers import conic_c2, crossing_pair, tropical_line


def single_vertex(legs):
    return make_curve(
        vertices=[(0, 0)],
        edges=[],
        legs=[(i, 0, s) for i, s in enumerate(legs)],
        positions={0: (0, 0)},
    )


def test_validate_l1():
    c = tropical_line()
    assert genus(c) == 0


def test_validate_unbalanced():
    with pytest.raises(errors.Unbalanced):
        single_vertex([(-1, 0), (0, -1), (1, 2)])


def test_validate_two_vertex():
    c = make_curve(
        vertices=[(0, 0), (1, 0)],
        edges=[(0, 0, 1, 1, (1, 0))],
        legs=[(0, 0, (-1, 1)), (1, 0, (0, -1)), (2, 1, (1, 1)), (3, 1, (0, -1))],
        positions={0: (0, 0), 1: (1, 0)},
    )
    assert genus(c) == 0


def test_validate_position_mismatch():
    with pytest.raises(errors.PositionMismatch):
        make_curve(
            vertices=[(0, 0), (1, 0)],
            edges=[(0, 0, 1, 1, (1, 0))],
            legs=[(0, 0, (-1, 1)), (1, 0, (0, -1)), (2, 1, (1, 1)), (3, 1, (0, -1))],
            positions={0: (0, 0), 1: (2, 0)},
        )


def test_validate_disconnected():
    with pytest.raises(errors.Disconnected):
        make_curve(
            vertices=[(0, 0), (1, 0)],
            edges=[],
            legs=[
                (0, 0, (-1, 0)), (1, 0, (0, -1)), (2, 0, (1, 1)),
                (3, 1, (-1, 0)), (4, 1, (0, -1)), (5, 1, (1, 1)),
            ],
            positions={0: (0, 0), 1: (10, 0)},
        )


def test_validate_unstable():
    with pytest.raises(errors.Unstable):
        make_curve(
            vertices=[(0, 0)],
            edges=[],
            legs=[(0, 0, (1, 0)), (1, 0, (-1, 0))],
            positions={0: (0, 0)},
        )


def test_genus_formula():
    assert genus(tropical_line()) == 0
    theta = CombinatorialType(
        weights=((0, 0), (1, 0)),
        edges=((0, 0, 1, (1, 0)), (1, 0, 1, (1, 1)), (2, 0, 1, (1, -1))),
        legs=(),
    )
    assert genus(theta) == 2
    loop = CombinatorialType(weights=((0, 1),), edges=((0, 0, 0, (1, 0)),), legs=())
    assert genus(loop) == 2


def test_degree():
    assert degree(tropical_line()).counts() == {(-1, 0): 1, (0, -1): 1, (1, 1): 1}
    assert degree(conic_c2()).counts() == {(-1, 0): 2, (0, -1): 2, (1, 1): 2}


def test_degree_ignores_contracted_legs():
    c = make_curve(
        vertices=[(0, 0)],
        edges=[],
        legs=[(0, 0, (-1, 0)), (1, 0, (0, -1)), (2, 0, (1, 1)), (3, 0, (0, 0))],
        positions={0: (0, 0)},
    )
    assert degree(c).counts() == {(-1, 0): 1, (0, -1): 1, (1, 1): 1}


def test_is_simple():
    assert is_simple(tropical_line())
    assert is_simple(conic_c2())
    heavy = make_curve(
        vertices=[(0, 1)],
        edges=[],
        legs=[(0, 0, (-1, 0)), (1, 0, (1, 0))],
        positions={0: (0, 0)},
    )
    rep = is_simple(heavy)
    assert not rep and "weight" in rep.reason


def test_is_simple_rejects_parallel_branches():
    c = make_curve(
        vertices=[(0, 0), (1, 0)],
        edges=[(0, 0, 1, 1, (1, 0))],
        legs=[(0, 0, (1, 0)), (1, 0, (-2, 0)), (2, 1, (1, 1)), (3, 1, (0, -1))],
        positions={0: (0, 0), 1: (1, 0)},
    )
    assert not is_simple(c)


def test_vertex_multiplicity():
    assert vertex_multiplicity(tropical_line(), 0) == 1
    c = single_vertex([(0, -2), (-1, 1), (1, 1)])
    assert vertex_multiplicity(c, 0) == 2
    rot = single_vertex([(0, -1), (-1, 0), (1, 1)])
    assert vertex_multiplicity(rot, 0) == 1


def test_mikhalkin_multiplicity():
    assert mikhalkin_multiplicity(tropical_line()) == 1
    assert mikhalkin_multiplicity(conic_c2()) == 1


def test_self_intersections():
    assert self_intersections(tropical_line()) == []
    pts = self_intersections(crossing_pair())
    assert len(pts) == 1
    (pt, branches) = pts[0]
    assert pt == (Fraction(3), Fraction(4))


def test_unimodular():
    assert is_unimodular(tropical_line())
    assert is_unimodular(conic_c2())
    weighted = single_vertex([(0, -2), (-1, 1), (1, 1)])
    assert is_simple(weighted) and not is_unimodular(weighted)


def test_types_isomorphic_relabelled():
    a = combinatorial_type(conic_c2())
    c2 = conic_c2()
    # relabel internal vertices
    remap = {1: 7, 2: 8, 3: 9, 4: 6}
    b = CombinatorialType(
        weights=tuple((remap[v], w) for v, w in a.weights),
        edges=tuple((i, remap[t], remap[h], s) for i, t, h, s in a.edges),
        legs=tuple((i, remap[an], s) for i, an, s in a.legs),
    )
    assert types_isomorphic(a, b)
    assert types_isomorphic(a, combinatorial_type(c2.translate(Fraction(5), Fraction(7))))


def test_types_isomorphic_respects_leg_order():
    l1 = combinatorial_type(tropical_line())
    swapped = CombinatorialType(weights=l1.weights, edges=(), legs=(l1.legs[1], l1.legs[0], l1.legs[2]))
    assert not types_isomorphic(l1, swapped)
    assert types_isomorphic(l1, swapped, respect_leg_order=False)


def test_types_not_isomorphic_mirror():
    l1 = combinatorial_type(tropical_line())
    mirror = combinatorial_type(tropical_line().reflect(flip_x=True))
    assert not types_isomorphic(l1, mirror, respect_leg_order=False)


def test_stratum_dimension():
    assert stratum_dimension(combinatorial_type(tropical_line())) == 2
    t = combinatorial_type(conic_c2())
    assert stratum_dimension(t) == len(degree(conic_c2())) + 0 - 1 == 5
    assert is_nice(t)


def test_wall_from_contraction():
    t = combinatorial_type(conic_c2())
    wall = contract_edge(t, 12)  # the floor-to-floor elevator
    assert is_simple_wall(wall)
    assert stratum_dimension(wall) == 4
    assert not is_nice(wall)


def test_wall_resolutions_roundtrip():
    wall = CombinatorialType(
        weights=((0, 0),),
        edges=(),
        legs=((0, 0, (0, -1)), (1, 0, (0, -1)), (2, 0, (-1, 1)), (3, 0, (1, 1))),
    )
    assert is_simple_wall(wall)
    res = wall_resolutions(wall)
    slopes = sorted(
        tuple(map(abs, r.type.edges[-1][3])) for r in res if not r.empty
    )
    assert slopes == [(0, 2), (1, 0), (1, 0)]
    for r in res:
        if r.empty:
            continue
        assert is_nice(r.type)
        back = contract_edge(r.type, r.new_edge)
        assert types_isomorphic(back, wall, respect_leg_order=False)


def test_wall_resolution_zero_slope_flagged():
    wall = CombinatorialType(
        weights=((0, 0),),
        edges=(),
        legs=((0, 0, (0, -2)), (1, 0, (0, 2)), (2, 0, (-1, 0)), (3, 0, (1, 0))),
    )
    if is_simple_wall(wall):
        res = wall_resolutions(wall)
        assert any(r.empty for r in res)


def test_serialization_roundtrip():
    c = conic_c2()
    d = curve_to_dict(c)
    c2 = curve_from_dict(d)
    assert curve_to_dict(c2) == d
    assert types_isomorphic(combinatorial_type(c), combinatorial_type(c2))
