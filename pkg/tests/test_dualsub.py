from fractions import Fraction

import pytest

from tropcurves import errors
from tropcurves.curve import is_unimodular, self_intersections
from tropcurves.dualsub import dual_subdivision
from tropcurves.polygon import is_primitive_cell, triangle, validate_polygon

from helpers import conic_c2, crossing_pair, tropical_line


def test_l1_dualizes_to_unit_triangle():
    sub = dual_subdivision(tropical_line(), triangle(1))
    assert len(sub.cells) == 1
    assert sub.cells[0].vertices == triangle(1).vertices
    assert len(sub.vertex_cell) == 1 and not sub.crossing_cell


def test_c2_dualizes_to_four_primitive_triangles():
    sub = dual_subdivision(conic_c2(), triangle(2))
    assert len(sub.cells) == 4
    assert all(len(cell.vertices) == 3 for cell in sub.cells)
    assert all(is_primitive_cell(cell) for cell in sub.cells)
    assert sum(cell.area() for cell in sub.cells) == triangle(2).area()
    assert not sub.crossing_cell


def test_crossing_gives_parallelogram():
    c = crossing_pair()
    # Newton polygon of this curve: hull of the dual degree's normal fan
    p = validate_polygon([(0, 0), (3, 0), (2, 1), (0, 2)])
    sub = dual_subdivision(c, p)
    assert len(sub.crossing_cell) == len(self_intersections(c)) == 1
    assert len(sub.vertex_cell) == 5
    par = sub.parallelograms()[0]
    assert len(par.vertices) == 4
    assert sum(cell.area() for cell in sub.cells) == p.area()


def test_degree_mismatch_rejected():
    with pytest.raises(errors.DegreeMismatch):
        dual_subdivision(tropical_line(), triangle(2))


def test_vertex_multiplicity_is_twice_triangle_area():
    from tropcurves.curve import vertex_multiplicity

    c = conic_c2()
    sub = dual_subdivision(c, triangle(2))
    for v, idx in sub.vertex_cell:
        assert vertex_multiplicity(c, v) == 2 * sub.cells[idx].area()


def test_unimodular_iff_cells_primitive():
    for c, p in [
        (tropical_line(), triangle(1)),
        (conic_c2(), triangle(2)),
        (crossing_pair(), validate_polygon([(0, 0), (3, 0), (2, 1), (0, 2)])),
    ]:
        sub = dual_subdivision(c, p)
        assert is_unimodular(c) == all(is_primitive_cell(cell) for cell in sub.cells)
