import pytest

from ivgamma.interval import (
    Interval,
    apply,
    f_transform_matrix,
    h_transform_matrix,
    h_transform_matrix_literal,
    int_simplex,
    interval_subdivision,
    restriction,
    verify_subdivision_transforms,
)
from ivgamma.polynomials import IntPolynomial
from ivgamma.simplicial import SimplicialComplex, cross_polytope_boundary, simplex, simplex_boundary


def test_interval_order():
    a = Interval({1}, {1, 2})
    b = Interval({1, 2}, {1, 2})
    assert b <= a and not a <= b
    assert sorted(map(repr, a.lower_covers())) == ["[1,1]", "[12,12]"]
    with pytest.raises(ValueError):
        Interval(set(), {1})
    with pytest.raises(ValueError):
        Interval({3}, {1})


def test_edge_subdivision():
    sub = int_simplex(2)
    assert sub.f_vector() == (1, 5, 4)
    assert sub.h_polynomial() == IntPolynomial([1, 3])


def test_triangle_boundary_is_12_cycle():
    sub = interval_subdivision(simplex_boundary(3))
    assert sub.f_vector() == (1, 12, 12)
    assert sub.h_polynomial() == IntPolynomial([1, 10, 1])


def test_point_empty_rejected():
    with pytest.raises(ValueError):
        interval_subdivision(SimplicialComplex.point_empty())


def test_carrier_and_restriction():
    sub = int_simplex(3)
    for F in sub.complex.facets():
        assert sub.carrier(F) == frozenset({1, 2, 3})
    r = restriction(sub, {1, 2})
    assert r.f_vector() == (1, 5, 4)
    assert restriction(sub, set()).f_vector() == (1,)
    with pytest.raises(ValueError):
        restriction(sub, {1, 9})


def test_matrices_d2():
    # an edge gains 3 interior vertices and is cut into 4 edges
    assert f_transform_matrix(2) == [[1, 0, 0], [0, 1, 3], [0, 0, 4]]
    M = h_transform_matrix(2)
    assert apply(M, (1, 1, 1)) == (1, 10, 1)
    assert M == [[1, 0, 0], [3, 4, 3], [0, 0, 1]]


def test_literal_reading_differs():
    assert h_transform_matrix_literal(2) != h_transform_matrix(2)
    assert [row[0] for row in h_transform_matrix_literal(2)] == [0, 0, 0]


@pytest.mark.parametrize("base", [
    simplex(1), simplex(2), simplex(3), simplex(4),
    simplex_boundary(2), simplex_boundary(3), simplex_boundary(4), simplex_boundary(5),
    cross_polytope_boundary(1), cross_polytope_boundary(2), cross_polytope_boundary(3),
    cross_polytope_boundary(4),
], ids=lambda b: repr(b))
def test_triple_agreement(base):
    tc = verify_subdivision_transforms(base)
    assert tc.f_ok, tc.mismatches()
    assert tc.h_ok, tc.mismatches()


def test_dimension_guard():
    with pytest.raises(ValueError):
        verify_subdivision_transforms(simplex(6), max_dim=4)
