import json

import pytest

from ivgamma.polynomials import IntPolynomial
from ivgamma.simplicial import (
    NotManifoldLikeError,
    SimplicialComplex,
    boundary_of_ball,
    cone,
    cross_polytope_boundary,
    f_from_h,
    generators,
    h_from_f,
    load_complex,
    simplex,
    simplex_boundary,
)


def test_point_empty():
    e = SimplicialComplex.point_empty()
    assert e.f_vector() == (1,)
    assert e.dim == -1
    assert e.h_polynomial() == IntPolynomial([1])


def test_facets_are_maximal():
    cx = SimplicialComplex.from_facets([{1, 2}, {1}, {2, 3}, {3}])
    assert sorted(map(sorted, cx.facets())) == [[1, 2], [2, 3]]
    assert cx.f_vector() == (1, 3, 2)


def test_from_faces_checks_closure():
    with pytest.raises(ValueError):
        SimplicialComplex.from_faces([{1, 2}])
    cx = SimplicialComplex.from_faces([set(), {1}, {2}, {1, 2}])
    assert cx.f_vector() == (1, 2, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_simplex_and_boundary(n):
    from math import comb
    assert simplex(n).f_vector() == tuple(comb(n, i) for i in range(n + 1))
    assert simplex(n).h_polynomial() == IntPolynomial([1])
    b = simplex_boundary(n)
    assert b.h_polynomial() == IntPolynomial([1] * n)


def test_cross_polytope():
    c = cross_polytope_boundary(3)
    assert c.f_vector() == (1, 6, 12, 8)
    assert c.h_polynomial() == IntPolynomial([1, 3, 3, 1])
    assert c.euler_characteristic() == -1 + 6 - 12 + 8


def test_h_f_inverse():
    f = (1, 6, 12, 8)
    assert f_from_h(h_from_f(f).coeffs) == f


def test_boundary_of_ball():
    assert boundary_of_ball(simplex(3)) == simplex_boundary(3)
    assert boundary_of_ball(cross_polytope_boundary(2)).f_vector() == (1,)
    fan = SimplicialComplex.from_facets([{0, 1}, {0, 2}, {0, 3}])
    with pytest.raises(NotManifoldLikeError):
        boundary_of_ball(fan)


def test_generators_and_errors():
    assert generators("simplex", 2) == simplex(2)
    with pytest.raises(ValueError):
        generators("torus", 2)
    with pytest.raises(ValueError):
        simplex(0)


def test_cone_and_coloring():
    c = cone(simplex_boundary(3))
    assert c.f_vector() == (1, 4, 6, 3)
    cx = cross_polytope_boundary(2)
    assert cx.is_balanced_coloring({v: abs(v) for v in cx.vertices})
    assert not cx.is_balanced_coloring({v: 1 for v in cx.vertices})


def test_json_round_trip(tmp_path):
    cx = cross_polytope_boundary(2)
    path = tmp_path / "c.json"
    path.write_text(json.dumps(cx.to_json()))
    assert load_complex(path) == cx
