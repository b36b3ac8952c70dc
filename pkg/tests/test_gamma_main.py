import random

import pytest

from ivgamma.eulerian import gamma_nj
from ivgamma.gamma_main import (
    NegativeHWarning,
    SymmetricHInput,
    gamma_int,
    gamma_int_geometric,
    h_int_from_h,
)
from ivgamma.interval import h_of_int
from ivgamma.polynomials import GammaVector, IntPolynomial
from ivgamma.simplicial import cross_polytope_boundary, simplex, simplex_boundary


def test_input_validation():
    with pytest.raises(ValueError):
        SymmetricHInput((2, 2))
    with pytest.raises(ValueError):
        SymmetricHInput((1, 2, 3))
    with pytest.warns(NegativeHWarning):
        SymmetricHInput((1, -1, 1))


def test_small_values():
    assert h_int_from_h((1, 1, 1)) == IntPolynomial([1, 10, 1])
    assert gamma_int((1, 1, 1)).entries == (1, 8)
    assert gamma_int((1, 3, 3, 1)).entries == (1, 92)
    assert gamma_int((1, 5, 10, 10, 5, 1)).entries == (1, 2872, 19216)


def test_d5_t_coefficient():
    for h1, h2 in ((0, 0), (1, 0), (0, 1), (3, 7)):
        h = (1, h1, h2, h2, h1, 1)
        assert h_int_from_h(h)[1] == 237 + 192 * h1 + 168 * h2
        want = gamma_nj(6, 1) + h1 * gamma_nj(6, 2) + h2 * gamma_nj(6, 3)
        assert gamma_int(h) == want


def test_random_symmetric_inputs():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 6)
        half = [1] + [rng.randint(0, 9) for _ in range(n // 2)]
        h = [0] * (n + 1)
        for i, x in enumerate(half):
            h[i] = h[n - i] = x
        assert h_int_from_h(h) == h_of_int(h)
        assert gamma_int(h).is_nonnegative()


@pytest.mark.parametrize("cx", [
    simplex_boundary(2), simplex_boundary(3), simplex_boundary(4), simplex_boundary(5),
    cross_polytope_boundary(1), cross_polytope_boundary(2), cross_polytope_boundary(3),
], ids=repr)
def test_geometry_agrees(cx):
    g = gamma_int_geometric(cx)
    assert isinstance(g, GammaVector)


def test_geometry_known():
    assert gamma_int_geometric(simplex_boundary(3)).entries == (1, 8)


def test_nonsymmetric_complex_rejected():
    with pytest.raises(ValueError):
        gamma_int_geometric(simplex(3))
