import pytest

from ivgamma import local_h as lh
from ivgamma.polynomials import IntPolynomial
from ivgamma.report import PASS
from ivgamma.signed_permutations import CALIBRATED, ResourceGuardError

P = IntPolynomial

KNOWN = {
    1: P(),
    2: P([0, 3]),
    3: P([0, 7, 7]),
    4: P([0, 15, 87, 15]),
    5: P([0, 31, 551, 551, 31]),
}


@pytest.mark.parametrize("n", range(1, 6))
def test_routes_agree(n):
    a = lh.local_h_definition(n)
    assert a == lh.local_h_derangement(n) == lh.local_h_excedance(n) == KNOWN[n]


def test_derangement_terms():
    assert lh.derangement_term(0) == P([1])
    assert lh.derangement_term(1).is_zero()
    assert lh.derangement_term(2) == P([0, 2])
    assert lh.derangement_term(3) == P([0, 6, 6])


@pytest.mark.parametrize("n", range(1, 7))
def test_properties(n):
    res = lh.local_h(n)
    assert res.nonnegative and res.unimodal and res.xi.is_nonnegative()


def test_guard_and_bad_route():
    with pytest.raises(ResourceGuardError):
        lh.local_h_definition(6)
    with pytest.raises(ValueError):
        lh.local_h(3, "magic")


def test_calibration_is_unique():
    cal = lh.calibrate((2, 3, 4))
    assert cal.resolved and cal.chosen == CALIBRATED


@pytest.mark.parametrize("n", range(2, 6))
def test_boundary(n):
    assert all(r.status == PASS for r in lh.boundary_h_check(n))


def test_interior_difference():
    recs = lh.interior_difference_report(5)
    assert len(recs) == 32
    assert all(r.status == PASS for r in recs)


def test_result_json():
    d = lh.local_h(3).to_json()
    assert d["route"] == "derangement"
    assert d["xi"] == {"ref_degree": 3, "entries": ["0", "7"]}
