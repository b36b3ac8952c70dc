import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ivgamma import signed_permutations as sp
from ivgamma.signed_permutations import (
    CALIBRATED,
    ExcedanceInterpretation,
    ResourceGuardError,
    SignedPermutation,
    build_stat_tables,
    derangement_poly_A,
    derangements_B_star,
    des_B,
    enumerate_class,
    lpk,
    slides,
    stat_tables,
    stat_tables_naive,
)


def test_signed_permutation_validation_and_call():
    s = SignedPermutation((2, -3, 1))
    assert s(1) == 2 and s(-2) == 3 and s(3) == 1
    with pytest.raises(ValueError):
        SignedPermutation((1, 1))
    with pytest.raises(IndexError):
        s(0)


def test_b_plus_n2():
    got = {x.window for x in enumerate_class(2, "B+")}
    assert got == {(1, 2), (2, 1), (-1, 2), (-2, 1)}


def test_first_letter_filter():
    got = {x.window for x in enumerate_class(3, "B+", first=-2)}
    assert got == {(-2, 1, 3), (-2, 3, 1), (-2, -1, 3), (-2, -3, 1)}
    with pytest.raises(IndexError):
        list(enumerate_class(3, "B", first=4))
    with pytest.raises(ValueError):
        list(enumerate_class(3, "C"))


@pytest.mark.parametrize("n", range(1, 6))
def test_class_sizes(n):
    assert sum(1 for _ in enumerate_class(n)) == 2**n * math.factorial(n)
    assert sum(1 for _ in enumerate_class(n, "B+")) == 2 ** (n - 1) * math.factorial(n)


def test_descents():
    assert des_B((-1, 3, 2)) == (2, frozenset({0, 2}))
    assert des_B((2, -3, 1)) == (1, frozenset({1}))


def test_slide_examples():
    n, segs = slides((3, -5, 7, 1, -6, 8, -9, -4, 2))
    assert n == 4
    assert segs == [(3, -5), (7, 1, -6), (8, -9), (2, -10)]
    assert slides((5, 6, -8, -1, 2, -9, -7, 3, 4))[0] == 3
    assert des_B((5, 6, -8, -1, 2, -9, -7, 3, 4))[0] == 2
    assert slides((-1, 2, 3)) == (2, [(0, -1), (3, -4)])


def test_lpk():
    assert lpk((1, 3, 2)) == 1
    from itertools import permutations
    assert sum(1 for p in permutations((1, 2, 3)) if lpk(p) == 1) == 5


@given(st.permutations(range(1, 7)), st.lists(st.booleans(), min_size=6, max_size=6))
def test_slides_bound_descents(perm, signs):
    w = tuple(-x if s else x for x, s in zip(perm, signs))
    k, _ = des_B(w)
    s, segs = slides(w)
    # each slide step is a descent of the padded word, whose last step always descends
    assert 1 <= s <= k + 1
    assert sum(len(x) - 1 for x in segs) == k + 1


@pytest.mark.parametrize("n", range(1, 6))
def test_numpy_tables_match_naive(n):
    assert build_stat_tables(n).full == stat_tables_naive(n).full


def test_parallel_build_is_bit_identical():
    serial = build_stat_tables(6)
    parallel = build_stat_tables(6, workers=2)
    assert parallel.full == serial.full
    assert parallel.full.counts.tobytes() == serial.full.counts.tobytes()


def test_marginals_small():
    t = stat_tables(3)
    assert t.b_plus(1) == [1, 3, 0]
    assert t.class_descents("B++") == [1, 10, 1, 0]
    assert t.class_descents("B-+") == [0, 6, 6, 0]
    assert t.b_slide("B++")[:2] == [1, 8]
    assert t.b_slide("B-+")[1] == 6
    assert stat_tables(2).b_slide("B-+")[1] == 2
    assert stat_tables(2).class_descents("B") == [1, 6, 1]


def test_table_csv_and_json():
    tab = stat_tables(3).table("bpjk")
    rows = tab.to_csv().strip().splitlines()
    assert rows[0] == "j,k,count"
    assert len(rows) == 1 + 6 * 3
    assert tab.to_json()["axes"] == ["j", "k"]
    with pytest.raises(ValueError):
        stat_tables(3).table("nope")


def test_guard(monkeypatch):
    with pytest.raises(ResourceGuardError, match="--allow-n9"):
        stat_tables(9)
    with pytest.raises(ResourceGuardError):
        sp.check_bound(10, 9)
    with pytest.raises(ValueError):
        sp.check_bound(0)
    monkeypatch.setitem(sp.LIMITS, "max_n", 3)
    with pytest.raises(ResourceGuardError):
        list(enumerate_class(4))


def test_derangement_poly_A():
    assert derangement_poly_A(0).coeffs == (1,)
    assert derangement_poly_A(1).is_zero()
    assert derangement_poly_A(2).coeffs == (0, 1)
    assert derangement_poly_A(3).coeffs == (0, 1, 1)


def test_type_b_derangements_d2():
    everything = ExcedanceInterpretation("natural", "none")
    got = {s.window for s, _ in derangements_B_star(2, everything)}
    assert got == {(2, 1), (-2, 1), (2, -1), (-1, -2), (-2, -1)}


def test_calibrated_excedance_small():
    for d, want in ((2, (0, 3)), (3, (0, 7, 7))):
        acc = [0] * (d + 1)
        for _, e in derangements_B_star(d, CALIBRATED):
            acc[e] += 1
        while acc and acc[-1] == 0:
            acc.pop()
        assert tuple(acc) == want


def test_bad_interpretation():
    with pytest.raises(ValueError):
        ExcedanceInterpretation("weird", "none")
