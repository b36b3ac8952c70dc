"""Type B Eulerian polynomial families refined by first letter.

Notation used in names:

* ``b_plus_poly(n, j)``: descent polynomial of {σ ∈ B_n : σ_n > 0, σ_1 = j}.
* ``symmetric_poly(n, j)``: B+_{n,j} + B+_{n,n-j+1} (single term in the
  middle), palindromic at degree n-1 for j > 0 and n for j < 0.
* ``tilde_poly(n, j)``: t B+_{n,j} + B+_{n,n-j+1} (degree n), and for
  j < 0, t B+_{n,-(n-j+1)} + B+_{n,j} (degree n+1).

Negative j stands for a barred (negative) first letter throughout.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

from .polynomials import GammaVector, IntPolynomial, gamma_expand
from .report import CORRECTED, Record, check, corrected
from .signed_permutations import des_B, enumerate_class, slides, stat_tables


def _check_j(n: int, j: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= abs(j) <= n:
        raise IndexError(f"first letter {j} out of range for n={n}")


@lru_cache(maxsize=None)
def _b_plus_enum(n: int, j: int) -> IntPolynomial:
    return IntPolynomial(stat_tables(n).b_plus(j))


@lru_cache(maxsize=None)
def _b_plus_rec(n: int, j: int) -> IntPolynomial:
    if n == 1:
        return IntPolynomial([1]) if j == 1 else IntPolynomial()
    t = IntPolynomial([0, 1])
    pos = lambda k: _b_plus_rec(n - 1, k)
    neg = lambda k: _b_plus_rec(n - 1, -k)
    if j > 0:
        s = j
        return (
            t * sum((pos(k) for k in range(1, s)), IntPolynomial())
            + sum((pos(k) for k in range(s, n)), IntPolynomial())
            + sum((neg(k) for k in range(1, n)), IntPolynomial())
        )
    s = -j
    return (
        t * sum((pos(k) for k in range(1, n)), IntPolynomial())
        + t * sum((neg(k) for k in range(s, n)), IntPolynomial())
        + sum((neg(k) for k in range(1, s)), IntPolynomial())
    )


def b_plus_poly(n: int, j: int, method: str = "enumerate") -> IntPolynomial:
    _check_j(n, j)
    if method == "enumerate":
        return _b_plus_enum(n, j)
    if method == "recurrence":
        return _b_plus_rec(n, j)
    raise ValueError(f"unknown method {method!r}")


def _fundamental(n: int, j: int) -> None:
    _check_j(n, j)
    if 2 * abs(j) > n + 1:
        raise IndexError(f"index {j} outside the fundamental range 1 <= |j| <= (n+1)/2 for n={n}")


def symmetric_poly(n: int, j: int) -> tuple[IntPolynomial, int]:
    _fundamental(n, j)
    a = abs(j)
    partner = n - a + 1
    sign = 1 if j > 0 else -1
    p = b_plus_poly(n, j)
    if partner != a:
        p = p + b_plus_poly(n, sign * partner)
    return p, (n - 1 if j > 0 else n)


def tilde_poly(n: int, j: int) -> tuple[IntPolynomial, int]:
    """Defined for 1 <= |j| <= (n+1)/2; at the middle index it is (1+t) times one term."""
    _fundamental(n, j)
    a = abs(j)
    partner = n - a + 1
    if j > 0:
        return b_plus_poly(n, a).shift(1) + b_plus_poly(n, partner), n
    return b_plus_poly(n, -partner).shift(1) + b_plus_poly(n, -a), n + 1


def family_poly(n: int, j: int, family: str) -> tuple[IntPolynomial, int]:
    if family == "symmetric":
        return symmetric_poly(n, j)
    if family == "tilde":
        return tilde_poly(n, j)
    if family == "plain":
        return b_plus_poly(n, j), n
    raise ValueError(f"unknown family {family!r}")


@lru_cache(maxsize=None)
def gamma_nj(n: int, j: int, family: str = "symmetric") -> GammaVector:
    if family not in ("symmetric", "tilde"):
        raise ValueError("gamma vectors exist for the symmetric and tilde families only")
    p, D = family_poly(n, j, family)
    return gamma_expand(p, D)


def class_polys(n: int) -> dict[str, IntPolynomial]:
    tables = stat_tables(n)
    return {c: IntPolynomial(tables.class_descents(c)) for c in ("B", "B+", "B-", "B++", "B-+")}


def eulerian_B(n: int) -> IntPolynomial:
    return class_polys(n)["B"]


def gamma_B(n: int) -> GammaVector:
    return gamma_expand(eulerian_B(n), n)


def _cb(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def _reverse(p: IntPolynomial, D: int) -> IntPolynomial:
    return p.reversed_at(D)


# first-letter symmetries and recurrences ---------------------------------


def verify_first_letter(max_n: int = 7) -> list[Record]:
    suite, locus = "first-letter", "first-letter symmetries and recurrences"
    recs = []

    def B(n, j, r):
        return b_plus_poly(n, j)[r]

    # (1)
    bad = None
    for n in range(1, max_n + 1):
        for s in range(1, n + 1):
            for r in range(n):
                if B(n, s, r) != B(n, n - s + 1, n - r - 1) and bad is None:
                    bad = {"n": n, "s": s, "r": r, "lhs": B(n, s, r), "rhs": B(n, n - s + 1, n - r - 1)}
    recs.append(check(suite, "B+(n,s,r) = B+(n,n-s+1,n-r-1)", locus + "(1)", {"max_n": max_n}, bad is None, bad))

    # (2): printed exponent n-r-1 on the printed range 1 <= r <= n-1, corrected n-r
    printed_bad = corrected_bad = None
    for n in range(1, max_n + 1):
        for s in range(1, n + 1):
            for r in range(1, n):
                lhs = B(n, -s, r)
                p = B(n, -(n - s + 1), n - r - 1)
                c = B(n, -(n - s + 1), n - r)
                if lhs != p and printed_bad is None:
                    printed_bad = {"n": n, "s": s, "r": r, "lhs": lhs, "printed_rhs": p, "corrected_rhs": c}
                if lhs != c and corrected_bad is None:
                    corrected_bad = {"n": n, "s": s, "r": r, "lhs": lhs, "corrected_rhs": c}
    recs.append(corrected(
        suite, "B+(n,-s,r) = B+(n,-(n-s+1),n-r)", locus + "(2)", {"max_n": max_n},
        printed_bad is None, corrected_bad is None, printed_bad or corrected_bad,
        note="printed exponent n-r-1; polynomial form B+_{n,-s}(t) = t^n B+_{n,-(n-s+1)}(1/t)",
    ))

    # (3), (4): recurrences against enumeration
    for item, sign in (("(3)", 1), ("(4)", -1)):
        bad = None
        for n in range(1, max_n + 1):
            for s in range(1, n + 1):
                a, b = b_plus_poly(n, sign * s, "enumerate"), b_plus_poly(n, sign * s, "recurrence")
                if a != b and bad is None:
                    bad = {"n": n, "j": sign * s, "enumerated": a, "recurrence": b}
        name = "recurrence for B+_{n,s}" if sign > 0 else "recurrence for B+_{n,-s}"
        recs.append(check(suite, name, locus + item, {"max_n": max_n}, bad is None, bad))
    return recs


def verify_end_letters(max_n: int = 7) -> list[Record]:
    suite, locus = "end-letters", "end-letter identities"
    recs = []
    bad1 = bad2 = bad3 = None
    printed_bad = corrected_bad = None
    for n in range(2, max_n + 1):
        prev = class_polys(n - 1)
        first, last = b_plus_poly(n, 1), b_plus_poly(n, n)
        if first != prev["B+"] and bad1 is None:
            bad1 = {"n": n, "lhs": first, "rhs": prev["B+"]}
        if last != _reverse(prev["B+"], n - 1) and bad2 is None:
            bad2 = {"n": n, "lhs": last, "rhs": _reverse(prev["B+"], n - 1)}
        if last != prev["B-"] and bad3 is None:
            bad3 = {"n": n, "lhs": last, "rhs": prev["B-"]}
        total = first + last
        cur = class_polys(n)["B"]
        if total != cur and printed_bad is None:
            printed_bad = {"n": n, "B+_{n,1}+B+_{n,n}": total, "B_n": cur, "B_{n-1}": prev["B"]}
        if total != prev["B"] and corrected_bad is None:
            corrected_bad = {"n": n, "B+_{n,1}+B+_{n,n}": total, "B_{n-1}": prev["B"]}
    p = {"max_n": max_n}
    recs.append(check(suite, "B+_{n,1}(t) = B+_{n-1}(t)", locus, p, bad1 is None, bad1))
    recs.append(check(suite, "B+_{n,n}(t) = t^(n-1) B+_{n-1}(1/t)", locus, p, bad2 is None, bad2))
    recs.append(check(suite, "B+_{n,n}(t) = B-_{n-1}(t)", locus, p, bad3 is None, bad3))
    recs.append(corrected(
        suite, "B_{n-1}(t) = B+_{n,1}(t) + B+_{n,n}(t)", locus, p,
        printed_bad is None, corrected_bad is None, printed_bad or corrected_bad,
        note="printed with B_n on the left",
    ))
    return recs


def verify_palindromic(max_n: int = 8) -> list[Record]:
    suite, locus = "palindromic", "palindromic class polynomials"
    bad_pp = printed_bad = corrected_bad = None
    for n in range(1, max_n + 1):
        cp = class_polys(n)
        pp, mp = cp["B++"], cp["B-+"]
        for k in range(n + 1):
            if pp[k] != (pp[n - 1 - k] if n - 1 - k >= 0 else 0) and bad_pp is None:
                bad_pp = {"n": n, "k": k, "B++(n,k)": pp[k]}
            printed = mp[n - k - 1] if n - k - 1 >= 0 else 0
            if mp[k] != printed and printed_bad is None:
                printed_bad = {"n": n, "k": k, "B-+(n,k)": mp[k], "B-+(n,n-k-1)": printed, "B-+(n,n-k)": mp[n - k]}
            if mp[k] != mp[n - k] and corrected_bad is None:
                corrected_bad = {"n": n, "k": k, "B-+(n,k)": mp[k], "B-+(n,n-k)": mp[n - k]}
    p = {"max_n": max_n}
    return [
        check(suite, "B++(n,k) = B++(n,n-k-1)", locus, p, bad_pp is None, bad_pp),
        corrected(suite, "B-+(n,k) = B-+(n,n-k)", locus, p, printed_bad is None, corrected_bad is None,
                  printed_bad or corrected_bad, note="printed as B-+(n,n-k-1)"),
    ]


# reduction identities ---------------------------------------------------


def _S(n, k):
    """Symmetric family with any positive or negative index, folded into range."""
    a = abs(k)
    if 2 * a > n + 1:
        a = n - a + 1
    return symmetric_poly(n, a if k > 0 else -a)[0]


def _T(n, k):
    return tilde_poly(n, k)[0]


def _gS(n, k):
    return gamma_nj(n, k, "symmetric")


def _gT(n, k):
    return gamma_nj(n, k, "tilde")


def _sum(items, start):
    acc = start
    for x in items:
        acc = acc + x
    return acc


def reduction_sides(n: int, item: int, j: int | None):
    """(lhs poly, rhs poly, lhs gamma, rhs gamma) for one instance of the six recurrences."""
    t = IntPolynomial([0, 1])
    one_t = IntPolynomial([1, 1])
    Z = IntPolynomial()
    m = n - 1
    h = n // 2
    if item == 1:
        mid = (n + 1) // 2
        lhs = symmetric_poly(n, mid)[0]
        rhs = _sum((_T(m, k) + _S(m, -k) for k in range(1, mid)), Z)
        glhs = _gS(n, mid)
        grhs = _sum((_gT(m, k) + _gS(m, -k) for k in range(1, mid)), GammaVector.zero(n - 1))
    elif item == 2:
        mid = (n + 1) // 2
        lhs = symmetric_poly(n, -mid)[0]
        rhs = _sum((t * _S(m, k) + _T(m, -k) for k in range(1, mid)), Z)
        glhs = _gS(n, -mid)
        grhs = _sum((_gT(m, -k) + _gS(m, k).shift() for k in range(1, mid)), GammaVector.zero(n))
    elif item == 3:
        lhs = symmetric_poly(n, j)[0]
        rhs = (
            2 * _sum((_T(m, k) for k in range(1, j)), Z)
            + one_t * _sum((_S(m, k) for k in range(j, h + 1)), Z)
            + 2 * _sum((_S(m, -k) for k in range(1, h + 1)), Z)
        )
        glhs = _gS(n, j)
        grhs = _sum(
            [2 * _gS(m, -k) for k in range(1, h + 1)]
            + [2 * _gT(m, k) for k in range(1, j)]
            + [_gS(m, k).lift() for k in range(j, h + 1)],
            GammaVector.zero(n - 1),
        )
    elif item == 4:
        lhs = symmetric_poly(n, -j)[0]
        rhs = (
            2 * t * _sum((_S(m, k) for k in range(1, h + 1)), Z)
            + 2 * _sum((_T(m, -k) for k in range(1, j)), Z)
            + one_t * _sum((_S(m, -k) for k in range(j, h + 1)), Z)
        )
        glhs = _gS(n, -j)
        grhs = _sum(
            [2 * _gS(m, k).shift() for k in range(1, h + 1)]
            + [2 * _gT(m, -k) for k in range(1, j)]
            + [_gS(m, -k).lift() for k in range(j, h + 1)],
            GammaVector.zero(n),
        )
    elif item == 5:
        lhs = tilde_poly(n, j)[0]
        rhs = (
            one_t * _sum((_T(m, k) for k in range(1, j)), Z)
            + 2 * t * _sum((_S(m, k) for k in range(j, h + 1)), Z)
            + one_t * _sum((_S(m, -k) for k in range(1, h + 1)), Z)
        )
        glhs = _gT(n, j)
        grhs = _sum(
            [_gT(m, k).lift() for k in range(1, j)]
            + [2 * _gS(m, k).shift() for k in range(j, h + 1)]
            + [_gS(m, -k).lift() for k in range(1, h + 1)],
            GammaVector.zero(n),
        )
    elif item == 6:
        lhs = tilde_poly(n, -j)[0]
        rhs = (
            t * one_t * _sum((_S(m, k) for k in range(1, h + 1)), Z)
            + 2 * t * _sum((_S(m, -k) for k in range(j, h + 1)), Z)
            + one_t * _sum((_T(m, -k) for k in range(1, j)), Z)
        )
        glhs = _gT(n, -j)
        grhs = _sum(
            [_gT(m, -k).lift() for k in range(1, j)]
            + [2 * _gS(m, -k).shift() for k in range(j, h + 1)]
            + [_gS(m, k).lift().shift() for k in range(1, h + 1)],
            GammaVector.zero(n + 1),
        )
    else:
        raise ValueError(f"no item {item}")
    return lhs, rhs, glhs, grhs


def reduction_instances(n: int):
    if n % 2 == 1:
        yield 1, None
        yield 2, None
    for item in (3, 4, 5, 6):
        for j in range(1, (n + 1) // 2 + (0 if n % 2 else 1)):
            if 2 * j < n + 1:
                yield item, j


def verify_reductions(n: int) -> list[Record]:
    if n < 3:
        raise ValueError("reduction identities start at n = 3")
    recs = []
    for item, j in reduction_instances(n):
        lhs, rhs, glhs, grhs = reduction_sides(n, item, j)
        params = {"n": n, "item": item} | ({"j": j} if j is not None else {})
        recs.append(check("reductions", f"item {item} (polynomial)", "reduction identities", params, lhs == rhs,
                          {"lhs": lhs, "rhs": rhs}))
        recs.append(check("reductions", f"item {item} (gamma, explicit shifts)", "reduction identities", params, glhs == grhs,
                          {"lhs": glhs, "rhs": grhs}))
    return recs


# slides -----------------------------------------------------------------


def slide_counts(n: int) -> dict:
    tables = stat_tables(n)
    return {
        "W++": tables.w_table("B++"),
        "W-+": tables.w_table("B-+"),
        "b++": tables.b_slide("B++"),
        "b-+": tables.b_slide("B-+"),
    }


def expansion(b: list[int], n: int, offset: int) -> IntPolynomial:
    """sum_s b[s] x^s (1+x)^(n - offset - 2s) over the s with a nonnegative exponent."""
    acc = IntPolynomial()
    for s, c in enumerate(b):
        e = n - offset - 2 * s
        if c and e >= 0:
            acc = acc + c * IntPolynomial.one_plus_t_pow(e).shift(s)
        elif c:
            return None
    return acc


def verify_slide_expansion(n: int) -> list[Record]:
    suite = "slides"
    sc = slide_counts(n)
    cp = class_polys(n)
    recs = []
    p = {"n": n}

    # refined binomial relation, B++
    bad = None
    W, b = sc["W++"], sc["b++"]
    for k in range(n + 1):
        for s in range(n + 1):
            want = _cb(n - 1 - 2 * s, k - s) * b[s]
            if W[k][s] != want and bad is None:
                bad = {"n": n, "k": k, "s": s, "count": W[k][s], "formula": want}
    recs.append(check(suite, "b++(n,k,s) = C(n-1-2s,k-s) b++(n,s)", "slide refinement", p, bad is None, bad))

    W, b = sc["W-+"], sc["b-+"]
    printed_bad = corrected_bad = None
    for k in range(n + 1):
        for s in range(n + 1):
            pr = _cb(n - 1 - 2 * s, k - s) * b[s]
            co = _cb(n - 2 * s, k - s) * b[s]
            if W[k][s] != pr and printed_bad is None:
                printed_bad = {"n": n, "k": k, "s": s, "count": W[k][s], "printed": pr, "corrected": co}
            if W[k][s] != co and corrected_bad is None:
                corrected_bad = {"n": n, "k": k, "s": s, "count": W[k][s], "corrected": co}
    recs.append(corrected(suite, "b-+(n,k,s) = C(n-2s,k-s) b-+(n,s)", "slide refinement", p,
                          printed_bad is None, corrected_bad is None, printed_bad or corrected_bad,
                          note="printed binomial C(n-1-2s,k-s)"))

    pp_sum = IntPolynomial(sum(_cb(n - 1 - 2 * s, k - s) * sc["b++"][s] for s in range(k + 1)) for k in range(n + 1))
    recs.append(check(suite, "B++(n,k) = sum_s C(n-1-2s,k-s) b++(n,s)", "slide refinement", p,
                      pp_sum == cp["B++"], {"n": n, "sum": pp_sum, "B++": cp["B++"]}))
    mp_pr = IntPolynomial(sum(_cb(n - 1 - 2 * s, k - s) * sc["b-+"][s] for s in range(1, k + 1)) for k in range(n + 1))
    mp_co = IntPolynomial(sum(_cb(n - 2 * s, k - s) * sc["b-+"][s] for s in range(1, k + 1)) for k in range(n + 1))
    recs.append(corrected(suite, "B-+(n,k) = sum_s C(n-2s,k-s) b-+(n,s)", "slide refinement", p,
                          mp_pr == cp["B-+"], mp_co == cp["B-+"],
                          {"n": n, "printed_sum": mp_pr, "corrected_sum": mp_co, "B-+": cp["B-+"]}))

    exp_pp = expansion(sc["b++"][: (n - 1) // 2 + 1], n, 1)
    recs.append(check(suite, "B++_n(x) = sum_s b++(n,s) x^s (1+x)^(n-1-2s)", "slide gamma expansion", p,
                      exp_pp == cp["B++"], {"n": n, "expansion": exp_pp, "B++": cp["B++"]}))
    printed = expansion([0] + sc["b-+"][1: (n - 1) // 2 + 1], n, 1)
    fixed = expansion(sc["b-+"][: n // 2 + 1], n, 0)
    recs.append(corrected(suite, "B-+_n(x) = sum_{s<=n/2} b-+(n,s) x^s (1+x)^(n-2s)", "slide gamma expansion", p,
                          printed == cp["B-+"], fixed == cp["B-+"],
                          {"n": n, "printed_expansion": printed, "corrected_expansion": fixed, "B-+": cp["B-+"]},
                          note="printed exponent n-1-2s and range s <= (n-1)/2"))
    if n <= 6:
        bad = None
        for sigma in enumerate_class(n, "B+"):
            k, _ = des_B(sigma.window)
            count, segs = slides(sigma.window)
            if count - 1 == k and any(len(seg) != 2 for seg in segs) and bad is None:
                bad = {"sigma": list(sigma.window), "slides": segs}
        recs.append(check(suite, "slides of W_B(n,s,s) members have length 2", "slide refinement", p,
                          bad is None, bad))
    return recs


__all__ = [
    "b_plus_poly", "symmetric_poly", "tilde_poly", "gamma_nj", "class_polys", "eulerian_B", "gamma_B",
    "verify_first_letter", "verify_end_letters", "verify_palindromic", "verify_reductions", "verify_slide_expansion",
    "reduction_sides", "slide_counts", "expansion", "CORRECTED",
]
