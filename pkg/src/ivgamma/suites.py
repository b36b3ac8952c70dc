"""Registry of verification suites used by ``ivgamma verify``."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

import numpy as np

from . import balanced_ffk as bf
from . import eulerian as eu
from . import local_h as lh
from .gamma_main import gamma_int, gamma_int_geometric, h_int_from_h
from .interval import apply, h_transform_matrix, int_simplex, verify_subdivision_transforms
from .polynomials import IntPolynomial, gamma_expand
from .report import INFO, Record, check, corrected
from .signed_permutations import des_B, slides, stat_tables
from .simplicial import cross_polytope_boundary, simplex, simplex_boundary


@dataclass
class Options:
    max_n: int = 7
    max_dim: int = 3
    seed: int = 0
    random_h: int = 20


def corpus(max_dim: int = 3):
    """(name, complex) pairs of the test corpus with dimension <= max_dim."""
    out = []
    for k in range(1, 5):
        out.append((f"simplex-{k}", simplex(k)))
    for k in range(2, 6):
        out.append((f"simplex-boundary-{k}", simplex_boundary(k)))
    for k in range(1, 5):
        out.append((f"cross-polytope-boundary-{k}", cross_polytope_boundary(k)))
    return [(name, cx) for name, cx in out if cx.dim <= max_dim]


def _poly_tuple(p: IntPolynomial, length: int) -> tuple[int, ...]:
    return tuple(p[i] for i in range(length))


# individual suites -----------------------------------------------------------


def suite_transforms(o: Options) -> list[Record]:
    recs = []
    for name, cx in corpus(o.max_dim):
        tc = verify_subdivision_transforms(cx, name, max_dim=max(o.max_dim, 3))
        p = {"complex": name}
        recs.append(check("transforms", "f(Int Δ) = F_d f(Δ)", "subdivision transforms", p, tc.f_ok,
                          {"constructed": tc.f_constructed, "matrix": tc.f_matrix}))
        recs.append(corrected("transforms", "h(Int Δ) = [B+(d+1, s+1, r)] h(Δ) with σ_1 = s+1", "subdivision transforms", p,
                              tc.h_constructed == tc.h_literal, tc.h_ok,
                              {"complex": name, "constructed": tc.h_constructed, "sigma_1=s+1": tc.h_matrix,
                               "sigma_1=s": tc.h_literal},
                              note="printed as σ_1 = s"))
    return recs


def suite_first_letter(o: Options) -> list[Record]:
    return eu.verify_first_letter(min(o.max_n, 7))


def suite_end_letters(o: Options) -> list[Record]:
    return eu.verify_end_letters(min(o.max_n, 7))


def suite_palindromic(o: Options) -> list[Record]:
    return eu.verify_palindromic(o.max_n)


def suite_reductions(o: Options) -> list[Record]:
    return [r for n in range(3, o.max_n + 1) for r in eu.verify_reductions(n)]


SLIDE_EXAMPLES = (
    ((3, -5, 7, 1, -6, 8, -9, -4, 2), 4, None),
    ((5, 6, -8, -1, 2, -9, -7, 3, 4), 3, 2),
)


def suite_slides(o: Options) -> list[Record]:
    recs = [r for n in range(1, o.max_n + 1) for r in eu.verify_slide_expansion(n)]
    anchors = {"b++(3,.)": (eu.slide_counts(3)["b++"][:2], [1, 8]),
               "b-+(3,1)": (eu.slide_counts(3)["b-+"][1], 6),
               "b-+(2,1)": (eu.slide_counts(2)["b-+"][1], 2)}
    for name, (got, want) in anchors.items():
        recs.append(check("slides", f"{name} = {want}", "slide anchors", {}, got == want, {"got": got}))
    for w, n_slides, n_des in SLIDE_EXAMPLES:
        s, segs = slides(w)
        k, _ = des_B(w)
        ok = s == n_slides and (n_des is None or k == n_des)
        recs.append(check("slides", "slide example parses as printed", "slide examples", {"sigma": list(w)}, ok,
                          {"slides": segs, "descents": k}))
    return recs


PRINTED_TABLES = {
    # (n, j, family): printed gamma vector
    (2, 1, "symmetric"): (1,), (2, 1, "tilde"): (0, 2), (2, -1, "symmetric"): (0, 2), (2, -1, "tilde"): (0, 1),
    (3, 1, "symmetric"): (1, 4), (3, 2, "symmetric"): (0, 4), (3, 1, "tilde"): (0, 4),
    (3, -1, "symmetric"): (0, 4), (3, -2, "symmetric"): (0, 2), (3, -1, "tilde"): (0, 1, 4),
    (4, 1, "symmetric"): (1, 20), (4, 2, "symmetric"): (0, 24), (4, 1, "tilde"): (0, 8, 16),
    (4, 2, "tilde"): (0, 10, 8), (4, -1, "symmetric"): (0, 8, 16), (4, -2, "symmetric"): (0, 6, 24),
    (4, -1, "tilde"): (0, 1, 20), (4, -2, "tilde"): (0, 2, 16),
    (6, 1, "symmetric"): (1, 232, 976), (6, 3, "symmetric"): (0, 168, 1248),
}


def suite_gamma_tables(o: Options) -> list[Record]:
    recs = []
    for (n, j, fam), want in sorted(PRINTED_TABLES.items()):
        got = eu.gamma_nj(n, j, fam).entries
        recs.append(check("gamma-tables", f"printed γ{'~' if fam == 'tilde' else ''}^(n,j)", "γ tables",
                          {"n": n, "j": j, "family": fam}, got == want, {"computed": got, "printed": want}))
    got = eu.gamma_nj(6, 2).entries
    recs.append(corrected("gamma-tables", "γ^(6,2)", "γ tables", {"n": 6, "j": 2}, got == (0, 192, 152),
                          got == (0, 192, 1152), {"computed": got, "printed": (0, 192, 152)},
                          note="third entry printed as 152"))
    recs.append(Record("gamma-tables", "γ~^(3,2) (not printed)", "γ tables", {"n": 3, "j": 2}, INFO,
                       {"computed": eu.gamma_nj(3, 2, "tilde").entries},
                       note="middle index: (1+t) B+_{3,2}"))
    return recs


def suite_d5_matrix(o: Options) -> list[Record]:
    M = h_transform_matrix(5)
    rows = {1: (237, 192, 168), 2: (1682, 1728, 1752)}
    recs = []
    # h = (h0,h1,h2,h2,h1,h0): column j collects B(.,j+1) + B(.,6-j)
    for r, want in rows.items():
        got = tuple(M[r][j] + M[r][5 - j] for j in range(3))
        recs.append(check("d5-matrix", "h(Int Δ) coefficients for n = 5", "d=5 matrix", {"r": r}, got == want,
                          {"computed": got, "printed": want}))
    cols = [eu.symmetric_poly(6, j)[0] for j in (1, 2, 3)]
    printed_cols = [(1, 237, 1682, 1682, 237, 1), (0, 192, 1728, 1728, 192, 0), (0, 168, 1752, 1752, 168, 0)]
    for j, (c, want) in enumerate(zip(cols, printed_cols), 1):
        recs.append(check("d5-matrix", "column equals 𝔹+_{6,j}", "d=5 matrix", {"j": j}, _poly_tuple(c, 6) == want,
                          {"computed": _poly_tuple(c, 6), "printed": want}))
    # the vector display labels the third column h_1; the polynomial line uses h_3, equal to h_2 by symmetry
    h = (1, 2, 5, 5, 2, 1)
    lhs = h_int_from_h(h)
    display = cols[0] + h[1] * cols[1] + h[1] * cols[2]
    fixed = cols[0] + h[1] * cols[1] + h[2] * cols[2]
    recs.append(corrected("d5-matrix", "h(Int Δ) = h_0 col_1 + h_1 col_2 + h_2 col_3", "d=5 matrix", {"h": list(h)},
                          display == lhs, fixed == lhs,
                          {"h": list(h), "computed": lhs, "with_h1_label": display},
                          note="third column labelled h_1 in the vector display"))
    poly_line = cols[0] + h[1] * cols[1] + h[3] * cols[2]
    recs.append(check("d5-matrix", "h(Int Δ,t) = h_0 𝔹+_{6,1} + h_1 𝔹+_{6,2} + h_3 𝔹+_{6,3}", "d=5 matrix",
                      {"h": list(h)}, poly_line == lhs, {"computed": lhs, "printed_form": poly_line},
                      note="holds because h_3 = h_2"))
    return recs


def suite_gamma_int(o: Options) -> list[Record]:
    """Column j of the decomposition against the h-transform matrix on the symmetric basis vector e_j + e_{n-j}."""
    recs = []
    rng = np.random.default_rng(o.seed)
    for n in range(1, o.max_n):
        tables = stat_tables(n + 1)
        M = h_transform_matrix(n)
        zero = [0] * (n + 1)
        bad_p = bad_c = None
        for j in range(n // 2 + 1):
            want = [M[r][j] + (M[r][n - j] if n - j != j else 0) for r in range(n + 1)]
            first = tables.b_plus(j + 1)
            printed_partner = tables.b_plus(n - j) if n - j >= 1 else zero
            fixed_partner = tables.b_plus(n + 1 - j) if n - j != j else zero
            printed = [first[r] + printed_partner[r] for r in range(n + 1)]
            fixed = [first[r] + fixed_partner[r] for r in range(n + 1)]
            if printed != want and bad_p is None:
                bad_p = {"n": n, "j": j, "printed_form": printed, "matrix": want}
            if fixed != want and bad_c is None:
                bad_c = {"n": n, "j": j, "corrected_form": fixed, "matrix": want}
        recs.append(corrected("gamma-int", "h_r(Int Δ) = Σ_j (B+(n+1,j+1,r) + B+(n+1,n+1-j,r)) h_j",
                              "γ(Int Δ) from h", {"n": n}, bad_p is None, bad_c is None,
                              bad_p or bad_c, note="printed second index n-j; middle term counted once"))
        ok = True
        for h in random_symmetric_h(rng, 5, n, n=n):
            direct = gamma_expand(IntPolynomial(apply(M, h)), n)
            ok &= gamma_int(h) == direct
        recs.append(check("gamma-int", "γ(Int Δ) = Σ h_j γ^(n+1,j+1)", "γ(Int Δ) from h", {"n": n},
                          ok, {"n": n}))
    return recs


def suite_boundary(o: Options) -> list[Record]:
    recs = [r for n in range(1, min(o.max_n, lh.CONSTRUCTION_MAX_N) + 1) for r in lh.boundary_h_check(n)]
    for n, want in ((2, (1, 1)), (3, (1, 10, 1))):
        got = _poly_tuple(eu.class_polys(n)["B++"], n)
        recs.append(check("boundary", f"B++_{n} = {want}", "boundary h-polynomial", {"n": n}, got == want,
                          {"got": got}))
    return recs


def suite_local_h(o: Options) -> list[Record]:
    m = min(o.max_n, lh.CONSTRUCTION_MAX_N)
    recs = lh.route_agreement(m, tuple(range(2, m + 1)))
    recs += lh.local_h_properties(min(o.max_n, 6))
    for n, want in ((1, IntPolynomial()), (2, IntPolynomial([0, 3])), (3, IntPolynomial([0, 7, 7]))):
        got = lh.local_h_derangement(n)
        recs.append(check("local-h", f"ℓ anchor n={n}", "local h-polynomial", {"n": n}, got == want,
                          {"got": got, "want": want}))
    # a variant with B-+_n (not B-+_k) inside the sum over k is also evaluated
    bad_p = bad_c = None
    for n in range(1, m + 1):
        ell = lh.local_h_definition(n)
        printed = IntPolynomial()
        for k in range(n + 1):
            printed = printed + comb(n, k) * eu.class_polys(n)["B-+"] * lh.derangement_poly_A(n - k)
        fixed = lh.local_h_derangement(n)
        if printed != ell and bad_p is None:
            bad_p = {"n": n, "printed_form": printed, "local_h": ell}
        if fixed != ell and bad_c is None:
            bad_c = {"n": n, "corrected_form": fixed, "local_h": ell}
    recs.append(corrected("local-h", "ℓ_V = Σ_k C(n,k) B-+_k 𝔡^A_{n-k}", "derangement expansion", {"max_n": m},
                          bad_p is None, bad_c is None, bad_p or bad_c, note="printed with B-+_n in the sum"))
    bad = None
    for n in range(1, m + 1):
        a, b = int_simplex(n).h_polynomial(), eu.class_polys(n)["B+"]
        if a != b and bad is None:
            bad = {"n": n, "h(Int 2^[n])": a, "B+_n": b}
    recs.append(check("local-h", "B+_n(x) = h(Int 2^[n], x)", "derangement expansion", {"max_n": m}, bad is None, bad))
    return recs


def suite_interior(o: Options) -> list[Record]:
    return lh.interior_difference_report(min(o.max_n, lh.CONSTRUCTION_MAX_N))


def suite_dec(o: Options) -> list[Record]:
    recs = bf.dec_report(min(o.max_n, 7), min(o.max_n, 6))
    # printed color rule: ceil(i/2) over descents i of the underlying permutation
    bad_p = bad_c = None
    for n in range(1, min(o.max_n, 6) + 1):
        dc = bf.dec_complex(n, validate=True)
        for v in dc.complex.vertices:
            des = {(i + 1 + 1) // 2 for i in range(n - 1) if v.base[i] > v.base[i + 1]}
            if len(des) != 1 and bad_p is None:
                bad_p = {"vertex": str(v), "descent colors": sorted(des)}
        if not dc.complex.is_balanced_coloring(dc.coloring) and bad_c is None:
            bad_c = {"n": n}
    recs.append(corrected("dec", "col(σ) = {⌈p/2⌉ : p a barred left peak}", "Coxeter complex of type B",
                          {"max_n": min(o.max_n, 6)}, bad_p is None, bad_c is None, bad_p or bad_c,
                          note="printed over descent positions, which gives some vertices two colors"))
    return recs


def suite_ineq(o: Options) -> list[Record]:
    return [r for n in range(1, min(o.max_n, 8) + 1) for r in bf.verify_gamma_ineq(n)]


def suite_goodness(o: Options) -> list[Record]:
    recs = [r for n in range(2, min(o.max_n, 6) + 1) for r in bf.verify_goodness(n)]
    # combine the n = 4 certificates
    f = eu.gamma_nj(4, 1).entries
    a_vec, b_vec = eu.gamma_nj(4, 2).entries, eu.gamma_nj(4, -1).entries
    a = bf.search_good_certificate(f, a_vec, bf.D_GOOD).certificate
    b = bf.search_good_certificate(f, b_vec, bf.D1_GOOD).certificate
    ok = a is not None and b is not None and bf.verify_good_combination(f, a_vec, a, b_vec, b)
    recs.append(check("goodness", "d-good plus (d+1)-good is (d+1)-good", "combining good certificates",
                      {"f": list(f), "g": list(a_vec), "g'": list(b_vec)}, ok, {"f": list(f)}))
    return recs


def random_symmetric_h(rng: np.random.Generator, count: int, max_n: int = 8, high: int = 20, n: int | None = None):
    """Random nonnegative symmetric h-vectors with h_0 = 1 (fixed length n+1 when n is given)."""
    out = []
    fixed = n
    for _ in range(count):
        n = fixed if fixed is not None else int(rng.integers(1, max_n + 1))
        half = [1] + [int(x) for x in rng.integers(0, high, size=n // 2)]
        h = [0] * (n + 1)
        for i, x in enumerate(half):
            h[i] = h[n - i] = x
        out.append(tuple(h))
    return out


def suite_int_ffk(o: Options) -> list[Record]:
    recs = []
    for name, cx in corpus(o.max_dim):
        h = cx.h_polynomial()
        hv = tuple(h[i] for i in range(cx.dim + 2))
        if hv != hv[::-1]:
            continue
        geo = gamma_int_geometric(cx)
        rec = bf.verify_int_ffk(hv, name)
        recs.append(rec)
        recs.append(check("int-ffk", "γ(Int Δ) by formula = by construction", "FFK property of γ(Int Δ)", {"complex": name},
                          geo == gamma_int(hv), {"geometric": geo, "formula": gamma_int(hv)}))
    rng = np.random.default_rng(o.seed)
    for h in random_symmetric_h(rng, o.random_h, min(o.max_n - 1, 8)):
        g = gamma_int(h)
        recs.append(check("int-ffk", "γ(Int Δ) >= 0 for nonnegative symmetric h", "FFK property of γ(Int Δ)",
                          {"h": list(h), "seed": o.seed}, g.is_nonnegative(), {"gamma": g}))
    return recs


def eulerian_closed_form(n: int, k: int) -> int:
    return sum((-1) ** (k - i) * comb(n + 1, k - i) * (2 * i + 1) ** n for i in range(k + 1))


PRINTED_EULERIAN = {2: (1, 6, 1), 3: (1, 23, 23, 1), 5: (1, 237, 1682, 1682, 237, 1)}


def suite_eulerian_anchor(o: Options) -> list[Record]:
    recs = []
    for n in range(1, o.max_n + 1):
        got = _poly_tuple(eu.eulerian_B(n), n + 1)
        want = tuple(eulerian_closed_form(n, k) for k in range(n + 1))
        recs.append(check("eulerian-anchor", "B_n(t) = type B Eulerian numbers", "type B Eulerian polynomial",
                          {"n": n}, got == want, {"enumerated": got, "closed_form": want}))
    for n, want in PRINTED_EULERIAN.items():
        if n <= o.max_n:
            got = _poly_tuple(eu.eulerian_B(n), n + 1)
            recs.append(check("eulerian-anchor", "printed B_n row", "type B Eulerian polynomial", {"n": n},
                              got == want, {"got": got}))
    for n in range(2, o.max_n + 1):
        g = eu.gamma_nj(n, 1)
        ok = g == gamma_expand(eu.eulerian_B(n - 1), n - 1) and g.entries[0] == 1
        ok &= all(eu.gamma_nj(n, j, fam).entries[0] == 0 for j in range(-((n + 1) // 2), (n + 1) // 2 + 1)
                  if j not in (0, 1) for fam in ("symmetric",))
        recs.append(check("eulerian-anchor", "γ^(n,1) = γ(B_{n-1}) and γ_0^(n,j) = 0 for j != 1",
                          "γ(Int Δ) from h", {"n": n}, ok, {"n": n}))
    return recs


SUITES: dict[str, Callable[[Options], list[Record]]] = {
    "transforms": suite_transforms,
    "first-letter": suite_first_letter,
    "end-letters": suite_end_letters,
    "palindromic": suite_palindromic,
    "reductions": suite_reductions,
    "slides": suite_slides,
    "gamma-tables": suite_gamma_tables,
    "d5-matrix": suite_d5_matrix,
    "gamma-int": suite_gamma_int,
    "boundary": suite_boundary,
    "local-h": suite_local_h,
    "interior": suite_interior,
    "dec": suite_dec,
    "ineq": suite_ineq,
    "goodness": suite_goodness,
    "int-ffk": suite_int_ffk,
    "eulerian-anchor": suite_eulerian_anchor,
}


def resolve(names: str) -> list[str]:
    """Comma list of suite names; ``all`` and ``errata`` expand to every suite."""
    out = []
    for name in (x.strip() for x in names.split(",")):
        if not name:
            continue
        if name in ("all", "errata"):
            out.extend(SUITES)
        elif name in SUITES:
            out.append(name)
        else:
            raise KeyError(name)
    return list(dict.fromkeys(out))


__all__ = ["Options", "SUITES", "resolve", "corpus"]
