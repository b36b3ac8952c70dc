"""FFK vectors, goodness certificates and the decorated-permutation complex.

A vector f = (1, f_1, ..., f_d) is k-FFK when some k-colorable simplicial
complex has f-vector f.  :func:`is_k_ffk` decides this by colored
compression: put vertex v in color class v mod k, take the first f_i
colorful i-sets in colex order at every level, and test whether every
shadow lands inside the chosen lower level.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .eulerian import gamma_B, gamma_nj
from .gamma_main import SymmetricHInput, gamma_int
from .report import INFO, Record, check
from .signed_permutations import check_bound, left_peak_positions
from .simplicial import SimplicialComplex

# FFK ------------------------------------------------------------------------


def dominates(f: Sequence[int], g: Sequence[int]) -> bool:
    """g_i <= f_i for every i, missing entries read as 0."""
    L = max(len(f), len(g))
    f = list(f) + [0] * (L - len(f))
    g = list(g) + [0] * (L - len(g))
    return all(b <= a for a, b in zip(f, g))


def _elementary(sizes: Sequence[int], i: int) -> int:
    """e_i of the class sizes: number of colorful i-sets."""
    e = [1] + [0] * i
    for c in sizes:
        for j in range(i, 0, -1):
            e[j] += e[j - 1] * c
    return e[i]


def _balanced_sizes(m: int, k: int) -> list[int]:
    return [m // k + (1 if c < m % k else 0) for c in range(k)]


def colex_colorful(i: int, k: int, limit: int | None = None, forbidden: frozenset = frozenset()) -> Iterator[tuple]:
    """Colorful i-subsets of {0, 1, ...} (color v mod k) in colex order.

    With ``limit`` only subsets of range(limit) are produced.
    """
    if i == 0:
        yield ()
        return
    if i > k - len(forbidden):
        return
    top = itertools.count(i - 1) if limit is None else range(i - 1, limit)
    for v in top:
        c = v % k
        if c in forbidden:
            continue
        for rest in colex_colorful(i - 1, k, v, forbidden | {c}):
            yield rest + (v,)


@dataclass
class FFKDecision:
    ok: bool
    reason: str
    f: tuple[int, ...]
    k: int

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"f": list(self.f), "k": self.k, "ok": self.ok, "reason": self.reason}


def _validate_f(f: Sequence[int]) -> tuple[int, ...]:
    f = tuple(int(x) for x in f)
    if not f or f[0] != 1:
        raise ValueError(f"an f-vector must start with f_0 = 1, got {f}")
    if any(x < 0 for x in f):
        raise ValueError(f"negative entry in {f}")
    return f


def ffk_decision(f: Sequence[int], k: int) -> FFKDecision:
    f = _validate_f(f)
    while len(f) > 1 and f[-1] == 0:
        f = f[:-1]
    if len(f) > k + 1:
        return FFKDecision(False, f"length {len(f)} exceeds k+1 = {k + 1}", f, k)
    if len(f) == 1:
        return FFKDecision(True, "the complex {∅}", f, k)
    sizes = _balanced_sizes(f[1], k)
    for i in range(2, len(f)):
        cap = _elementary(sizes, i)
        if f[i] > cap:
            return FFKDecision(False, f"f_{i} = {f[i]} exceeds {cap}, the colorful {i}-sets on {f[1]} vertices", f, k)
        if f[i - 1] == 0 and f[i]:
            return FFKDecision(False, f"f_{i} > 0 but f_{i - 1} = 0", f, k)
    prev = None
    for i in range(1, len(f)):
        level = list(itertools.islice(colex_colorful(i, k), f[i]))
        if prev is not None:
            for S in level:
                for drop in range(i):
                    if S[:drop] + S[drop + 1:] not in prev:
                        return FFKDecision(False, f"shadow of the first {f[i]} colorful {i}-sets is not inside"
                                                  f" the first {f[i - 1]} colorful {i - 1}-sets", f, k)
        prev = set(level)
    return FFKDecision(True, "colex compressed family is a complex", f, k)


@lru_cache(maxsize=4096)
def _is_k_ffk_cached(f: tuple[int, ...], k: int) -> bool:
    return ffk_decision(f, k).ok


def is_k_ffk(f: Sequence[int], k: int) -> bool:
    return _is_k_ffk_cached(_validate_f(f), k)


def realize_ffk(f: Sequence[int], k: int, max_faces: int = 20000) -> tuple[SimplicialComplex, dict] | None:
    """The compressed k-colorable complex with f-vector f and its coloring, or None when f is not k-FFK."""
    dec = ffk_decision(f, k)
    if not dec.ok:
        return None
    f = dec.f
    if sum(f) > max_faces:
        raise ValueError(f"{sum(f)} faces exceed the realization limit {max_faces}")
    faces = [S for i in range(len(f)) for S in itertools.islice(colex_colorful(i, k), f[i])]
    cx = SimplicialComplex.from_faces(faces, vertices=list(range(f[1]) if len(f) > 1 else []))
    return cx, {v: v % k for v in cx.vertices}


def brute_force_k_colorable(f: Sequence[int], k: int, max_vertices: int = 6) -> bool:
    """Exhaustive search for a k-colorable complex with f-vector f (tiny inputs only)."""
    f = _validate_f(f)
    while len(f) > 1 and f[-1] == 0:
        f = f[:-1]
    if len(f) > k + 1:
        return False
    if len(f) == 1:
        return True
    n = f[1]
    if n > max_vertices:
        raise ValueError(f"brute force limited to {max_vertices} vertices")
    seen = set()
    for colors in itertools.product(range(k), repeat=n):
        key = tuple(sorted(colors.count(c) for c in range(k)))
        if key in seen:
            continue
        seen.add(key)
        if _extend({frozenset([v]) for v in range(n)}, 2, f, colors):
            return True
    return False


def _extend(level: set, i: int, f: tuple, colors: tuple) -> bool:
    if i >= len(f):
        return True
    verts = sorted(set().union(*level)) if level else []
    cands = []
    for S in itertools.combinations(verts, i):
        if len({colors[v] for v in S}) == i and all(frozenset(S[:j] + S[j + 1:]) in level for j in range(i)):
            cands.append(frozenset(S))
    for choice in itertools.combinations(cands, f[i]):
        if _extend(set(choice), i + 1, f, colors):
            return True
    return False


# goodness certificates --------------------------------------------------------

D_GOOD = "d-good"
D1_GOOD = "(d+1)-good"
MODES = (D_GOOD, D1_GOOD)


@dataclass(frozen=True)
class GoodnessCertificate:
    """Parts claimed to sum to g, where the vector under test is (0, g)."""

    target: tuple[int, ...]
    mode: str
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        object.__setattr__(self, "target", tuple(self.target))
        object.__setattr__(self, "parts", tuple(tuple(int(x) for x in p) for p in self.parts))
        for p in self.parts:
            if any(x < 0 for x in p):
                raise ValueError(f"part {p} has a negative entry")

    @property
    def d(self) -> int:
        return len(self.target) - 1

    def total(self) -> tuple[int, ...]:
        """g as the sum of the parts (part entry i goes to g_{i+1})."""
        L = max((len(p) for p in self.parts), default=0)
        return tuple(sum(p[i] for p in self.parts if i < len(p)) for i in range(L))

    def to_json(self) -> dict:
        return {"target": list(self.target), "mode": self.mode, "parts": [list(p) for p in self.parts]}


def _strip_g(vec: Sequence[int]) -> tuple[int, ...]:
    vec = tuple(vec)
    if not vec or vec[0] != 0:
        raise ValueError(f"the vector under test must have the form (0, g), got {vec}")
    g = vec[1:]
    while g and g[-1] == 0:
        g = g[:-1]
    return g


def _max_len(mode: str, d: int) -> int:
    return d if mode == D_GOOD else d + 1


def certificate_problems(vec: Sequence[int], cert: GoodnessCertificate, require_full_length: bool = True) -> list[str]:
    """Every way in which ``cert`` fails to show that vec = (0, g) is good; empty when it verifies."""
    f, d, mode = cert.target, cert.d, cert.mode
    out = []
    if not cert.parts:
        return ["no parts"]
    g = _strip_g(vec)
    L = _max_len(mode, d)
    if mode == D_GOOD and d < 1:
        out.append("d-good needs d >= 1")
    if len(g) > L:
        out.append(f"g has length {len(g)} > {L}")
    total = cert.total()
    while total and total[-1] == 0:
        total = total[:-1]
    if total != g:
        out.append(f"parts sum to {total}, not {g}")
    colors = d - 1 if mode == D_GOOD else d
    for p in cert.parts:
        if len(p) > L or (p and p[0] != 1):
            out.append(f"part {p} is not a vector (1, ...) of length <= {L}")
            continue
        if not is_k_ffk(p, colors):
            out.append(f"part {p} is not {colors}-FFK")
        if mode == D_GOOD:
            if any(f[i] < (i + 1) * p[i] for i in range(len(p)) if i < len(f)) or len(p) > len(f):
                out.append(f"part {p} violates f_i >= (i+1) p_i")
        elif not dominates(f, p):
            out.append(f"part {p} is not dominated by {f}")
    if require_full_length and len(g) < L:
        out.append(f"g_{L} = 0 (every part is shorter)")
    return out


def verify_good_certificate(vec: Sequence[int], cert: GoodnessCertificate, require_full_length: bool = True) -> bool:
    return not certificate_problems(vec, cert, require_full_length)


@dataclass
class SearchResult:
    certificate: GoodnessCertificate | None
    reason: str
    evaluations: int = 0

    def __bool__(self):
        return self.certificate is not None


def _balanced_split(g: tuple[int, ...], parts: int) -> list[tuple[int, ...]]:
    cols = [_balanced_sizes(x, parts) for x in g[1:]]
    return [tuple([1] + [c[j] for c in cols]) for j in range(parts)]


def search_good_certificate(
    f: Sequence[int], vec: Sequence[int], mode: str, budget: int = 20000, require_full_length: bool = True
) -> SearchResult:
    """Look for a certificate that vec = (0, g) is ``mode``-good for f.

    Every part starts with 1, so there are exactly g_1 parts.  The balanced
    split is tried first, then a bounded backtracking search over parts in
    colex order.  ``None`` results say whether the budget ran out.
    """
    f = _validate_f(f)
    g = _strip_g(vec)
    if not g:
        return SearchResult(None, "g is zero: an empty sum is not a certificate")
    d = len(f) - 1
    L = _max_len(mode, d)
    if len(g) > L:
        return SearchResult(None, f"g has length {len(g)} > {L}")
    if require_full_length and len(g) < L:
        return SearchResult(None, f"g_{L} = 0, so every part would be shorter")
    nparts = g[0]
    if nparts == 0:
        return SearchResult(None, "g_1 = 0 but every part contributes 1 to g_1")

    def make(parts):
        return GoodnessCertificate(f, mode, tuple(sorted(parts, reverse=True)))

    evals = 1
    cert = make(_balanced_split(g, nparts))
    if verify_good_certificate(vec, cert, require_full_length):
        return SearchResult(cert, "balanced split", evals)

    colors = d - 1 if mode == D_GOOD else d

    def caps(i):
        return f[i] // (i + 1) if mode == D_GOOD else f[i]

    width = len(g)
    candidates = [
        p for p in itertools.product(*[range(min(caps(i), g[i]) + 1) for i in range(1, width)])
    ]
    candidates = [(1,) + p for p in candidates if is_k_ffk((1,) + p, colors)]
    candidates.sort(key=lambda p: tuple(reversed(p)), reverse=True)

    state = {"evals": evals, "out": None}

    def rec(start: int, remaining: list[int], left: int, chosen: list) -> bool:
        state["evals"] += 1
        if state["evals"] > budget:
            raise _Budget
        if left == 0:
            if any(remaining):
                return False
            state["out"] = list(chosen)
            return True
        for idx in range(start, len(candidates)):
            p = candidates[idx]
            if any(p[i] > remaining[i - 1] for i in range(1, width)):
                continue
            # the remaining parts can add at most (left-1) * max candidate entry
            nxt = [remaining[i - 1] - p[i] for i in range(1, width)]
            if any(r > (left - 1) * max(c[i + 1] for c in candidates) for i, r in enumerate(nxt)):
                continue
            chosen.append(p)
            if rec(idx, nxt, left - 1, chosen):
                return True
            chosen.pop()
        return False

    try:
        found = rec(0, list(g[1:]), nparts, [])
    except _Budget:
        return SearchResult(None, f"budget of {budget} evaluations exhausted", budget)
    if found:
        cert = make(state["out"])
        assert verify_good_certificate(vec, cert, require_full_length)
        return SearchResult(cert, "backtracking", state["evals"])
    return SearchResult(None, "search space exhausted: no certificate exists", state["evals"])


class _Budget(Exception):
    pass


def combine_certificates(a: GoodnessCertificate, b: GoodnessCertificate) -> GoodnessCertificate:
    """A d-good certificate plus a (d+1)-good one for the same f, read as (d+1)-good."""
    if a.target != b.target:
        raise ValueError("certificates for different targets")
    if {a.mode, b.mode} != {D_GOOD, D1_GOOD}:
        raise ValueError("need one d-good and one (d+1)-good certificate")
    return GoodnessCertificate(a.target, D1_GOOD, a.parts + b.parts)


def verify_good_combination(f, vec_d, cert_d, vec_d1, cert_d1) -> bool:
    """If both certificates verify, the combined one verifies for (0, g+g')."""
    if not (verify_good_certificate(vec_d, cert_d) and verify_good_certificate(vec_d1, cert_d1)):
        return True
    L = max(len(vec_d), len(vec_d1))
    a = list(vec_d) + [0] * (L - len(vec_d))
    b = list(vec_d1) + [0] * (L - len(vec_d1))
    return verify_good_certificate([x + y for x, y in zip(a, b)], combine_certificates(cert_d, cert_d1))


# decorated permutations ----------------------------------------------------------

STYLES = (0, 1, 2, 3)


class DecStructureError(AssertionError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class DecoratedPermutation:
    base: tuple[int, ...]
    bars: tuple[tuple[int, int], ...]  # (left peak position, style), sorted by position

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "bars", tuple(sorted((int(p), int(s)) for p, s in dict(self.bars).items())))
        peaks = left_peak_positions(self.base)
        if [p for p, _ in self.bars] != peaks:
            raise ValueError(f"bars {self.bars} are not at the left peaks {peaks} of {self.base}")
        if any(s not in STYLES for _, s in self.bars):
            raise ValueError("bar styles are 0..3")

    @property
    def dim(self) -> int:
        return len(self.bars) - 1

    def blocks(self) -> list[tuple[int, ...]]:
        cuts = [0] + [p for p, _ in self.bars] + [len(self.base)]
        return [self.base[a:b] for a, b in zip(cuts, cuts[1:])]

    def styles(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.bars)

    def color_set(self) -> frozenset[int]:
        return frozenset((p + 1) // 2 for p, _ in self.bars)

    def remove_bar(self, i: int) -> "DecoratedPermutation":
        """Drop the i-th bar and reorder the two blocks it separated."""
        blocks = self.blocks()
        left, right = blocks[i], blocks[i + 1]
        if i == 0:
            keep = ()
        else:
            v = 0
            while v + 1 < len(left) and left[v] > left[v + 1]:
                v += 1
            keep = left[:v]
        merged = keep + tuple(sorted(set(left[len(keep):]) | set(right)))
        base = tuple(itertools.chain(*blocks[:i], merged, *blocks[i + 2:]))
        styles = self.styles()[:i] + self.styles()[i + 1:]
        peaks = left_peak_positions(base)
        if len(peaks) != len(styles):
            raise DecStructureError("bar removal changed the peak structure", {"face": str(self), "bar": i,
                                                                              "result": base})
        return DecoratedPermutation(base, tuple(zip(peaks, styles)))

    def vertex_set(self, order: str = "left") -> frozenset["DecoratedPermutation"]:
        """One-bar elements left after removing every other bar, in the given removal order."""
        out = set()
        m = len(self.bars)
        for keep in range(m):
            cur = self
            others = [j for j in range(m) if j != keep]
            if order == "left":
                for removed, j in enumerate(others):
                    cur = cur.remove_bar(j - removed)
            else:
                for j in reversed(others):
                    cur = cur.remove_bar(j)
            out.add(cur)
        return frozenset(out)

    def __str__(self):
        parts = []
        for idx, b in enumerate(self.blocks()):
            parts.append("".join(map(str, b)))
            if idx < len(self.bars):
                s = self.bars[idx][1]
                parts.append("|" if s == 0 else f"|^{s}")
        return "".join(parts)

    @property
    def sort_key(self):
        return (len(self.bars), self.base, self.styles())


def decorated_permutations(n: int) -> Iterator[DecoratedPermutation]:
    for perm in itertools.permutations(range(1, n + 1)):
        peaks = left_peak_positions(perm)
        for styles in itertools.product(STYLES, repeat=len(peaks)):
            yield DecoratedPermutation(perm, tuple(zip(peaks, styles)))


def vertex_color(v: DecoratedPermutation) -> int:
    (c,) = v.color_set()
    return c


@dataclass
class DecComplex:
    n: int
    complex: SimplicialComplex
    coloring: dict
    face_of: dict = field(repr=False)


@lru_cache(maxsize=8)
def dec_complex(n: int, validate: bool = True) -> DecComplex:
    """Γ(Dec_n): faces are identified with their vertex sets of one-bar elements."""
    if not 1 <= n <= 7:
        raise ValueError("dec_complex supports 1 <= n <= 7")
    face_of = {}
    memo: dict = {}

    def fast_vertex_set(D):
        # removing the first or the last bar leaves faces whose vertex sets together cover D's
        got = memo.get(D)
        if got is None:
            m = len(D.bars)
            if m <= 1:
                got = frozenset([D]) if m else frozenset()
            else:
                got = fast_vertex_set(D.remove_bar(0)) | fast_vertex_set(D.remove_bar(m - 1))
            memo[D] = got
        return got

    for D in decorated_permutations(n):
        vs = D.vertex_set("left") if validate else fast_vertex_set(D)
        if len(vs) != len(D.bars):
            raise DecStructureError("face with repeated vertices", {"face": str(D)})
        if validate and D.vertex_set("right") != vs:
            raise DecStructureError("bar removal depends on the order", {"face": str(D)})
        if vs in face_of:
            raise DecStructureError("two faces share a vertex set", {"faces": [str(face_of[vs]), str(D)]})
        face_of[vs] = D
    if validate:
        for vs, D in face_of.items():
            for i in range(len(D.bars)):
                child = D.remove_bar(i).vertex_set()
                if child not in face_of or not child < vs or len(vs - child) != 1:
                    raise DecStructureError("bar removal is not a facet of the vertex set",
                                            {"face": str(D), "bar": i})
    vertices = sorted({v for vs in face_of for v in vs}, key=lambda v: v.sort_key)
    cx = SimplicialComplex.from_faces(face_of.keys(), vertices=vertices)
    coloring = {v: vertex_color(v) for v in vertices}
    return DecComplex(n, cx, coloring, face_of)


# reports -------------------------------------------------------------------------


def dec_report(max_n: int = 7, balanced_max_n: int = 6) -> list[Record]:
    recs = []
    for n in range(1, max_n + 1):
        dc = dec_complex(n, validate=n <= balanced_max_n)
        f = dc.complex.f_vector() if dc.complex.dim >= 0 else (1,)
        want = gamma_B(n).entries
        recs.append(check("dec", "f(Γ(Dec_n)) = γ(B_n)", "Coxeter complex of type B", {"n": n},
                          tuple(f) == tuple(want), {"n": n, "f": f, "gamma": want}))
        if n <= balanced_max_n:
            ok = dc.complex.is_balanced_coloring(dc.coloring) and dc.complex.dim == n // 2 - 1
            recs.append(check("dec", "Γ(Dec_n) is balanced under col", "Coxeter complex of type B", {"n": n},
                              ok, {"n": n, "dim": dc.complex.dim}))
    return recs


def verify_gamma_ineq(n: int) -> list[Record]:
    check_bound(n, 8)
    lo, hi = gamma_B(n - 1).entries if n > 1 else (1,), gamma_B(n).entries
    recs = []
    for i in range(1, n // 2 + 1):
        a = lo[i] if i < len(lo) else 0
        b = hi[i] if i < len(hi) else 0
        recs.append(check("ineq", "(i+1) γ_i(B_{n-1}) <= γ_i(B_n)", "gamma inequality", {"n": n, "i": i},
                          (i + 1) * a <= b, {"n": n, "i": i, "lhs": (i + 1) * a, "rhs": b}))
    return recs


def verify_int_ffk(h, name: str = "", realize_limit: int = 5000) -> Record:
    hin = SymmetricHInput.coerce(h)
    g = gamma_int(hin).entries
    k = len(g) - 1
    if any(x < 0 for x in g):
        dec = FFKDecision(False, "negative γ entry", tuple(g), k)
    else:
        dec = ffk_decision(g, k)
    witness = {"h": list(hin.h), "gamma": list(g), "k": k, "reason": dec.reason}
    if dec.ok and sum(g) <= realize_limit:
        cx, col = realize_ffk(g, k, realize_limit)
        witness["complex"] = cx.to_json()
    params = {"h": list(hin.h)} | ({"complex": name} if name else {})
    ok = dec.ok and all(x >= 0 for x in g)
    return check("int-ffk", "γ(Int Δ) is the f-vector of a balanced complex", "FFK property of γ(Int Δ)", params, ok,
                 None if ok else witness, note=dec.reason)


def goodness_instances(n: int) -> list[tuple[str, int, str, str]]:
    """(item, j, family, mode) for each claim at size n."""
    if n < 2:
        return []
    out = []
    if n % 2:
        for j in range(2, (n + 1) // 2 + 1):
            out.append(("a", j, "symmetric", D_GOOD))
        for j in range(1, (n + 1) // 2 + 1):
            out.append(("b", -j, "symmetric", D_GOOD))
        for j in range(1, (n + 1) // 2):
            out.append(("c", j, "tilde", D_GOOD))
            out.append(("d", -j, "tilde", D1_GOOD))
    else:
        for j in range(2, n // 2 + 1):
            out.append(("a", j, "symmetric", D_GOOD))
        for j in range(1, n // 2 + 1):
            out.append(("b", -j, "symmetric", D1_GOOD))
            out.append(("c", j, "tilde", D1_GOOD))
            out.append(("d", -j, "tilde", D1_GOOD))
    return out


def verify_goodness(n: int, budget: int = 20000) -> list[Record]:
    f = gamma_nj(n, 1).entries
    recs = []
    for item, j, family, mode in goodness_instances(n):
        vec = gamma_nj(n, j, family).entries
        res = search_good_certificate(f, vec, mode, budget=budget)
        params = {"n": n, "item": item, "j": j, "family": family, "mode": mode}
        name = f"γ{'~' if family == 'tilde' else ''}^(n,j) is {mode} for γ^(n,1)"
        if res.certificate is not None:
            recs.append(check("goodness", name, "good decompositions", params, True))
        elif "budget" in res.reason:
            recs.append(Record("goodness", name, "good decompositions", params, INFO,
                               {"vector": list(vec), "f": list(f)}, note="inconclusive: " + res.reason))
        else:
            recs.append(check("goodness", name, "good decompositions", params, False,
                              {"vector": list(vec), "f": list(f), "reason": res.reason}))
    return recs


__all__ = [
    "D_GOOD", "D1_GOOD", "MODES", "dominates", "is_k_ffk", "ffk_decision", "realize_ffk", "brute_force_k_colorable", "colex_colorful",
    "GoodnessCertificate", "verify_good_certificate", "certificate_problems", "search_good_certificate",
    "combine_certificates", "verify_good_combination", "DecoratedPermutation", "dec_complex",
    "decorated_permutations", "dec_report", "verify_gamma_ineq", "verify_int_ffk", "verify_goodness",
]
