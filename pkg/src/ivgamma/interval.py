"""The interval subdivision Int(Δ) and its closed-form f- and h-transforms.

Int(Δ) is the order complex of the intervals [A, B] with ∅ ≠ A ⊆ B ∈ Δ,
where [A, B] ≤ [A', B'] iff A' ⊆ A ⊆ B ⊆ B'.  Every cover either drops
one element from A or adds one to B, so maximal chains run from some
[C, C] up to some [{v}, F] with F a facet.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Hashable, Iterable

from .polynomials import IntPolynomial
from .signed_permutations import stat_tables
from .simplicial import SimplicialComplex, _label_key, simplex


def _sorted(face) -> tuple:
    return tuple(sorted(face, key=_label_key))


@dataclass(frozen=True)
class Interval:
    A: frozenset
    B: frozenset

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        if not self.A or not self.A <= self.B:
            raise ValueError(f"[{set(self.A)}, {set(self.B)}] is not an interval")

    @property
    def sort_key(self):
        return (len(self.A), tuple(map(_label_key, _sorted(self.A))), tuple(map(_label_key, _sorted(self.B))))

    def __le__(self, other: "Interval") -> bool:
        return other.A <= self.A and self.B <= other.B

    def __lt__(self, other: "Interval") -> bool:
        return self != other and self <= other

    def lower_covers(self) -> list["Interval"]:
        out = [Interval(self.A | {x}, self.B) for x in self.B - self.A]
        out += [Interval(self.A, self.B - {y}) for y in self.B - self.A]
        return out

    def to_json(self) -> dict:
        return {"A": list(_sorted(self.A)), "B": list(_sorted(self.B))}

    def __repr__(self):
        a = "".join(map(str, _sorted(self.A)))
        b = "".join(map(str, _sorted(self.B)))
        return f"[{a},{b}]"


class SubdivisionComplex:
    """Int(Δ) together with the base complex and the carrier map."""

    def __init__(self, complex: SimplicialComplex, base: SimplicialComplex):
        self.complex = complex
        self.base = base

    @staticmethod
    def carrier(face: Iterable[Interval]) -> frozenset:
        """The largest B in the chain (the union of all B's, as they are nested)."""
        out = frozenset()
        for iv in face:
            out |= iv.B
        return out

    def restriction(self, F: Iterable[Hashable]) -> SimplicialComplex:
        return restriction(self, F)

    def f_vector(self):
        return self.complex.f_vector()

    def h_polynomial(self) -> IntPolynomial:
        return self.complex.h_polynomial()

    def __repr__(self):
        return f"SubdivisionComplex(base={self.base!r}, complex={self.complex!r})"


def _maximal_chains(top: Interval, memo: dict) -> list[tuple[Interval, ...]]:
    got = memo.get(top)
    if got is None:
        covers = top.lower_covers()
        if not covers:
            got = [(top,)]
        else:
            got = [chain + (top,) for c in covers for chain in _maximal_chains(c, memo)]
        memo[top] = got
    return got


def interval_subdivision(base: SimplicialComplex) -> SubdivisionComplex:
    if base.dim < 0:
        raise ValueError("the complex {∅} has no intervals to subdivide")
    memo: dict = {}
    chains = set()
    for F in base.facets():
        for v in F:
            chains.update(frozenset(c) for c in _maximal_chains(Interval({v}, F), memo))
    intervals = sorted(set().union(*chains), key=lambda iv: iv.sort_key)
    index = {iv: i for i, iv in enumerate(intervals)}
    masks = [sum(1 << index[iv] for iv in c) for c in chains]
    # maximal chains of a poset are never nested, so no maximality pass is needed
    cx = SimplicialComplex(intervals, masks, _trusted=True)
    return SubdivisionComplex(cx, base)


def restriction(sub: SubdivisionComplex, F: Iterable[Hashable]) -> SimplicialComplex:
    """Chains whose carrier lies in F; asserted equal to Int(2^F)."""
    F = frozenset(F)
    if not sub.base.contains_face(F):
        raise ValueError(f"{set(F)} is not a face of the base complex")
    if not F:
        return SimplicialComplex.point_empty()
    keep = [iv for iv in sub.complex.vertices if iv.B <= F]
    keep_mask = sub.complex.mask(keep)
    masks = {m & keep_mask for m in sub.complex.facet_masks}
    out = SimplicialComplex(sub.complex.vertices, masks)
    out = SimplicialComplex.from_facets(out.facets())
    expected = interval_subdivision(SimplicialComplex.from_facets([F])).complex
    if out != expected:
        raise AssertionError(f"restriction to {set(F)} differs from Int(2^F)")
    return out


# closed-form transforms ----------------------------------------------------


def f_transform_matrix(d: int) -> list[list[int]]:
    """(d+1)x(d+1) matrix taking f(Δ) to f(Int Δ) for a (d-1)-dimensional Δ."""
    if d < 0:
        raise ValueError("d must be >= 0")
    M = [[0] * (d + 1) for _ in range(d + 1)]
    M[0][0] = 1
    for k in range(1, d + 1):
        for l in range(d + 1):
            M[k][l] = sum(
                (-1) ** j * comb(k - 1, j) * ((2 * k - 2 * j) ** l - (2 * k - 2 * j - 1) ** l)
                for j in range(k)
            )
    return M


@lru_cache(maxsize=None)
def _h_matrix(d: int, shift: int) -> tuple[tuple[int, ...], ...]:
    tables = stat_tables(d + 1)
    n = d + 1
    rows = [[0] * (d + 1) for _ in range(d + 1)]
    for s in range(d + 1):
        first = s + shift
        if not 1 <= first <= n:
            continue
        col = tables.b_plus(first)
        for r in range(d + 1):
            rows[r][s] = col[r] if r < len(col) else 0
    return tuple(tuple(r) for r in rows)


def h_transform_matrix(d: int) -> list[list[int]]:
    """Entry (r, s) = #{σ ∈ B_{d+1} : σ_1 = s+1, σ_{d+1} > 0, des_B σ = r}."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return [list(r) for r in _h_matrix(d, 1)]


def h_transform_matrix_literal(d: int) -> list[list[int]]:
    """The same matrix read with σ_1 = s (column 0 then counts nothing)."""
    return [list(r) for r in _h_matrix(d, 0)]


def apply(M: list[list[int]], v) -> tuple[int, ...]:
    v = list(v) + [0] * (len(M) - len(v))
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def f_of_int(f) -> tuple[int, ...]:
    return apply(f_transform_matrix(len(f) - 1), f)


def h_of_int(h) -> IntPolynomial:
    return IntPolynomial(apply(h_transform_matrix(len(h) - 1), h))


@dataclass
class TransformCheck:
    name: str
    f_constructed: tuple[int, ...]
    f_matrix: tuple[int, ...]
    h_constructed: tuple[int, ...]
    h_matrix: tuple[int, ...]
    h_literal: tuple[int, ...]

    @property
    def f_ok(self) -> bool:
        return self.f_constructed == self.f_matrix

    @property
    def h_ok(self) -> bool:
        return self.h_constructed == self.h_matrix

    def mismatches(self) -> list[str]:
        out = []
        for label, a, b in (("f", self.f_constructed, self.f_matrix), ("h", self.h_constructed, self.h_matrix)):
            for i, (x, y) in enumerate(zip(a, b)):
                if x != y:
                    out.append(f"{label}[{i}]: constructed {x} != matrix {y}")
        return out


def verify_subdivision_transforms(base: SimplicialComplex, name: str = "", max_dim: int = 4) -> TransformCheck:
    if base.dim > max_dim:
        raise ValueError(f"dim {base.dim} exceeds the configured bound {max_dim}")
    sub = interval_subdivision(base)
    f = base.f_vector()
    h = base.h_polynomial()
    d = base.dim + 1
    hv = [h[i] for i in range(d + 1)]
    hc = sub.h_polynomial()
    return TransformCheck(
        name=name or repr(base),
        f_constructed=sub.f_vector(),
        f_matrix=apply(f_transform_matrix(d), f),
        h_constructed=tuple(hc[i] for i in range(d + 1)),
        h_matrix=apply(h_transform_matrix(d), hv),
        h_literal=apply(h_transform_matrix_literal(d), hv),
    )


def int_simplex(n: int) -> SubdivisionComplex:
    return interval_subdivision(simplex(n))
