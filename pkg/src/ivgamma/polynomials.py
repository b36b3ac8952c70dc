"""Exact integer polynomials and gamma vectors.

Coefficients are Python ints (arbitrary precision); nothing in this
package ever touches floating point.  A polynomial is stored lowest
degree first, so ``IntPolynomial([1, 6, 1])`` is ``1 + 6t + t^2``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


class SymmetryError(ValueError):
    """Raised when a polynomial is not palindromic about the requested degree."""

    def __init__(self, poly: "IntPolynomial", ref_degree: int, pair: tuple[int, int]):
        self.poly = poly
        self.ref_degree = ref_degree
        self.pair = pair
        i, j = pair
        super().__init__(
            f"{poly} is not symmetric at reference degree {ref_degree}: "
            f"coeff[{i}]={poly[i]} != coeff[{j}]={poly[j]}"
        )


class InvalidReferenceDegree(ValueError):
    pass


class IntPolynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = (0,)):
        c = [int(x) for x in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        self._c = tuple(c)

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "IntPolynomial":
        return cls([0] * k + [a])

    @classmethod
    def one_plus_t_pow(cls, e: int) -> "IntPolynomial":
        return cls(comb(e, i) for i in range(e + 1))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return -1 if self.is_zero() else len(self._c) - 1

    def is_zero(self) -> bool:
        return self._c == (0,)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self._c):
            return self._c[k]
        return 0

    def __iter__(self):
        return iter(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == (other,)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __add__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        n = max(len(self._c), len(other._c))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-x for x in self._c)

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "IntPolynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(other * x for x in self._c)
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self._c)

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def reversed_at(self, D: int) -> "IntPolynomial":
        """t^D p(1/t); requires D >= deg p."""
        if D < self.degree:
            raise InvalidReferenceDegree(f"reference degree {D} < degree {self.degree}")
        return IntPolynomial(self[D - k] for k in range(D + 1))

    def to_json(self) -> list[str]:
        return [str(x) for x in self._c]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> "IntPolynomial":
        return cls(int(x) for x in data)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._c)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, a in enumerate(self._c):
            if a == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and a == 1:
                s = mono
            elif mono and a == -1:
                s = "-" + mono
            else:
                s = f"{a}{mono}"
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def poly_ring(a: IntPolynomial, b: IntPolynomial | int | None, op: str) -> IntPolynomial:
    """Dispatch form of the ring operations, used by the CLI and tests.

    ``op`` is one of ``add``, ``sub``, ``mul``, ``shift`` (b is the shift
    amount) or ``scalar`` (b is an int).
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "shift":
        return a.shift(int(b))
    if op == "scalar":
        return a * int(b)
    raise ValueError(f"unknown ring operation {op!r}")


def symmetry_violation(p: IntPolynomial, D: int) -> tuple[int, int] | None:
    if D < p.degree:
        raise InvalidReferenceDegree(f"reference degree {D} < degree {p.degree} of {p}")
    for k in range(D // 2 + 1):
        if p[k] != p[D - k]:
            return (k, D - k)
    return None


def is_symmetric(p: IntPolynomial, D: int) -> bool:
    return symmetry_violation(p, D) is None


def is_unimodal_nonneg(p: IntPolynomial) -> bool:
    c = p.coeffs
    if any(x < 0 for x in c):
        return False
    k = 0
    while k + 1 < len(c) and c[k] <= c[k + 1]:
        k += 1
    while k + 1 < len(c) and c[k] >= c[k + 1]:
        k += 1
    return k == len(c) - 1


@dataclass(frozen=True)
class GammaVector:
    """Coordinates of a palindromic polynomial in the basis t^k (1+t)^(D-2k).

    ``entries`` always has length ``ref_degree // 2 + 1``.  Vectors with
    different reference degrees cannot be added; use :meth:`shift` (multiply
    the polynomial by t) or :meth:`lift` (multiply by 1+t) first.
    """

    entries: tuple[int, ...]
    ref_degree: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.ref_degree < 0:
            raise InvalidReferenceDegree("reference degree must be >= 0")
        if len(self.entries) != self.ref_degree // 2 + 1:
            raise ValueError(
                f"gamma vector of reference degree {self.ref_degree} needs "
                f"{self.ref_degree // 2 + 1} entries, got {len(self.entries)}"
            )

    @classmethod
    def zero(cls, D: int) -> "GammaVector":
        return cls((0,) * (D // 2 + 1), D)

    def __add__(self, other: "GammaVector") -> "GammaVector":
        if not isinstance(other, GammaVector):
            return NotImplemented
        if other.ref_degree != self.ref_degree:
            raise ValueError(
                f"cannot add gamma vectors with reference degrees "
                f"{self.ref_degree} and {other.ref_degree}"
            )
        return GammaVector(tuple(a + b for a, b in zip(self.entries, other.entries)), self.ref_degree)

    def __mul__(self, k: int) -> "GammaVector":
        if not isinstance(k, int):
            return NotImplemented
        return GammaVector(tuple(k * a for a in self.entries), self.ref_degree)

    __rmul__ = __mul__

    def shift(self) -> "GammaVector":
        """Gamma vector of t*p: a zero is prepended and D grows by 2."""
        return GammaVector((0,) + self.entries, self.ref_degree + 2)

    def lift(self) -> "GammaVector":
        """Gamma vector of (1+t)*p at D+1; entries are unchanged (zero padded)."""
        D = self.ref_degree + 1
        return GammaVector(self.entries + (0,) * (D // 2 + 1 - len(self.entries)), D)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.entries)

    def to_json(self) -> dict:
        return {"ref_degree": self.ref_degree, "entries": [str(x) for x in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "GammaVector":
        return cls(tuple(int(x) for x in data["entries"]), int(data["ref_degree"]))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.entries) + ")"


def gamma_basis(k: int, D: int) -> IntPolynomial:
    return IntPolynomial.one_plus_t_pow(D - 2 * k).shift(k)


def gamma_expand(p: IntPolynomial, D: int) -> GammaVector:
    """Write a D-palindromic p as sum of gamma_k t^k (1+t)^(D-2k).

    Entries are peeled off from the low-degree end; integrality is
    automatic because each basis element is monic in its lowest term, and
    the remainder is checked to vanish.
    """
    bad = symmetry_violation(p, D)
    if bad is not None:
        raise SymmetryError(p, D, bad)
    rest = p
    entries = []
    for k in range(D // 2 + 1):
        g = rest[k]
        entries.append(g)
        if g:
            rest = rest - g * gamma_basis(k, D)
    if not rest.is_zero():
        raise ArithmeticError(f"gamma expansion of {p} at degree {D} left remainder {rest}")
    return GammaVector(tuple(entries), D)


def gamma_contract(g: GammaVector) -> IntPolynomial:
    acc = IntPolynomial()
    for k, a in enumerate(g.entries):
        if a:
            acc = acc + a * gamma_basis(k, g.ref_degree)
    return acc


def dumps(obj) -> str:
    """Stable JSON for polynomials, gamma vectors and plain containers."""

    def enc(o):
        if isinstance(o, (IntPolynomial, GammaVector)):
            return o.to_json()
        raise TypeError(type(o).__name__)

    return json.dumps(obj, default=enc, sort_keys=True)
