"""h- and γ-vectors of Int(Δ) computed from the h-vector of Δ alone."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .eulerian import gamma_nj, symmetric_poly
from .interval import h_of_int, interval_subdivision
from .polynomials import GammaVector, IntPolynomial, gamma_expand, symmetry_violation
from .simplicial import SimplicialComplex


class NegativeHWarning(UserWarning):
    pass


@dataclass(frozen=True)
class SymmetricHInput:
    h: tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(x) for x in self.h)
        object.__setattr__(self, "h", h)
        if not h or h[0] != 1:
            raise ValueError(f"h must start with h_0 = 1, got {h}")
        bad = symmetry_violation(IntPolynomial(h), len(h) - 1)
        if bad is not None:
            raise ValueError(f"h = {h} is not symmetric: h_{bad[0]} != h_{bad[1]}")
        if any(x < 0 for x in h):
            warnings.warn(f"h = {h} has negative entries; the decomposition still applies", NegativeHWarning,
                          stacklevel=3)

    @classmethod
    def coerce(cls, h) -> "SymmetricHInput":
        return h if isinstance(h, cls) else cls(tuple(h))

    @property
    def n(self) -> int:
        return len(self.h) - 1


def h_int_from_h(h: SymmetricHInput | Sequence[int]) -> IntPolynomial:
    """h(Int Δ) = Σ_{j ≤ n/2} h_j 𝔹+_{n+1,j+1}(t), cross-checked against the matrix transform."""
    h = SymmetricHInput.coerce(h)
    n = h.n
    out = IntPolynomial()
    for j in range(n // 2 + 1):
        out = out + h.h[j] * symmetric_poly(n + 1, j + 1)[0]
    via_matrix = h_of_int(h.h)
    if out != via_matrix:
        raise AssertionError(f"decomposition {out} disagrees with the matrix transform {via_matrix}")
    return out


def gamma_int(h: SymmetricHInput | Sequence[int]) -> GammaVector:
    h = SymmetricHInput.coerce(h)
    n = h.n
    g = gamma_expand(h_int_from_h(h), n)
    summed = GammaVector.zero(n)
    for j in range(n // 2 + 1):
        summed = summed + h.h[j] * gamma_nj(n + 1, j + 1)
    if summed != g:
        raise AssertionError(f"Σ h_j γ^(n+1,j+1) = {summed.entries} but direct expansion gives {g.entries}")
    return g


def gamma_int_geometric(cx: SimplicialComplex) -> GammaVector:
    """Build Int(Δ), read off its γ-vector and compare with :func:`gamma_int`."""
    h = cx.h_polynomial()
    d = cx.dim + 1
    hv = SymmetricHInput(tuple(h[i] for i in range(d + 1)))
    if d == 0:
        built = GammaVector((1,), 0)
    else:
        built = interval_subdivision(cx).complex.gamma()
    formula = gamma_int(hv)
    if built != formula:
        raise AssertionError(f"constructed γ {built.entries} differs from formula {formula.entries}")
    return built
