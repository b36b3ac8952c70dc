"""The hyperoctahedral group B_n and its descent/slide/excedance statistics.

Two enumeration paths exist on purpose.  :func:`enumerate_class` walks
elements one at a time as :class:`SignedPermutation` objects and is the
readable reference.  :func:`stat_tables` builds the full count tables with
numpy, one first-letter block at a time; blocks are independent, so they
can be farmed out to worker processes and summed.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .polynomials import IntPolynomial

DEFAULT_MAX_N = 8
HARD_MAX_N = 9
# raised to HARD_MAX_N by the CLI's --allow-n9 flag
LIMITS = {"max_n": DEFAULT_MAX_N}


class ResourceGuardError(RuntimeError):
    """Raised when a request exceeds the configured enumeration bound."""


def check_bound(n: int, max_n: int | None = None, what: str = "B_n enumeration") -> None:
    if max_n is None:
        max_n = LIMITS["max_n"]
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n > max_n:
        raise ResourceGuardError(
            f"{what} with n={n} exceeds the bound {max_n}"
            + (f"; raise the bound to {HARD_MAX_N} (CLI: --allow-n9) to opt in" if n <= HARD_MAX_N else "")
        )


@dataclass(frozen=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", w)
        if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a signed permutation")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i == 0 or abs(i) > self.n:
            raise IndexError(i)
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __iter__(self):
        return iter(self.window)

    def __len__(self):
        return self.n

    def __str__(self):
        return " ".join(str(x) for x in self.window)


# single-element statistics ---------------------------------------------


def des_B(sigma: Sequence[int]) -> tuple[int, frozenset[int]]:
    """Descent number and set, with sigma_0 = 0 prepended."""
    w = (0,) + tuple(sigma)
    s = frozenset(i for i in range(len(w) - 1) if w[i] > w[i + 1])
    return len(s), s


def padded_word(sigma: Sequence[int]) -> tuple[int, ...]:
    """0 sigma_1 ... sigma_n followed by the sentinel -(n+1), standing in for -infinity."""
    n = len(sigma)
    return (0,) + tuple(sigma) + (-(n + 1),)


def slides(sigma: Sequence[int]) -> tuple[int, list[tuple[int, ...]]]:
    """Maximal decreasing runs of length >= 2 in the padded word.

    The sentinel appears in the last segment as ``-(n+1)``.
    """
    w = padded_word(sigma)
    segs, cur = [], [w[0]]
    for a, b in zip(w, w[1:]):
        if a < b:
            segs.append(cur)
            cur = [b]
        else:
            cur.append(b)
    segs.append(cur)
    out = [tuple(s) for s in segs if len(s) >= 2]
    return len(out), out


def lpk(pi: Sequence[int]) -> int:
    """Left peaks of an ordinary permutation, with pi_0 = 0."""
    w = (0,) + tuple(pi)
    return sum(1 for i in range(1, len(pi)) if w[i - 1] < w[i] > w[i + 1])


def left_peak_positions(pi: Sequence[int]) -> list[int]:
    w = (0,) + tuple(pi)
    return [i for i in range(1, len(pi)) if w[i - 1] < w[i] > w[i + 1]]


# enumeration ------------------------------------------------------------

CLASSES = ("B", "B+", "B-", "B++", "B-+")


def _in_class(w: tuple[int, ...], cls: str) -> bool:
    if cls == "B":
        return True
    if cls == "B+":
        return w[-1] > 0
    if cls == "B-":
        return w[-1] < 0
    if cls == "B++":
        return w[-1] > 0 and w[0] > 0
    if cls == "B-+":
        return w[-1] > 0 and w[0] < 0
    raise ValueError(f"unknown class {cls!r}; choose from {CLASSES}")


def enumerate_class(
    n: int, cls: str = "B", first: int | None = None, max_n: int | None = None
) -> Iterator[SignedPermutation]:
    """Stream the members of a class in (sign pattern, permutation) lex order.

    Sign patterns run from all-plus to all-minus, position 1 varying
    slowest.  ``first`` restricts to sigma_1 = first.
    """
    check_bound(n, max_n)
    if first is not None and not 1 <= abs(first) <= n:
        raise IndexError(f"first letter {first} out of range for n={n}")
    _in_class((1,), cls)  # validate the class name up front
    for signs in itertools.product((1, -1), repeat=n):
        if first is not None and (signs[0] > 0) != (first > 0):
            continue
        for perm in itertools.permutations(range(1, n + 1)):
            w = tuple(s * p for s, p in zip(signs, perm))
            if first is not None and w[0] != first:
                continue
            if _in_class(w, cls):
                yield SignedPermutation(w)


# tables -----------------------------------------------------------------


@dataclass
class StatTable:
    """Exact counts over named axes; tables from disjoint ranges merge by addition."""

    axes: tuple[str, ...]
    labels: tuple[tuple[int, ...], ...]
    counts: np.ndarray

    def __add__(self, other: "StatTable") -> "StatTable":
        if self.axes != other.axes or self.labels != other.labels:
            raise ValueError("cannot merge tables with different axes")
        return StatTable(self.axes, self.labels, self.counts + other.counts)

    def __eq__(self, other):
        return (
            isinstance(other, StatTable)
            and self.axes == other.axes
            and self.labels == other.labels
            and np.array_equal(self.counts, other.counts)
        )

    def total(self) -> int:
        return int(self.counts.sum())

    def to_json(self) -> dict:
        return {
            "axes": list(self.axes),
            "labels": [list(x) for x in self.labels],
            "counts": _int_lists(self.counts),
        }

    def to_csv(self) -> str:
        """Long format: one row per cell, axis labels then the count."""
        rows = [",".join(self.axes + ("count",))]
        for idx in np.ndindex(*self.counts.shape):
            keys = [str(self.labels[a][i]) for a, i in enumerate(idx)]
            rows.append(",".join(keys + [str(int(self.counts[idx]))]))
        return "\n".join(rows) + "\n"


def _int_lists(a: np.ndarray):
    if a.ndim == 1:
        return [int(x) for x in a]
    return [_int_lists(x) for x in a]


@dataclass
class StatBundle:
    """All counts for one n.

    ``full[j, last, k, s]`` counts sigma in B_n with sigma_1 = first_letters[j],
    sign of sigma_n given by ``last`` (0 positive, 1 negative), k descents and
    s+1 slides.  Every other table is a marginal of this one.
    """

    n: int
    full: StatTable

    @property
    def first_letters(self) -> tuple[int, ...]:
        return self.full.labels[0]

    def _j(self, j: int) -> int:
        return self.first_letters.index(j)

    def b_plus(self, j: int) -> list[int]:
        """B^+(n, j, k) for k = 0..n-1 (k = n cannot occur with sigma_n > 0)."""
        row = self.full.counts[self._j(j), 0].sum(axis=1)
        return [int(x) for x in row[: self.n]]

    def class_descents(self, cls: str) -> list[int]:
        c = self.full.counts
        pos = [i for i, j in enumerate(self.first_letters) if j > 0]
        neg = [i for i, j in enumerate(self.first_letters) if j < 0]
        if cls == "B":
            sub = c.sum(axis=(0, 1))
        elif cls == "B+":
            sub = c[:, 0].sum(axis=0)
        elif cls == "B-":
            sub = c[:, 1].sum(axis=0)
        elif cls == "B++":
            sub = c[pos, 0].sum(axis=0)
        elif cls == "B-+":
            sub = c[neg, 0].sum(axis=0)
        else:
            raise ValueError(cls)
        return [int(x) for x in sub.sum(axis=1)]

    def w_table(self, cls: str) -> list[list[int]]:
        """|W_B(n, k, s) ∩ cls| indexed [k][s] for cls in {B++, B-+}."""
        c = self.full.counts
        if cls == "B++":
            idx = [i for i, j in enumerate(self.first_letters) if j > 0]
        elif cls == "B-+":
            idx = [i for i, j in enumerate(self.first_letters) if j < 0]
        else:
            raise ValueError(cls)
        sub = c[idx, 0].sum(axis=0)
        return [[int(x) for x in row] for row in sub]

    def b_slide(self, cls: str) -> list[int]:
        """b(n, s) = |W_B(n, s, s) ∩ cls| for s = 0..n."""
        w = self.w_table(cls)
        return [w[s][s] if s < len(w) and s < len(w[s]) else 0 for s in range(self.n + 1)]

    def table(self, stat: str) -> StatTable:
        """Named marginal tables for the CLI."""
        n = self.n
        c = self.full.counts
        if stat == "bpjk":
            return StatTable(("j", "k"), (self.first_letters, tuple(range(n))), c[:, 0].sum(axis=2)[:, :n].copy())
        if stat in ("bpp", "bmp"):
            cls = "B++" if stat == "bpp" else "B-+"
            return StatTable(("k",), (tuple(range(n + 1)),), np.array(self.class_descents(cls), dtype=np.int64))
        if stat == "slides":
            pos = [i for i, j in enumerate(self.first_letters) if j > 0]
            neg = [i for i, j in enumerate(self.first_letters) if j < 0]
            arr = np.stack([c[pos, 0].sum(axis=0), c[neg, 0].sum(axis=0)])
            return StatTable(("class", "k", "s"), ((1, -1), tuple(range(n + 1)), tuple(range(n + 1))), arr)
        raise ValueError(f"unknown table {stat!r}; choose from bpjk, bpp, bmp, slides")


def first_letters(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1)) + tuple(-j for j in range(1, n + 1))


@lru_cache(maxsize=None)
def _perm_array(m: int) -> np.ndarray:
    if m == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.array(list(itertools.permutations(range(1, m + 1))), dtype=np.int8)


@lru_cache(maxsize=None)
def _sign_array(m: int) -> np.ndarray:
    if m == 0:
        return np.ones((1, 0), dtype=np.int8)
    return np.array(list(itertools.product((1, -1), repeat=m)), dtype=np.int8)


def block_counts(n: int, j: int) -> np.ndarray:
    """Counts for the block sigma_1 = j, shape (2, n+1, n+1) over (last sign, des, slides-1)."""
    rest = np.array([v for v in range(1, n + 1) if v != abs(j)], dtype=np.int8)
    perms = rest[_perm_array(n - 1) - 1] if n > 1 else np.zeros((1, 0), dtype=np.int8)
    signs = _sign_array(n - 1)
    if n > 1:
        body = (perms[:, None, :] * signs[None, :, :]).reshape(-1, n - 1)
    else:
        body = np.zeros((1, 0), dtype=np.int8)
    N = body.shape[0]
    w = np.empty((N, n + 2), dtype=np.int8)
    w[:, 0] = 0
    w[:, 1] = j
    w[:, 2 : n + 1] = body
    w[:, n + 1] = -(n + 1)
    down = w[:, :-1] > w[:, 1:]  # steps 0..n, the last one always into the sentinel
    des = down[:, :n].sum(axis=1)
    runs = down[:, 0].astype(np.int16) + (down[:, 1:] & ~down[:, :-1]).sum(axis=1)
    tight = des == runs - 1
    if tight.any():
        # members of W_B(n, s, s): no slide may be longer than 2
        d = down[tight]
        if (d[:, 1:] & d[:, :-1]).any():
            raise AssertionError(f"W_B(n,s,s) member with a slide longer than 2 (n={n}, j={j})")
    last = (w[:, n] < 0).astype(np.int64)
    idx = (last * (n + 1) + des) * (n + 1) + (runs - 1)
    return np.bincount(idx, minlength=2 * (n + 1) * (n + 1)).reshape(2, n + 1, n + 1)


def _block_task(args):
    return block_counts(*args)


_TABLES: dict[int, StatBundle] = {}


def build_stat_tables(n: int, workers: int = 1) -> StatBundle:
    """Uncached build; ``workers > 1`` splits the work by first letter over processes."""
    letters = first_letters(n)
    jobs = [(n, j) for j in letters]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_block_task, jobs))
    else:
        blocks = [block_counts(*a) for a in jobs]
    counts = np.stack(blocks).astype(np.int64)
    labels = (letters, (0, 1), tuple(range(n + 1)), tuple(range(n + 1)))
    table = StatTable(("first", "last_sign", "des", "slides_minus_1"), labels, counts)
    if table.total() != 2**n * math.factorial(n):
        raise AssertionError("table total does not match |B_n|")
    return StatBundle(n, table)


def stat_tables(n: int, workers: int = 1, max_n: int | None = None) -> StatBundle:
    """All statistics tables for B_n, cached per n (serial and parallel builds agree)."""
    check_bound(n, max_n)
    got = _TABLES.get(n)
    if got is None:
        got = _TABLES[n] = build_stat_tables(n, workers)
    return got


def stat_tables_naive(n: int) -> StatBundle:
    """Same tables via the per-element path; a slow oracle for small n."""
    check_bound(n, 6, "naive enumeration")
    letters = first_letters(n)
    counts = np.zeros((2 * n, 2, n + 1, n + 1), dtype=np.int64)
    for sigma in enumerate_class(n, "B"):
        k, _ = des_B(sigma.window)
        s, _ = slides(sigma.window)
        counts[letters.index(sigma.window[0]), int(sigma.window[-1] < 0), k, s - 1] += 1
    labels = (letters, (0, 1), tuple(range(n + 1)), tuple(range(n + 1)))
    return StatBundle(n, StatTable(("first", "last_sign", "des", "slides_minus_1"), labels, counts))


# type A derangements -----------------------------------------------------


@lru_cache(maxsize=None)
def derangement_poly_A(n: int) -> IntPolynomial:
    """Excedance generating function over fixed-point-free permutations of [n]."""
    if n < 0:
        raise ValueError("n must be >= 0")
    check_bound(max(n, 1), 9, "derangement enumeration")
    acc = [0] * (n + 1)
    for p in itertools.permutations(range(1, n + 1)):
        if all(p[i] != i + 1 for i in range(n)):
            acc[sum(1 for i in range(n) if p[i] > i + 1)] += 1
    return IntPolynomial(acc)


# type B derangements and excedances --------------------------------------


def exc_natural(w: Sequence[int]) -> int:
    return sum(1 for i, x in enumerate(w, 1) if x > i)


def exc_brenti(w: Sequence[int]) -> int:
    """#{i : sigma(|sigma(i)|) > sigma(i)} + #{i : sigma(i) = -i}."""
    sigma = SignedPermutation(tuple(w))
    return sum(1 for x in w if sigma(abs(x)) > x) + sum(1 for i, x in enumerate(w, 1) if x == -i)


def exc_natural_plus_negatives(w: Sequence[int]) -> int:
    return exc_natural(w) + sum(1 for x in w if x < 0)


def exc_natural_plus_negated_fixed(w: Sequence[int]) -> int:
    return exc_natural(w) + sum(1 for i, x in enumerate(w, 1) if x == -i)


def exc_absolute(w: Sequence[int]) -> int:
    return sum(1 for i, x in enumerate(w, 1) if abs(x) > i)


EXCEDANCES = {
    "natural": exc_natural,
    "brenti": exc_brenti,
    "natural+negatives": exc_natural_plus_negatives,
    "natural+negated-fixed": exc_natural_plus_negated_fixed,
    "absolute": exc_absolute,
}


def _star_value_of_min(w):
    m = min(w)
    return SignedPermutation(tuple(w))(m) > 0


def _star_value_at_abs_min(w):
    m = min(w)
    return SignedPermutation(tuple(w))(abs(m)) > 0


def _star_position_of_min(w):
    i = min(range(len(w)), key=lambda k: w[k])
    return w[i] > 0


def _star_last_positive(w):
    return w[-1] > 0


def _star_none(w):
    return True


STAR_RULES = {
    "sigma(min)": _star_value_of_min,
    "sigma(|min|)": _star_value_at_abs_min,
    "min-position": _star_position_of_min,
    "last-positive": _star_last_positive,
    "none": _star_none,
}


@dataclass(frozen=True)
class ExcedanceInterpretation:
    """How to read the excedance formula for the local h-polynomial.

    ``excedance`` names the B-excedance statistic; ``star`` names the test
    deciding membership in B*_d, where m is the smallest letter of the window.
    """

    excedance: str = "brenti"
    star: str = "sigma(|min|)"

    def __post_init__(self):
        if self.excedance not in EXCEDANCES:
            raise ValueError(f"unknown excedance {self.excedance!r}")
        if self.star not in STAR_RULES:
            raise ValueError(f"unknown B* rule {self.star!r}")

    def exc(self, w) -> int:
        return EXCEDANCES[self.excedance](w)

    def in_star(self, w) -> bool:
        return STAR_RULES[self.star](w)

    @classmethod
    def candidates(cls) -> list["ExcedanceInterpretation"]:
        return [cls(e, s) for e in EXCEDANCES for s in STAR_RULES]


CALIBRATED = ExcedanceInterpretation("brenti", "sigma(|min|)")


def is_derangement_B(w: Sequence[int]) -> bool:
    return all(x != i for i, x in enumerate(w, 1))


def derangements_B_star(
    d: int, interpretation: ExcedanceInterpretation = CALIBRATED, max_n: int = 7
) -> Iterator[tuple[SignedPermutation, int]]:
    """Yield (sigma, exc) for derangements of B_d that pass the B* filter."""
    check_bound(d, max_n, "B-derangement enumeration")
    for sigma in enumerate_class(d, "B", max_n=max_n):
        w = sigma.window
        if is_derangement_B(w) and interpretation.in_star(w):
            yield sigma, interpretation.exc(w)
