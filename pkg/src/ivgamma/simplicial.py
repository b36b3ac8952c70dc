"""Finite simplicial complexes.

Vertex labels are interned to indices and faces are stored as int
bitmasks, so subset tests are single ``&`` operations.  Complexes are
immutable after construction.
"""
from __future__ import annotations

import json
from itertools import combinations
from math import comb
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .polynomials import GammaVector, IntPolynomial, gamma_expand


class NotManifoldLikeError(ValueError):
    pass


def _label_key(v):
    key = getattr(v, "sort_key", None)
    if key is not None:
        return (0, key)
    if isinstance(v, int):
        # keep 1 < -1 < 2 < -2 ... for signed labels
        return (0, (abs(v), v < 0))
    return (1, repr(v))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SimplicialComplex:
    """A downward-closed face family given by its facets.

    The complex ``{∅}`` (one empty facet) is valid and has f-vector (1).
    """

    def __init__(self, vertices: Sequence[Hashable], facet_masks: Iterable[int], *, _trusted=False):
        self._vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self._vertices)}
        masks = set(facet_masks)
        if not masks:
            raise ValueError("a simplicial complex needs at least one facet (use [set()] for {∅})")
        if not _trusted:
            masks = _maximal(masks)
        self._facets = tuple(sorted(masks, key=lambda m: (m.bit_count(), m)))
        self._face_cache: frozenset[int] | None = None

    # construction -------------------------------------------------------

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Hashable]]) -> "SimplicialComplex":
        facets = [frozenset(F) for F in facets]
        if not facets:
            raise ValueError("empty facet list")
        labels = set().union(*facets)
        vertices = sorted(labels, key=_label_key)
        index = {v: i for i, v in enumerate(vertices)}
        masks = {sum(1 << index[v] for v in F) for F in facets}
        return cls(vertices, masks)

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[Hashable]], vertices: Sequence[Hashable] | None = None):
        """Build from a complete, downward-closed face list (checked)."""
        faces = {frozenset(F) for F in faces}
        faces.add(frozenset())
        if vertices is None:
            vertices = sorted(set().union(*faces), key=_label_key)
        index = {v: i for i, v in enumerate(vertices)}
        masks = {sum(1 << index[v] for v in F) for F in faces}
        covered = set()
        for m in masks:
            for b in _bits(m):
                sub = m & ~(1 << b)
                if sub not in masks:
                    raise ValueError(f"face list not downward closed at {[vertices[i] for i in _bits(m)]}")
                covered.add(sub)
        return cls(vertices, masks - covered, _trusted=True)

    @classmethod
    def point_empty(cls) -> "SimplicialComplex":
        """The complex {∅}."""
        return cls((), [0], _trusted=True)

    # accessors ----------------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._facets

    def facets(self) -> list[frozenset]:
        return [self.labels(m) for m in self._facets]

    def labels(self, mask: int) -> frozenset:
        return frozenset(self._vertices[i] for i in _bits(mask))

    def mask(self, face: Iterable[Hashable]) -> int:
        return sum(1 << self._index[v] for v in face)

    @property
    def dim(self) -> int:
        return max(m.bit_count() for m in self._facets) - 1

    def is_pure(self) -> bool:
        return len({m.bit_count() for m in self._facets}) == 1

    def face_masks(self) -> frozenset[int]:
        if self._face_cache is None:
            seen = set()
            for F in self._facets:
                if F in seen:
                    continue
                seen.update(_submasks(F))
            self._face_cache = frozenset(seen)
        return self._face_cache

    def faces(self) -> Iterator[frozenset]:
        for m in sorted(self.face_masks(), key=lambda m: (m.bit_count(), m)):
            yield self.labels(m)

    def contains_face(self, face: Iterable[Hashable]) -> bool:
        try:
            m = self.mask(face)
        except KeyError:
            return False
        return any(m & F == m for F in self._facets)

    def subcomplex(self, keep) -> "SimplicialComplex":
        """Subcomplex of the faces for which ``keep(face_labels)`` holds.

        ``keep`` must be monotone decreasing (closed under taking subfaces).
        """
        kept = [m for m in self.face_masks() if keep(self.labels(m))]
        return SimplicialComplex.from_faces([self.labels(m) for m in kept], vertices=None)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.facets()) == set(other.facets())

    def __hash__(self):
        return hash(frozenset(self.facets()))

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, vertices={len(self._vertices)}, facets={len(self._facets)})"

    # invariants ---------------------------------------------------------

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 2)
        for m in self.face_masks():
            counts[m.bit_count()] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic  -f_0 + f_1 - f_2 + ...  (f_0 = 1 for ∅)."""
        return sum((-1) ** (i - 1) * x for i, x in enumerate(self.f_vector()))

    def h_polynomial(self) -> IntPolynomial:
        return h_from_f(self.f_vector())

    def gamma(self) -> GammaVector:
        return gamma_expand(self.h_polynomial(), self.dim + 1)

    def is_balanced_coloring(self, coloring: Mapping[Hashable, Hashable]) -> bool:
        """True iff every facet has pairwise distinct colors and at most dim+1 colors occur."""
        for F in self.facets():
            cols = [coloring[v] for v in F]
            if len(set(cols)) != len(cols):
                return False
        return len({coloring[v] for v in self._vertices}) <= self.dim + 1

    # io -----------------------------------------------------------------

    def to_json(self, label=lambda v: v) -> dict:
        return {
            "vertices": [label(v) for v in self._vertices],
            "facets": [sorted(_bits(m)) for m in self._facets],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SimplicialComplex":
        verts = [v if not isinstance(v, list) else tuple(v) for v in data["vertices"]]
        return cls.from_facets([[verts[i] for i in F] for F in data["facets"]])


def _maximal(masks: set[int]) -> set[int]:
    """Drop masks contained in another mask.

    For each vertex a bitset over candidate indices is kept; a candidate is
    dominated iff the AND over its vertices contains another candidate.
    """
    cand = sorted(masks, key=lambda m: -m.bit_count())
    by_vertex: dict[int, int] = {}
    for i, m in enumerate(cand):
        for v in _bits(m):
            by_vertex[v] = by_vertex.get(v, 0) | (1 << i)
    everyone = (1 << len(cand)) - 1
    out = set()
    for i, m in enumerate(cand):
        acc = everyone
        for v in _bits(m):
            acc &= by_vertex[v]
        if acc & ~(1 << i) == 0:
            out.add(m)
    return out


def complex_from_facets(facets: Iterable[Iterable[Hashable]]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(facets)


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    return cx.f_vector()


def h_from_f(f: Sequence[int]) -> IntPolynomial:
    """(1-t)^d f(t/(1-t)) with d = len(f) - 1."""
    d = len(f) - 1
    return IntPolynomial(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1)) for k in range(d + 1)
    )


def f_from_h(h: Sequence[int], d: int | None = None) -> tuple[int, ...]:
    """Inverse of :func:`h_from_f`: f_i = sum_k C(d-k, i-k) h_k."""
    if d is None:
        d = len(h) - 1
    h = list(h) + [0] * (d + 1 - len(h))
    return tuple(sum(comb(d - k, i - k) * h[k] for k in range(i + 1)) for i in range(d + 1))


def h_polynomial(cx: SimplicialComplex) -> IntPolynomial:
    return cx.h_polynomial()


def gamma_of_complex(cx: SimplicialComplex) -> GammaVector:
    return cx.gamma()


def boundary_of_ball(cx: SimplicialComplex) -> SimplicialComplex:
    """Subcomplex generated by ridges lying in exactly one facet.

    Returns ``{∅}`` when no such ridge exists (e.g. for a sphere).
    """
    if not cx.is_pure():
        raise NotManifoldLikeError("boundary_of_ball needs a pure complex")
    count: dict[int, int] = {}
    for F in cx.facet_masks:
        for v in _bits(F):
            r = F & ~(1 << v)
            count[r] = count.get(r, 0) + 1
    bad = [r for r, c in count.items() if c > 2]
    if bad:
        raise NotManifoldLikeError(
            f"ridge {sorted(cx.labels(bad[0]), key=_label_key)} lies in {count[bad[0]]} facets"
        )
    ridges = [r for r, c in count.items() if c == 1]
    if not ridges:
        return SimplicialComplex.point_empty()
    return SimplicialComplex.from_facets([cx.labels(r) for r in ridges])


# generators -------------------------------------------------------------


def simplex(n: int) -> SimplicialComplex:
    """2^[n] on vertices 1..n."""
    if n < 1:
        raise ValueError("simplex needs n >= 1")
    return SimplicialComplex.from_facets([range(1, n + 1)])


def simplex_boundary(n: int) -> SimplicialComplex:
    """∂2^[n]; for n = 1 this is {∅}."""
    if n < 1:
        raise ValueError("simplex-boundary needs n >= 1")
    if n == 1:
        return SimplicialComplex.point_empty()
    return SimplicialComplex.from_facets(combinations(range(1, n + 1), n - 1))


def cross_polytope_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-dimensional cross-polytope on vertices ±1..±n."""
    if n < 1:
        raise ValueError("cross-polytope-boundary needs n >= 1")
    facets = []
    for signs in range(1 << n):
        facets.append([(i + 1) * (-1 if signs >> i & 1 else 1) for i in range(n)])
    return SimplicialComplex.from_facets(facets)


GENERATORS = {
    "simplex": simplex,
    "simplex-boundary": simplex_boundary,
    "cross-polytope-boundary": cross_polytope_boundary,
}


def generators(kind: str, n: int) -> SimplicialComplex:
    try:
        make = GENERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown generator {kind!r}; choose from {sorted(GENERATORS)}") from None
    return make(n)


def cone(cx: SimplicialComplex, apex: Hashable = "apex") -> SimplicialComplex:
    return SimplicialComplex.from_facets([set(F) | {apex} for F in cx.facets()])


def load_complex(path) -> SimplicialComplex:
    with open(path) as fh:
        return SimplicialComplex.from_json(json.load(fh))
