"""Bitset simplicial complexes, monomial ideals and monomial primes.

Faces and supports are stored as plain ``int`` bitmasks over vertex indices
``0..n-1``; :class:`VertexSet` is a thin typed wrapper used at the API
boundary.  Heavy loops elsewhere in the package work on raw masks.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    EmptyInput,
    IsolatedVertexPolicyViolation,
    NonSquareFreeInput,
    VertexOutOfRange,
    ZeroOrUnitIdeal,
)

MAX_VERTICES = 32


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def submasks(mask: int):
    """Yield every submask of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal, deduplicated masks, sorted by (size, value)."""
    uniq = sorted(set(masks), key=lambda m: (-popcount(m), m))
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lambda m: (popcount(m), m)))


def minimal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal, deduplicated masks, sorted by (size, value)."""
    uniq = sorted(set(masks), key=lambda m: (popcount(m), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class VertexSet:
    bits: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise VertexOutOfRange(f"ambient vertex count {self.n} outside 0..{MAX_VERTICES}")
        if self.bits < 0 or self.bits >> self.n:
            raise VertexOutOfRange(f"vertex set {self.bits:#x} uses positions >= n={self.n}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise VertexOutOfRange(f"vertex {v} outside 0..{n - 1}")
        return cls(mask_of(vertices), n)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self):
        return iter(bits_of(self.bits))

    def __contains__(self, v: int) -> bool:
        return bool(self.bits >> v & 1)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits | other.bits, max(self.n, other.n))

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & other.bits, max(self.n, other.n))

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & ~other.bits, self.n)

    def issubset(self, other: VertexSet) -> bool:
        return self.bits & other.bits == self.bits

    def __le__(self, other: VertexSet) -> bool:
        return self.issubset(other)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


def _to_mask(n: int, face) -> int:
    if isinstance(face, VertexSet):
        if face.bits >> n:
            raise VertexOutOfRange(f"face {face!r} not inside 0..{n - 1}")
        return face.bits
    if isinstance(face, int):
        raise TypeError("faces must be VertexSet or iterables of vertex indices")
    return VertexSet.of(n, face).bits


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on ``n`` vertices given by its facets (as bitmasks).

    ``facet_masks == (0,)`` is the empty complex ``{∅}`` and ``()`` the void
    complex.  Instances built with :func:`complex_from_facets` always satisfy
    the vertex condition; internal constructions (links, induced
    subcomplexes) may not.
    """

    n: int
    facet_masks: tuple[int, ...]

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> SimplicialComplex:
        return cls(n, maximal_masks(masks))

    @property
    def facets(self) -> list[VertexSet]:
        return [VertexSet(m, self.n) for m in self.facet_masks]

    @property
    def dim(self) -> int:
        if not self.facet_masks:
            return -2  # void complex
        return max(popcount(m) for m in self.facet_masks) - 1

    @cached_property
    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facet_masks:
            out.update(submasks(f))
        return frozenset(out)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """Face counts by cardinality: ``f[k]`` = number of faces with k vertices."""
        counts = [0] * (self.dim + 2 if self.facet_masks else 0)
        for f in self.faces:
            counts[popcount(f)] += 1
        return tuple(counts)

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facet_masks:
            m |= f
        return m

    def is_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facet_masks)

    def __repr__(self) -> str:
        body = ",".join("{" + ",".join(map(str, bits_of(m))) + "}" for m in self.facet_masks)
        return f"SimplicialComplex(n={self.n}, [{body}])"


def complex_from_facets(n: int, facets: Sequence, reindex: bool = False) -> SimplicialComplex:
    """Build a complex, enforcing the vertex condition.

    Every vertex ``0..n-1`` must lie in some facet.  With ``reindex=True`` the
    complex is instead relabelled onto the vertices it actually spans (this
    changes the ambient ring).
    """
    if not 0 < n <= MAX_VERTICES:
        raise VertexOutOfRange(f"n={n} outside 1..{MAX_VERTICES}")
    if not facets:
        raise EmptyInput("facet list is empty")
    masks = [_to_mask(n, f) for f in facets]
    cplx = SimplicialComplex.from_masks(n, masks)
    spanned = cplx.vertex_mask
    full = (1 << n) - 1
    if spanned != full:
        if not reindex:
            missing = bits_of(full & ~spanned)
            raise IsolatedVertexPolicyViolation(
                f"vertices {missing} are not faces; pass reindex=True to drop them"
            )
        return _reindex(cplx, bits_of(spanned))
    return cplx


def _reindex(cplx: SimplicialComplex, keep: list[int]) -> SimplicialComplex:
    if not keep:
        raise EmptyInput("complex spans no vertices")
    pos = {v: i for i, v in enumerate(keep)}
    masks = [mask_of(pos[v] for v in bits_of(f)) for f in cplx.facet_masks]
    return SimplicialComplex.from_masks(len(keep), masks)


# ---------------------------------------------------------------------------
# Monomials and monomial ideals


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")

    @classmethod
    def from_support(cls, n: int, mask: int) -> Monomial:
        return cls(tuple((mask >> i) & 1 for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> int:
        return mask_of(i for i, e in enumerate(self.exponents) if e)

    def is_square_free(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) or "1"


def _grlex_key(exps: tuple[int, ...]):
    # degree ascending; within a degree, lex-descending (x0 before x1)
    return (sum(exps), tuple(-e for e in exps))


def _minimalize(gens: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    ordered = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list[tuple[int, ...]] = []
    for g in ordered:
        if not any(all(a <= b for a, b in zip(k, g)) for k in kept):
            kept.append(g)
    return tuple(sorted(kept, key=_grlex_key))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``K[x0..x_{n-1}]`` by minimal generators (grlex order)."""

    n: int
    generators: tuple[tuple[int, ...], ...]

    @classmethod
    def from_exponents(cls, n: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
        tup = []
        for g in gens:
            g = tuple(int(e) for e in g)
            if len(g) != n or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g} for n={n}")
            tup.append(g)
        return cls(n, _minimalize(tup))

    @classmethod
    def from_supports(cls, n: int, supports: Iterable) -> MonomialIdeal:
        gens = []
        for s in supports:
            m = s if isinstance(s, int) else _to_mask(n, s)
            gens.append(tuple((m >> i) & 1 for i in range(n)))
        return cls.from_exponents(n, gens)

    @property
    def monomials(self) -> list[Monomial]:
        return [Monomial(g) for g in self.generators]

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.generators)

    def is_square_free(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g)

    @cached_property
    def supports(self) -> tuple[int, ...]:
        return tuple(mask_of(i for i, e in enumerate(g) if e) for g in self.generators)

    def contains(self, m: Monomial | Sequence[int]) -> bool:
        exps = m.exponents if isinstance(m, Monomial) else tuple(m)
        return any(all(a <= b for a, b in zip(g, exps)) for g in self.generators)

    def __contains__(self, m) -> bool:
        return self.contains(m)

    def add(self, m: Monomial | Sequence[int]) -> MonomialIdeal:
        exps = m.exponents if isinstance(m, Monomial) else tuple(m)
        return MonomialIdeal(self.n, _minimalize(self.generators + (exps,)))

    def radical(self) -> MonomialIdeal:
        return MonomialIdeal.from_supports(self.n, self.supports)

    def require_proper_nonzero(self) -> None:
        if self.is_zero:
            raise ZeroOrUnitIdeal("the zero ideal is not supported")
        if self.is_unit:
            raise ZeroOrUnitIdeal("the unit ideal is not supported")

    def __str__(self) -> str:
        return "(" + ", ".join(str(m) for m in self.monomials) + ")"


@dataclass(frozen=True)
class MonomialPrime:
    """Prime ideal generated by the variables in ``support``."""

    support: VertexSet

    def __post_init__(self):
        if self.support.bits == 0:
            raise ZeroOrUnitIdeal("monomial prime with empty support")

    @property
    def n(self) -> int:
        return self.support.n

    @property
    def degree(self) -> int:
        return 1

    @property
    def dim(self) -> int:
        return self.n - len(self.support)

    def __str__(self) -> str:
        return "(" + ",".join(f"x{i}" for i in self.support) + ")"


# ---------------------------------------------------------------------------
# Stanley-Reisner dictionary


def stanley_reisner_ideal(cplx: SimplicialComplex) -> MonomialIdeal:
    """Minimal non-faces of ``cplx`` as square-free generators."""
    faces = cplx.faces
    n = cplx.n
    nonfaces = []
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            m = mask_of(combo)
            if m in faces:
                continue
            # minimal iff every codimension-one subset is a face
            if all((m & ~(1 << v)) in faces for v in combo):
                nonfaces.append(m)
    if not nonfaces:
        raise ZeroOrUnitIdeal("complex is a full simplex; its Stanley-Reisner ideal is (0)")
    return MonomialIdeal.from_supports(n, nonfaces)


def _independent_facets(n: int, supports: Sequence[int]) -> tuple[int, ...]:
    """Maximal vertex sets containing no support (facets of the complex of I)."""
    gens = sorted(set(supports))
    found: list[int] = []

    def blocked(m: int) -> bool:
        return any(s & m == s for s in gens)

    def rec(v: int, cur: int):
        if v == n:
            if all(blocked(cur | 1 << u) for u in range(n) if not cur >> u & 1):
                found.append(cur)
            return
        with_v = cur | 1 << v
        if not blocked(with_v):
            rec(v + 1, with_v)
        rec(v + 1, cur)

    rec(0, 0)
    return tuple(found)


def complex_from_ideal(ideal: MonomialIdeal, reindex: bool = False) -> SimplicialComplex:
    """Complex whose faces are supports of square-free monomials outside ``ideal``."""
    if not ideal.is_square_free():
        raise NonSquareFreeInput(f"{ideal} is not square-free")
    ideal.require_proper_nonzero()
    facets = _independent_facets(ideal.n, ideal.supports)
    return complex_from_facets(ideal.n, [VertexSet(f, ideal.n) for f in facets], reindex=reindex)


def minimal_transversals(n: int, edges: Sequence[int]) -> tuple[int, ...]:
    """Minimal vertex sets meeting every edge (Berge's incremental algorithm)."""
    trans = [0]
    for e in sorted(set(edges), key=lambda m: (popcount(m), m)):
        if e == 0:
            return ()
        nxt = []
        for t in trans:
            if t & e:
                nxt.append(t)
            else:
                nxt.extend(t | 1 << v for v in bits_of(e))
        trans = list(minimal_masks(nxt))
    return tuple(trans)


def _primes_from_masks(n: int, masks: Iterable[int]) -> list[MonomialPrime]:
    ordered = sorted(masks, key=lambda m: (popcount(m), m))
    return [MonomialPrime(VertexSet(m, n)) for m in ordered]


def minimal_primes(ideal: MonomialIdeal, method: str = "facets") -> list[MonomialPrime]:
    """Minimal (= associated) primes of a square-free monomial ideal.

    ``method="facets"`` complements the facets of the associated complex;
    ``method="transversals"`` enumerates minimal vertex covers of the
    generator supports.  The two must agree.
    """
    if not ideal.is_square_free():
        raise NonSquareFreeInput(f"{ideal} is not square-free")
    ideal.require_proper_nonzero()
    n = ideal.n
    full = (1 << n) - 1
    if method == "facets":
        facets = _independent_facets(n, ideal.supports)
        return _primes_from_masks(n, (full & ~f for f in facets))
    if method == "transversals":
        return _primes_from_masks(n, minimal_transversals(n, ideal.supports))
    raise ValueError(f"unknown method {method!r}")


def intersect_primes(primes: Sequence[MonomialPrime]) -> MonomialIdeal:
    if not primes:
        raise EmptyInput("need at least one prime")
    n = primes[0].n
    gens = minimal_transversals(n, [p.support.bits for p in primes])
    return MonomialIdeal.from_supports(n, gens)


def form_in_prime(m: Monomial, p: MonomialPrime) -> bool:
    return bool(m.support & p.support.bits)
