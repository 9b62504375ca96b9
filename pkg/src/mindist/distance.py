"""Minimum distance function, its regularity index and stable value.

For a square-free monomial ideal ``I`` with complex ``Δ``:

* the associated primes are the complements of the facets of ``Δ``;
* a monomial ``m`` is a zero divisor outside ``I`` iff ``supp(m)`` is a face
  not contained in every facet;
* ``e(S/(I, m))`` measured in dimension ``dim S/I`` counts the
  top-dimensional facets that do not contain ``supp(m)``.

Dimension-dropping candidates contribute degree 0 (they have no component
of top dimension), which is the convention under which the profile is
non-increasing and stabilizes at 1 (unmixed) or 0 (mixed).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import NamedTuple

import numpy as np

from .complexes import MonomialIdeal, Monomial, _independent_facets, intersect_primes, mask_of, popcount
from .complexes import MonomialPrime, VertexSet, submasks
from .errors import (
    CrossValidationMismatch,
    MixedInputUnsupported,
    NonSquareFreeInput,
    NotMixed,
    TooManyMonomials,
)
from .hilbert import krull_dimension, multiplicity

ORACLE_MAX_MONOMIALS = 16


@dataclass(frozen=True)
class _Structure:
    n: int
    facets: tuple[int, ...]
    top: tuple[int, ...]
    dim: int

    @property
    def degree(self) -> int:
        return len(self.top)

    @property
    def unmixed(self) -> bool:
        return len(self.top) == len(self.facets)

    @property
    def prime(self) -> bool:
        return len(self.facets) == 1


@lru_cache(maxsize=1 << 14)
def _structure(ideal: MonomialIdeal) -> _Structure:
    if not ideal.is_square_free():
        raise NonSquareFreeInput(f"{ideal} is not square-free")
    ideal.require_proper_nonzero()
    facets = tuple(sorted(_independent_facets(ideal.n, ideal.supports)))
    d = max(popcount(f) for f in facets)
    return _Structure(ideal.n, facets, tuple(f for f in facets if popcount(f) == d), d)


def is_unmixed(ideal: MonomialIdeal) -> bool:
    return _structure(ideal).unmixed


def degree_monomials(n: int, t: int) -> list[Monomial]:
    """All degree-t monomials in n variables, grlex-descending."""
    out = []
    for combo in combinations_with_replacement(range(n), t):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        out.append(Monomial(tuple(exps)))
    return out


def _is_zero_divisor(st: _Structure, supp: int) -> bool:
    # supp meets the complement of some facet, i.e. lies in that prime
    return any(supp & ~f for f in st.facets)


def zero_divisor_monomials(ideal: MonomialIdeal, t: int) -> list[Monomial]:
    """Degree-t monomials outside I that lie in some associated prime."""
    st = _structure(ideal)
    out = []
    for m in degree_monomials(ideal.n, t):
        s = m.support
        if ideal.contains(m):
            continue
        if _is_zero_divisor(st, s):
            out.append(m)
    return out


class Delta(NamedTuple):
    value: int
    method: str


def _tag(st: _Structure) -> str:
    return "monomial-search" if st.unmixed else "monomial-restricted"


def _delta_lemma(st: _Structure, t: int) -> int:
    # Candidates are grouped by support class: a face s with 1 <= |s| <= t.
    best = None
    faces = set()
    for f in st.facets:
        faces.update(submasks(f))
    for s in faces:
        if s == 0 or popcount(s) > t or not _is_zero_divisor(st, s):
            continue
        hit = sum(1 for f in st.top if s & ~f)
        if best is None or hit > best:
            best = hit
    if best is None:
        return st.degree
    return st.degree - best


def _delta_general(ideal: MonomialIdeal, st: _Structure, t: int) -> int:
    best = None
    for m in zero_divisor_monomials(ideal, t):
        j = ideal.add(m)
        e = multiplicity(j, lengths=True) if krull_dimension(j) == st.dim else 0
        if best is None or e > best:
            best = e
    if best is None:
        return st.degree
    return st.degree - best


def delta(ideal: MonomialIdeal, t: int, method: str = "lemma") -> Delta:
    """δ_I(t) over monomial candidates.

    ``method="lemma"`` counts top facets per support class;
    ``method="general"`` forms every ideal ``(I, m)`` and runs the general
    multiplicity routine on it (slow; used for cross-checks).
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    st = _structure(ideal)
    if method == "lemma":
        val = _delta_lemma(st, t)
    elif method == "general":
        val = _delta_general(ideal, st, t)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Delta(val, _tag(st))


def _primes(st: _Structure, masks) -> list[MonomialPrime]:
    full = (1 << st.n) - 1
    return [MonomialPrime(VertexSet(full & ~f, st.n)) for f in masks]


def _first_degree_outside(ideal: MonomialIdeal, j: MonomialIdeal) -> int:
    """Smallest t with [J/I]_t != 0, scanning square-free monomials by degree."""
    for t in range(1, ideal.n + 1):
        for combo in combinations(range(ideal.n), t):
            m = mask_of(combo)
            if any(g & m == g for g in j.supports) and not any(g & m == g for g in ideal.supports):
                return t
    raise CrossValidationMismatch(f"J/I vanishes for {ideal}")


def r_index_mixed(ideal: MonomialIdeal) -> int:
    """r_I = min{t : [J_1/I]_t != 0}, J_1 the intersection of top-dimensional primes."""
    st = _structure(ideal)
    if st.unmixed:
        raise NotMixed(f"{ideal} is unmixed")
    j1 = intersect_primes(_primes(st, st.top))
    return _first_degree_outside(ideal, j1)


def r_index_unmixed(ideal: MonomialIdeal) -> int:
    """r_I = min over dropped primes p_i of min{t : [J_i/I]_t != 0}."""
    st = _structure(ideal)
    if not st.unmixed:
        raise CrossValidationMismatch(f"{ideal} is mixed")
    if st.prime:
        return 1
    best = None
    for i in range(len(st.facets)):
        others = st.facets[:i] + st.facets[i + 1:]
        ji = intersect_primes(_primes(st, others))
        t = _first_degree_outside(ideal, ji)
        if best is None or t < best:
            best = t
    return best


def r_index(ideal: MonomialIdeal) -> int:
    return r_index_unmixed(ideal) if is_unmixed(ideal) else r_index_mixed(ideal)


def stable_value(ideal: MonomialIdeal) -> int:
    # every monomial prime has degree 1
    return 1 if is_unmixed(ideal) else 0


@dataclass
class DeltaProfile:
    values: dict[int, int]
    r_index: int
    stable_value: int
    unmixed: bool
    constant_profile: bool
    methods: dict[int, str] = field(default_factory=dict)

    @property
    def t_max(self) -> int:
        return max(self.values)

    def is_nonincreasing(self) -> bool:
        seq = [self.values[t] for t in sorted(self.values)]
        return all(a >= b for a, b in zip(seq, seq[1:]))

    def empirical_r_index(self) -> int | None:
        """Least t from which the profile sits at the stable value up to t_max."""
        r = None
        for t in sorted(self.values, reverse=True):
            if self.values[t] != self.stable_value:
                break
            r = t
        return r

    def as_dict(self) -> dict:
        return {
            "values": {str(t): v for t, v in sorted(self.values.items())},
            "r_index": self.r_index,
            "stable_value": self.stable_value,
            "unmixed": self.unmixed,
            "constant_profile": self.constant_profile,
            "methods": {str(t): m for t, m in sorted(self.methods.items())},
        }


def delta_profile(ideal: MonomialIdeal, t_max: int | None = None, validate: bool = True) -> DeltaProfile:
    """δ_I(1..t_max) with the formula r_I; t_max defaults to r_I + 2."""
    st = _structure(ideal)
    r = r_index(ideal)
    if t_max is None or t_max < r + 1:
        t_max = max(t_max or 0, r + 2)
    values = {}
    methods = {}
    for t in range(1, t_max + 1):
        d = delta(ideal, t)
        values[t] = d.value
        methods[t] = d.method
    prof = DeltaProfile(values, r, stable_value(ideal), st.unmixed, st.prime, methods)
    if validate:
        if not prof.is_nonincreasing():
            raise CrossValidationMismatch(f"{ideal}: δ profile not non-increasing: {values}")
        if prof.empirical_r_index() != r:
            raise CrossValidationMismatch(
                f"{ideal}: formula r_I={r}, profile stabilizes at {prof.empirical_r_index()}: {values}"
            )
    return prof


# ---------------------------------------------------------------------------
# brute-force oracle over genuine forms


@lru_cache(maxsize=None)
def _realized_supports(num_monomials: int, q: int) -> np.ndarray:
    """Support masks of all nonzero coefficient vectors in F_q^M.

    Enumerates every vector; a form's membership in a monomial prime and in
    I depends only on which coefficients are nonzero.
    """
    total = q**num_monomials
    seen = np.zeros(1 << num_monomials, dtype=bool)
    weights = (1 << np.arange(num_monomials, dtype=np.int64))
    chunk = 1 << 21
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        masks = np.zeros(idx.shape, dtype=np.int64)
        rem = idx
        for j in range(num_monomials):
            rem, digit = np.divmod(rem, q)
            masks |= (digit != 0) * weights[j]
        seen[masks] = True
    return np.flatnonzero(seen).astype(np.int64)


def oracle_delta_forms(ideal: MonomialIdeal, t: int, q: int) -> int:
    """δ_I(t) by brute force over all degree-t forms with coefficients in F_q."""
    if q not in (2, 3):
        raise ValueError("q must be 2 or 3")
    st = _structure(ideal)
    if not st.unmixed:
        raise MixedInputUnsupported(f"{ideal} is mixed")
    monos = degree_monomials(ideal.n, t)
    if len(monos) > ORACLE_MAX_MONOMIALS:
        raise TooManyMonomials(f"{len(monos)} degree-{t} monomials exceed {ORACLE_MAX_MONOMIALS}")
    outside = 0
    prime_sets = [0] * len(st.facets)
    for j, m in enumerate(monos):
        if not ideal.contains(m):
            outside |= 1 << j
        for k, f in enumerate(st.facets):
            if m.support & ~f:
                prime_sets[k] |= 1 << j
    masks = _realized_supports(len(monos), q)
    hits = np.zeros(masks.shape, dtype=np.int64)
    for pset in prime_sets:
        hits += (masks & ~pset) == 0
    ok = ((masks & outside) != 0) & (hits >= 1)
    if not ok.any():
        return st.degree
    return st.degree - int(hits[ok].max())
