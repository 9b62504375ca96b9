"""Reduced simplicial homology and Castelnuovo-Mumford regularity.

Regularity of ``S/I_Δ`` is obtained from Hochster's formula: it is the
largest ``i`` such that some induced subcomplex ``Δ_W`` has non-vanishing
reduced homology in degree ``i - 1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .complexes import SimplicialComplex, VertexSet, bits_of, maximal_masks, popcount, submasks
from .errors import NotAFace, UnsupportedField, ZeroOrUnitIdeal
from .linalg import rank_bareiss, rank_gf2, rank_mod_p


@dataclass(frozen=True)
class Field:
    """Coefficient field: ``characteristic == 0`` is Q, otherwise F_p."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p < 2 or p >= 1 << 16 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise UnsupportedField(f"F_{p} is not supported (need a prime p < 2^16)")

    @classmethod
    def parse(cls, name: str) -> Field:
        s = name.strip().upper()
        if s in ("Q", "QQ"):
            return cls(0)
        m = re.fullmatch(r"(?:F|GF)\(?(\d+)\)?", s)
        if not m:
            raise UnsupportedField(f"unknown field {name!r}; use Q or F<p>")
        return cls(int(m.group(1)))

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"


F2 = Field(2)
QQ = Field(0)


def as_field(field) -> Field:
    if isinstance(field, Field):
        return field
    return Field.parse(str(field))


@dataclass(frozen=True)
class ChainComplexMatrices:
    """Augmented simplicial chain complex with vertex-order orientation.

    ``faces[k]`` lists the faces with ``k`` vertices (``faces[0] == [0]`` is
    the empty face); ``boundary[k]`` maps ``k``-vertex faces to
    ``(k-1)``-vertex faces, as a dense row-major matrix.
    """

    faces: tuple[tuple[int, ...], ...]
    boundary: tuple[tuple[tuple[int, ...], ...], ...]

    def index(self, k: int) -> dict[int, int]:
        return {f: i for i, f in enumerate(self.faces[k])}


def _faces_by_size(facet_masks: tuple[int, ...]) -> list[list[int]]:
    if not facet_masks:
        return []
    allf: set[int] = set()
    for f in facet_masks:
        allf.update(submasks(f))
    top = max(popcount(f) for f in facet_masks)
    by = [[] for _ in range(top + 1)]
    for f in allf:
        by[popcount(f)].append(f)
    for lst in by:
        lst.sort()
    return by


def boundary_matrices(cplx: SimplicialComplex) -> ChainComplexMatrices:
    by = _faces_by_size(cplx.facet_masks)
    mats = [()]  # no boundary out of the empty face
    for k in range(1, len(by)):
        lower = {f: i for i, f in enumerate(by[k - 1])}
        rows = [[0] * len(by[k]) for _ in by[k - 1]]
        for j, face in enumerate(by[k]):
            for pos, v in enumerate(bits_of(face)):
                rows[lower[face & ~(1 << v)]][j] = -1 if pos % 2 else 1
        mats.append(tuple(tuple(r) for r in rows))
    return ChainComplexMatrices(tuple(tuple(x) for x in by), tuple(mats))


def _ranks_gf2(by: list[list[int]]) -> list[int]:
    ranks = [0]
    for k in range(1, len(by)):
        lower = {f: i for i, f in enumerate(by[k - 1])}
        rows = []
        for face in by[k]:
            r = 0
            m = face
            while m:
                low = m & -m
                r |= 1 << lower[face ^ low]
                m ^= low
            rows.append(r)  # column of the boundary as a packed row
        ranks.append(rank_gf2(rows))
    return ranks


def _ranks_dense(by: list[list[int]], p: int) -> list[int]:
    ranks = [0]
    for k in range(1, len(by)):
        lower = {f: i for i, f in enumerate(by[k - 1])}
        # transpose: one row per k-face; rank is unchanged
        mat = []
        for face in by[k]:
            row = [0] * len(by[k - 1])
            for pos, v in enumerate(bits_of(face)):
                row[lower[face & ~(1 << v)]] = -1 if pos % 2 else 1
            mat.append(row)
        ranks.append(rank_bareiss(mat) if p == 0 else rank_mod_p(mat, p))
    return ranks


@lru_cache(maxsize=1 << 18)
def _reduced_betti(facet_masks: tuple[int, ...], p: int) -> tuple[int, ...]:
    by = _faces_by_size(facet_masks)
    if not by:
        return ()
    ranks = _ranks_gf2(by) if p == 2 else _ranks_dense(by, p)
    ranks.append(0)
    # betti[k] is reduced homology in dimension k - 1
    return tuple(len(by[k]) - ranks[k] - ranks[k + 1] for k in range(len(by)))


@dataclass(frozen=True)
class HomologyRanks:
    field: Field
    betti: tuple[int, ...]  # betti[0] is dimension -1

    def __getitem__(self, dim: int) -> int:
        k = dim + 1
        if k < 0 or k >= len(self.betti):
            return 0
        return self.betti[k]

    @property
    def top(self) -> int:
        """Largest dimension with non-zero reduced homology, or ``-2``."""
        for k in range(len(self.betti) - 1, -1, -1):
            if self.betti[k]:
                return k - 1
        return -2

    def as_dict(self) -> dict[int, int]:
        return {k - 1: b for k, b in enumerate(self.betti)}


def reduced_homology(cplx: SimplicialComplex, field=F2) -> HomologyRanks:
    field = as_field(field)
    return HomologyRanks(field, _reduced_betti(cplx.facet_masks, field.characteristic))


def induced_subcomplex(cplx: SimplicialComplex, w) -> SimplicialComplex:
    wm = w.bits if isinstance(w, VertexSet) else int(w)
    if not cplx.facet_masks:
        return cplx
    return SimplicialComplex(cplx.n, maximal_masks(f & wm for f in cplx.facet_masks))


def link(cplx: SimplicialComplex, sigma) -> SimplicialComplex:
    s = sigma.bits if isinstance(sigma, VertexSet) else int(sigma)
    over = [f & ~s for f in cplx.facet_masks if f & s == s]
    if not over:
        raise NotAFace(f"{bits_of(s)} is not a face of {cplx!r}")
    return SimplicialComplex(cplx.n, maximal_masks(over))


def regularity(cplx: SimplicialComplex, field=F2) -> int:
    """reg(S/I_Δ) by maximizing over all induced subcomplexes."""
    p = as_field(field).characteristic
    if cplx.facet_masks == ((1 << cplx.n) - 1,):
        raise ZeroOrUnitIdeal("full simplex: I_Δ = (0) has no regularity")
    best = 0  # W = ∅ gives reduced H_{-1} of {∅}
    full = (1 << cplx.n) - 1
    for w in range(1, full + 1):
        sub = maximal_masks(f & w for f in cplx.facet_masks)
        betti = _reduced_betti(sub, p)
        # reduced H_{i-1} lives at betti[i]
        for i in range(len(betti) - 1, best, -1):
            if betti[i]:
                best = i
                break
    return best
