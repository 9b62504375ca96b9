"""Purity, shellability, Cohen-Macaulayness and Gorensteinness of complexes.

Cohen-Macaulayness uses Reisner's criterion (every link has vanishing
reduced homology below its dimension); Gorensteinness uses Stanley's
criterion (the core is a homology sphere).
"""
from __future__ import annotations

from .complexes import SimplicialComplex, VertexSet, maximal_masks, popcount
from .errors import NotPure
from .homology import F2, as_field, link, reduced_homology


def is_pure(cplx: SimplicialComplex) -> bool:
    return len({popcount(f) for f in cplx.facet_masks}) <= 1


def _can_follow(new: int, placed: list[int]) -> bool:
    """Facet-pair test for appending ``new`` to a partial shelling."""
    for sj in placed:
        common = new & sj
        if not any(popcount(new & ~sk) == 1 and common & sk == common for sk in placed):
            return False
    return True


def find_shelling(cplx: SimplicialComplex) -> list[VertexSet] | None:
    """A shelling order of a pure complex, or ``None`` if there is none."""
    if not is_pure(cplx):
        raise NotPure(f"{cplx!r} is not pure")
    facets = list(cplx.facet_masks)
    s = len(facets)
    if s <= 1:
        return [VertexSet(f, cplx.n) for f in facets]
    full = (1 << s) - 1
    dead: set[int] = set()
    order: list[int] = []

    def rec(used: int) -> bool:
        if used == full:
            return True
        if used in dead:
            return False
        placed = [facets[i] for i in order]
        cands = [i for i in range(s) if not used >> i & 1]
        # prefer facets sharing the most vertices with what is placed
        cands.sort(key=lambda i: -max(popcount(facets[i] & p) for p in placed))
        for i in cands:
            if _can_follow(facets[i], placed):
                order.append(i)
                if rec(used | 1 << i):
                    return True
                order.pop()
        dead.add(used)
        return False

    # the first facet can always be fixed up to the choice made here
    for first in range(s):
        order[:] = [first]
        if rec(1 << first):
            return [VertexSet(facets[i], cplx.n) for i in order]
    return None


def is_shellable(cplx: SimplicialComplex) -> bool:
    return find_shelling(cplx) is not None


def check_shelling(cplx: SimplicialComplex, order) -> bool:
    """Definition-level check of a shelling order.

    For each i >= 2, the complex generated by ``σ_i ∩ σ_j`` (j < i) must be
    pure of dimension ``dim Δ - 1``.
    """
    masks = [o.bits if isinstance(o, VertexSet) else int(o) for o in order]
    if sorted(masks) != sorted(cplx.facet_masks):
        return False
    if not is_pure(cplx):
        return False
    size = popcount(masks[0]) if masks else 0
    for i in range(1, len(masks)):
        inter = maximal_masks(masks[i] & masks[j] for j in range(i))
        if any(popcount(m) != size - 1 for m in inter):
            return False
    return True


def _all_faces(cplx: SimplicialComplex):
    return sorted(cplx.faces)


def is_cohen_macaulay(cplx: SimplicialComplex, field=F2) -> bool:
    """Reisner: H̃_i(lk σ) = 0 for every face σ and every i < dim lk σ."""
    field = as_field(field)
    for sigma in _all_faces(cplx):
        lk = link(cplx, sigma)
        h = reduced_homology(lk, field)
        if any(h[i] for i in range(-1, lk.dim)):
            return False
    return True


def cone_points(cplx: SimplicialComplex) -> int:
    """Mask of vertices lying in every facet."""
    common = (1 << cplx.n) - 1
    for f in cplx.facet_masks:
        common &= f
    return common


def core(cplx: SimplicialComplex) -> SimplicialComplex:
    """Restriction of the complex to its non-cone vertices."""
    keep = ~cone_points(cplx)
    return SimplicialComplex(cplx.n, maximal_masks(f & keep for f in cplx.facet_masks))


def is_homology_sphere(cplx: SimplicialComplex, field=F2) -> bool:
    field = as_field(field)
    for sigma in _all_faces(cplx):
        lk = link(cplx, sigma)
        h = reduced_homology(lk, field)
        top = lk.dim
        if h[top] != 1 or any(h[i] for i in range(-1, top)):
            return False
    return True


def is_gorenstein(cplx: SimplicialComplex, field=F2) -> bool:
    """Stanley: K[Δ] is Gorenstein iff core(Δ) is a homology sphere over K."""
    return is_homology_sphere(core(cplx), field)
