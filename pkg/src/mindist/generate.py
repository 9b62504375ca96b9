"""Exhaustive and seeded-random families of simplicial complexes.

Exhaustive families are generated up to vertex relabelling.  A complex on
``n`` vertices is its deletion of vertex ``n-1`` (a complex on ``n-1``
vertices) plus a cone over a subcomplex of that deletion, its link.
Extending every isomorphism-class representative on ``n-1`` vertices by
every subcomplex, then deduplicating by canonical form, yields every class
on ``n`` vertices.
"""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations, product

from .complexes import SimplicialComplex, bits_of, maximal_masks, popcount, submasks

EXHAUSTIVE_MAX_N = 7


@lru_cache(maxsize=None)
def _perm_tables(n: int, perm: tuple[int, ...]) -> tuple[int, ...]:
    table = []
    for m in range(1 << n):
        out = 0
        for v in bits_of(m):
            out |= 1 << perm[v]
        table.append(out)
    return tuple(table)


def _vertex_invariant(facet_masks: tuple[int, ...], v: int):
    bit = 1 << v
    sizes = sorted(popcount(f) for f in facet_masks if f & bit)
    pair = sorted(popcount(f & g) for f in facet_masks if f & bit for g in facet_masks if not g & bit)
    return (len(sizes), tuple(sizes), tuple(pair))


def canonical_form(cplx: SimplicialComplex) -> tuple[int, ...]:
    """Lexicographically least sorted facet-mask list over relabellings.

    Only permutations compatible with a relabelling-invariant vertex
    ordering are scanned; the minimum over that coset is still a complete
    isomorphism invariant.
    """
    n = cplx.n
    masks = cplx.facet_masks
    inv = [_vertex_invariant(masks, v) for v in range(n)]
    order = sorted(range(n), key=lambda v: inv[v])
    groups: list[list[int]] = []
    for v in order:
        if groups and inv[groups[-1][0]] == inv[v]:
            groups[-1].append(v)
        else:
            groups.append([v])
    best = None
    for choice in product(*(permutations(g) for g in groups)):
        perm = [0] * n
        pos = 0
        for block in choice:
            for v in block:
                perm[v] = pos
                pos += 1
        table = _perm_tables(n, tuple(perm))
        img = tuple(sorted(table[f] for f in masks))
        if best is None or img < best:
            best = img
    return best


def canonical_complex(cplx: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(cplx.n, maximal_masks(canonical_form(cplx)))


def complex_id(cplx: SimplicialComplex) -> str:
    return f"n{cplx.n}:" + ".".join(format(m, "x") for m in canonical_form(cplx))


def _downsets(faces: list[int]):
    """Every subcomplex (downward-closed subset containing ∅) of a face list."""
    faces = sorted(faces, key=lambda m: (popcount(m), m))
    nonempty = [f for f in faces if f]

    def rec(i: int, chosen: set[int]):
        if i == len(nonempty):
            yield frozenset(chosen)
            return
        f = nonempty[i]
        yield from rec(i + 1, chosen)
        if all((f & ~(1 << v)) in chosen for v in bits_of(f)):
            chosen.add(f)
            yield from rec(i + 1, chosen)
            chosen.discard(f)

    yield from rec(0, {0})


def _faces(masks) -> list[int]:
    out: set[int] = set()
    for f in masks:
        out.update(submasks(f))
    return sorted(out)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical facet lists of all complexes on exactly n vertices (full simplex included)."""
    if n == 1:
        return ((1,),)
    seen: set[tuple[int, ...]] = set()
    apex = 1 << (n - 1)
    for base in _classes(n - 1):
        faces = _faces(base)
        for lk in _downsets(faces):
            masks = list(base) + [f | apex for f in lk]
            cand = SimplicialComplex(n, maximal_masks(masks))
            seen.add(canonical_form(cand))
    return tuple(sorted(seen, key=lambda c: (len(c), c)))


def exhaustive_complexes(n: int, include_simplex: bool = False) -> list[SimplicialComplex]:
    """One representative per isomorphism class of complexes on n vertices.

    Every vertex is a face.  The full simplex (whose ideal is zero) is
    omitted unless asked for.
    """
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive generation needs 1 <= n <= {EXHAUSTIVE_MAX_N}")
    full = (1 << n) - 1
    out = []
    for canon in _classes(n):
        if not include_simplex and canon == (full,):
            continue
        out.append(SimplicialComplex(n, maximal_masks(canon)))
    return out


def random_complex(n: int, rng: random.Random) -> SimplicialComplex:
    """Random antichain of facets by rejection.

    Draw a facet count ``k`` uniformly in ``1..2n``, then ``k`` subsets,
    each a uniformly random ``size``-subset with ``size`` uniform in
    ``1..n``; keep the inclusion-maximal ones.  Reject until the facets cover
    every vertex and do not form the full simplex.
    """
    full = (1 << n) - 1
    while True:
        k = rng.randint(1, 2 * n)
        masks = []
        for _ in range(k):
            size = rng.randint(1, n)
            masks.append(sum(1 << v for v in rng.sample(range(n), size)))
        facets = maximal_masks(masks)
        cover = 0
        for f in facets:
            cover |= f
        if cover == full and facets != (full,):
            return SimplicialComplex(n, facets)


def random_complexes(n: int, count: int, seed: int) -> list[SimplicialComplex]:
    rng = random.Random(seed * 1_000_003 + n)
    return [random_complex(n, rng) for _ in range(count)]
