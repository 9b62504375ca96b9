"""Krull dimension, Hilbert functions and multiplicity of monomial ideals.

Two independent routes to the degree ``e(S/J)`` are provided:

* :func:`multiplicity` sums localization lengths over the top-dimensional
  minimal primes (standard-monomial counts of Artinian monomial ideals);
* :func:`hilbert_polynomial_leading` reads the leading coefficient of the
  cumulative Hilbert polynomial off finite differences of the Hilbert
  function, computed from the numerator of the Hilbert series.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial

from .complexes import MonomialIdeal, _independent_facets, _minimalize, popcount
from .errors import InterpolationMismatch, NonFiniteLength


def _top_facets(ideal: MonomialIdeal) -> tuple[int, list[int]]:
    facets = _independent_facets(ideal.n, ideal.supports)
    d = max(popcount(f) for f in facets)
    return d, [f for f in facets if popcount(f) == d]


def krull_dimension(ideal: MonomialIdeal) -> int:
    """dim S/J: the largest face of the complex of the radical of J."""
    ideal.require_proper_nonzero()
    return _top_facets(ideal)[0]


# ---------------------------------------------------------------------------
# Hilbert series numerator  K(t) with  HS(S/J; t) = K(t) / (1 - t)^n


def _poly_sub_shift(a: list[int], b: list[int], shift: int) -> list[int]:
    out = a + [0] * max(0, len(b) + shift - len(a))
    for i, c in enumerate(b):
        out[i + shift] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


@lru_cache(maxsize=1 << 16)
def _kpoly(gens: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    if not gens:
        return (1,)
    if len(gens) == 1:
        d = sum(gens[0])
        return tuple([1] + [0] * (d - 1) + [-1]) if d else (0,)
    # pivot on the last generator:  K(I + (m)) = K(I) - t^deg(m) K(I : m)
    *rest, m = gens
    rest = tuple(rest)
    colon = _minimalize(tuple(max(a - b, 0) for a, b in zip(g, m)) for g in rest)
    return tuple(_poly_sub_shift(list(_kpoly(rest)), list(_kpoly(colon)), sum(m)))


def hilbert_series_numerator(ideal: MonomialIdeal) -> tuple[int, ...]:
    return _kpoly(ideal.generators)


def _graded_from_numerator(kpoly: tuple[int, ...], n: int, t: int) -> int:
    total = 0
    for k, c in enumerate(kpoly):
        if c and t - k >= 0:
            total += c * comb(t - k + n - 1, n - 1)
    return total


def _square_free_graded(ideal: MonomialIdeal, t: int) -> int:
    if t == 0:
        return 1
    facets = _independent_facets(ideal.n, ideal.supports)
    faces: set[int] = set()
    for f in facets:
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    fvec: dict[int, int] = {}
    for f in faces:
        k = popcount(f)
        fvec[k] = fvec.get(k, 0) + 1
    # a degree-t monomial with support of size i >= 1: C(t-1, i-1) choices
    return sum(cnt * comb(t - 1, i - 1) for i, cnt in fvec.items() if i >= 1)


def graded_piece_dim(ideal: MonomialIdeal, t: int, method: str = "auto") -> int:
    """dim_K (S/J)_t, the number of standard monomials of degree exactly t."""
    if t < 0:
        return 0
    if method == "auto":
        method = "fvector" if ideal.is_square_free() else "series"
    if method == "fvector":
        return _square_free_graded(ideal, t)
    if method == "series":
        return _graded_from_numerator(hilbert_series_numerator(ideal), ideal.n, t)
    raise ValueError(f"unknown method {method!r}")


def hilbert_cumulative(ideal: MonomialIdeal, t: int, method: str = "auto") -> int:
    """H(t) = dim_K (S/J)_{<=t}, the affine (cumulative) Hilbert function."""
    return sum(graded_piece_dim(ideal, s, method) for s in range(t + 1))


hilbert_function = hilbert_cumulative


# ---------------------------------------------------------------------------
# multiplicity


def _artinian_length(gens: list[tuple[int, ...]], nvars: int) -> int:
    """Number of standard monomials of an Artinian monomial ideal."""
    if any(sum(g) == 0 for g in gens):
        return 0
    caps = []
    for i in range(nvars):
        powers = [g[i] for g in gens if g[i] and sum(g) == g[i]]
        if not powers:
            raise NonFiniteLength(f"variable {i} has no pure power in the localized ideal")
        caps.append(min(powers))
    gens = list(_minimalize(gens))
    count = 0
    for exps in product(*(range(c) for c in caps)):
        if not any(all(a <= b for a, b in zip(g, exps)) for g in gens):
            count += 1
    return count


def localization_length(ideal: MonomialIdeal, facet: int) -> int:
    """Length of S_p/J_p for the monomial prime p complementary to ``facet``.

    Localizing at p inverts the variables of ``facet``: set them to 1 and
    count standard monomials in the remaining variables.
    """
    keep = [i for i in range(ideal.n) if not facet >> i & 1]
    gens = [tuple(g[i] for i in keep) for g in ideal.generators]
    return _artinian_length(gens, len(keep))


def multiplicity(ideal: MonomialIdeal, lengths: bool = False) -> int:
    """e(S/J) as the sum of lengths over the top-dimensional minimal primes.

    For square-free J every length is 1 and the count of top-dimensional
    facets is returned directly unless ``lengths=True``.
    """
    ideal.require_proper_nonzero()
    _, top = _top_facets(ideal)
    if ideal.is_square_free() and not lengths:
        return len(top)
    return sum(localization_length(ideal, f) for f in top)


def hilbert_polynomial_leading(ideal: MonomialIdeal) -> tuple[int, Fraction]:
    """(degree, leading coefficient) of the cumulative Hilbert polynomial.

    The cumulative Hilbert function agrees with its polynomial from
    ``T = n * maxdeg + 1`` on; ``n + 2`` consecutive samples determine a
    polynomial of degree <= n + 1 through its forward differences.
    """
    ideal.require_proper_nonzero()
    n = ideal.n
    maxdeg = max(sum(g) for g in ideal.generators)
    start = n * maxdeg + 1
    kpoly = hilbert_series_numerator(ideal)
    graded = [_graded_from_numerator(kpoly, n, s) for s in range(start + n + 2)]
    cumulative = []
    acc = 0
    for g in graded:
        acc += g
        cumulative.append(acc)
    diffs = cumulative[start:]
    orders = [diffs[0]]
    while len(diffs) > 1:
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        orders.append(diffs[0])
    d = max(k for k, v in enumerate(orders) if v != 0)
    if any(orders[k] for k in range(d + 1, len(orders))):
        raise InterpolationMismatch("Hilbert function not polynomial on the sample window")
    return d, Fraction(orders[d], factorial(d))


def multiplicity_via_hilbert(ideal: MonomialIdeal) -> int:
    d, lead = hilbert_polynomial_leading(ideal)
    e = lead * factorial(d)
    if e.denominator != 1:
        raise InterpolationMismatch(f"non-integral degree {e}")
    return int(e)


def check_multiplicity(ideal: MonomialIdeal) -> int:
    """Both routes to e(S/J); raise if they disagree."""
    e1 = multiplicity(ideal)
    d, _ = hilbert_polynomial_leading(ideal)
    e2 = multiplicity_via_hilbert(ideal)
    if e1 != e2 or d != krull_dimension(ideal):
        raise InterpolationMismatch(
            f"{ideal}: localization gives e={e1}, Hilbert polynomial gives e={e2} (deg {d})"
        )
    return e1
