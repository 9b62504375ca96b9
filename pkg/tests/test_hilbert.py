from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from mindist.complexes import MonomialIdeal, stanley_reisner_ideal
from mindist.errors import NonFiniteLength, ZeroOrUnitIdeal
from mindist.generate import exhaustive_complexes
from mindist.hilbert import (
    _artinian_length,
    check_multiplicity,
    graded_piece_dim,
    hilbert_cumulative,
    hilbert_polynomial_leading,
    hilbert_series_numerator,
    krull_dimension,
    multiplicity,
)

from oracles import count_standard, hilbert_leading


def sf(n, *gens):
    return MonomialIdeal.from_supports(n, gens)


class TestKrullDimension:
    def test_examples(self):
        assert krull_dimension(sf(3, [0, 1, 2])) == 2
        assert krull_dimension(sf(3, [0, 1], [0, 2])) == 2
        assert krull_dimension(sf(3, [0], [1], [2])) == 0

    def test_non_square_free_uses_radical(self):
        assert krull_dimension(MonomialIdeal.from_exponents(3, [(3, 0, 0), (0, 2, 1)])) == 1

    def test_rejects_zero_and_unit(self):
        with pytest.raises(ZeroOrUnitIdeal):
            krull_dimension(MonomialIdeal(3, ()))
        with pytest.raises(ZeroOrUnitIdeal):
            krull_dimension(MonomialIdeal.from_exponents(3, [(0, 0, 0)]))


class TestHilbertFunction:
    def test_triangle(self):
        tri = sf(3, [0, 1, 2])
        assert hilbert_cumulative(tri, 0) == 1
        assert hilbert_cumulative(tri, 1) == 4
        assert hilbert_cumulative(tri, 2) == 10
        assert graded_piece_dim(tri, 2) == 6
        assert [1 + sum(count_standard(3, tri.generators, s) for s in range(1, t + 1))
                for t in range(3)] == [1, 4, 10]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_fvector_series_and_counting_agree(self, n):
        for c in exhaustive_complexes(n):
            ideal = stanley_reisner_ideal(c)
            for t in range(6):
                direct = count_standard(n, ideal.generators, t)
                assert graded_piece_dim(ideal, t, "fvector") == direct
                assert graded_piece_dim(ideal, t, "series") == direct

    def test_non_decreasing(self):
        ideal = MonomialIdeal.from_exponents(3, [(2, 0, 0), (1, 1, 0), (0, 0, 3)])
        values = [hilbert_cumulative(ideal, t) for t in range(10)]
        assert values == sorted(values)

    def test_series_numerator_principal(self):
        # K(t) = 1 - t^3 for a principal cubic
        assert hilbert_series_numerator(sf(3, [0, 1, 2])) == (1, 0, 0, -1)


class TestMultiplicity:
    @pytest.mark.parametrize(
        "n, gens, e",
        [
            (3, [(1, 1, 1)], 3),
            (3, [(1, 1, 0), (1, 0, 1)], 1),
            (3, [(1, 1, 0), (2, 0, 0)], 1),
        ],
    )
    def test_examples(self, n, gens, e):
        ideal = MonomialIdeal.from_exponents(n, gens)
        assert multiplicity(ideal) == e
        assert multiplicity(ideal, lengths=True) == e
        d, lead = hilbert_polynomial_leading(ideal)
        assert d == krull_dimension(ideal)
        assert lead * factorial(d) == e
        assert hilbert_leading(n, gens) == (d, Fraction(e))

    def test_length_of_fat_point(self):
        # (x0^2, x0 x1, x1^3): standard monomials 1, x0, x1, x1^2
        assert _artinian_length([(2, 0), (1, 1), (0, 3)], 2) == 4
        with pytest.raises(NonFiniteLength):
            _artinian_length([(1, 1)], 2)

    def test_non_reduced_line(self):
        # (x0^3) in 2 variables: a line with multiplicity 3
        ideal = MonomialIdeal.from_exponents(2, [(3, 0)])
        assert multiplicity(ideal) == 3 == check_multiplicity(ideal)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_square_free_counts_top_facets(self, n):
        for c in exhaustive_complexes(n):
            ideal = stanley_reisner_ideal(c)
            top = [f for f in c.facet_masks if bin(f).count("1") == c.dim + 1]
            assert multiplicity(ideal) == len(top) == multiplicity(ideal, lengths=True)
            assert krull_dimension(ideal) == c.dim + 1
            assert check_multiplicity(ideal) == len(top)


exponent_ideals = st.integers(2, 4).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(*[st.integers(0, 3)] * n), min_size=1, max_size=4),
    )
)


@settings(max_examples=150, deadline=None)
@given(exponent_ideals)
def test_localization_matches_interpolation(data):
    n, gens = data
    gens = [g for g in gens if sum(g) > 0]
    if not gens:
        return
    ideal = MonomialIdeal.from_exponents(n, gens)
    d, lead = hilbert_polynomial_leading(ideal)
    assert d == krull_dimension(ideal)
    assert multiplicity(ideal) == lead * factorial(d)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 3).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(*[st.integers(0, 2)] * n), min_size=1, max_size=3))
))
def test_series_route_matches_brute_interpolation(data):
    n, gens = data
    gens = [g for g in gens if sum(g) > 0]
    if not gens:
        return
    ideal = MonomialIdeal.from_exponents(n, gens)
    d, lead = hilbert_polynomial_leading(ideal)
    assert hilbert_leading(n, list(ideal.generators)) == (d, lead * factorial(d))
