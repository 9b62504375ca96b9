import random

import pytest
from hypothesis import given, settings, strategies as st

from mindist import complex_from_facets
from mindist.classify import (
    check_shelling,
    cone_points,
    core,
    find_shelling,
    is_cohen_macaulay,
    is_gorenstein,
    is_pure,
    is_shellable,
)
from mindist.complexes import SimplicialComplex, bits_of
from mindist.errors import NotPure
from mindist.generate import exhaustive_complexes
from mindist.homology import F2, QQ, Field

from oracles import faces_of, reduced_betti, shelling_by_definition


def facet_sets(c):
    return [frozenset(bits_of(f)) for f in c.facet_masks]


def relabel(c, perm):
    masks = [sum(1 << perm[v] for v in bits_of(f)) for f in c.facet_masks]
    return SimplicialComplex(c.n, tuple(sorted(masks)))


def reisner_brute(c, p):
    """Cohen-Macaulay by Reisner over F_p (p=0 for Q) from first principles."""
    facets = facet_sets(c)
    for sigma in faces_of(facets):
        lk = [f - sigma for f in facets if sigma <= f]
        top = max(len(f) for f in lk) - 1
        betti = reduced_betti(lk, p)
        if any(betti.get(i, 0) for i in range(-1, top)):
            return False
    return True


class TestPurity:
    def test_examples(self, triangle, two_edges):
        assert is_pure(triangle) and is_pure(two_edges)
        assert not is_pure(complex_from_facets(3, [[0, 1], [2]]))

    def test_not_pure_raises(self):
        with pytest.raises(NotPure):
            find_shelling(complex_from_facets(3, [[0, 1], [2]]))


class TestShelling:
    def test_triangle_witness(self, triangle):
        order = find_shelling(triangle)
        assert order is not None and check_shelling(triangle, order)
        assert check_shelling(triangle, [0b011, 0b110, 0b101])

    def test_two_edges(self, two_edges):
        assert not is_shellable(two_edges)
        assert not check_shelling(two_edges, [0b0011, 0b1100])

    def test_single_facet(self):
        c = complex_from_facets(3, [[0, 1, 2]])
        assert is_shellable(c)

    def test_bad_witness_rejected(self, triangle):
        assert not check_shelling(triangle, [0b011, 0b110])

    def test_non_trivial_order_dependence(self):
        # path 01-12-23: 01, 23, 12 is not a shelling, 01, 12, 23 is
        c = complex_from_facets(4, [[0, 1], [1, 2], [2, 3]])
        assert not check_shelling(c, [0b0011, 0b1100, 0b0110])
        assert check_shelling(c, [0b0011, 0b0110, 0b1100])

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_definition_brute_force(self, n):
        for c in exhaustive_complexes(n):
            if not is_pure(c) or len(c.facet_masks) > 7:
                continue
            expected = shelling_by_definition(facet_sets(c)) is not None
            assert is_shellable(c) == expected, c

    def test_relabel_invariance(self):
        rng = random.Random(11)
        for c in exhaustive_complexes(5):
            if not is_pure(c):
                continue
            perm = list(range(5))
            rng.shuffle(perm)
            d = relabel(c, perm)
            assert is_shellable(c) == is_shellable(d)
            w = find_shelling(d)
            assert w is None or check_shelling(d, w)


class TestCohenMacaulay:
    def test_examples(self, triangle, two_edges):
        assert is_cohen_macaulay(triangle, F2) and is_cohen_macaulay(triangle, QQ)
        assert not is_cohen_macaulay(two_edges, F2)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_brute_reisner(self, n):
        for c in exhaustive_complexes(n):
            assert is_cohen_macaulay(c, F2) == reisner_brute(c, 2)
            assert is_cohen_macaulay(c, QQ) == reisner_brute(c, 0)

    def test_rp2_field_dependence(self):
        rp2 = complex_from_facets(6, [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [1, 3, 5], [2, 4, 5],
        ])
        assert is_cohen_macaulay(rp2, QQ)
        assert not is_cohen_macaulay(rp2, F2)
        assert is_cohen_macaulay(rp2, Field(3))
        assert not is_shellable(rp2)


class TestGorenstein:
    def test_examples(self, triangle, two_edges):
        assert is_gorenstein(triangle)
        assert not is_gorenstein(two_edges)
        assert is_gorenstein(complex_from_facets(2, [[0], [1]]))

    def test_cone_is_gorenstein_iff_base(self, triangle):
        cone = complex_from_facets(4, [[0, 1, 3], [1, 2, 3], [0, 2, 3]])
        assert cone_points(cone) == 0b1000
        assert core(cone).facet_masks == triangle.facet_masks
        assert is_gorenstein(cone)

    def test_simplex(self):
        assert is_gorenstein(complex_from_facets(3, [[0, 1, 2]]))

    def test_paths(self):
        # the 2-edge path is a cone over two points, so (x0 x2) is Gorenstein
        assert is_gorenstein(complex_from_facets(3, [[0, 1], [1, 2]]))
        p3 = complex_from_facets(4, [[0, 1], [1, 2], [2, 3]])
        assert is_cohen_macaulay(p3) and not is_gorenstein(p3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_implications_on_corpus(n):
    for c in exhaustive_complexes(n):
        for f in (F2, QQ):
            cm = is_cohen_macaulay(c, f)
            if is_pure(c) and is_shellable(c):
                assert cm
            if is_gorenstein(c, f):
                assert cm
            if cm:
                assert is_pure(c)


@st.composite
def pure_complexes(draw):
    n = draw(st.integers(3, 6))
    k = draw(st.integers(1, n))
    subs = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=k, max_size=k), min_size=1, max_size=8))
    masks = {sum(1 << v for v in s) for s in subs}
    return SimplicialComplex(n, tuple(sorted(masks)))


@settings(max_examples=60, deadline=None)
@given(pure_complexes(), st.randoms(use_true_random=False))
def test_shellable_witness_and_relabel_property(c, rnd):
    w = find_shelling(c)
    if w is not None:
        assert check_shelling(c, w)
        assert is_cohen_macaulay(c, F2)
    perm = list(range(c.n))
    rnd.shuffle(perm)
    assert is_shellable(relabel(c, perm)) == (w is not None)
