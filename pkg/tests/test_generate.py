import random

import pytest

from mindist.complexes import SimplicialComplex, bits_of
from mindist.generate import (
    canonical_form,
    complex_id,
    exhaustive_complexes,
    random_complex,
    random_complexes,
)

from oracles import all_complexes_labeled, canonical_brute

# isomorphism classes of complexes on exactly n vertices, every vertex a face,
# full simplex excluded
REGRESSION_COUNTS = {1: 0, 2: 1, 3: 4, 4: 19, 5: 179}


def as_sets(c):
    return [bits_of(f) for f in c.facet_masks]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exhaustive_matches_labelled_enumeration(n):
    labelled = all_complexes_labeled(n)
    classes = {canonical_brute(n, [sorted(f) for f in fs]) for fs in labelled}
    full = (tuple(range(n)),)
    classes.discard(full)
    got = {canonical_brute(n, as_sets(c)) for c in exhaustive_complexes(n)}
    assert got == classes


@pytest.mark.parametrize("n,count", sorted(REGRESSION_COUNTS.items()))
def test_regression_counts(n, count):
    assert len(exhaustive_complexes(n)) == count
    assert len(exhaustive_complexes(n, include_simplex=True)) == count + 1


def test_n2_example():
    (c,) = exhaustive_complexes(2)
    assert as_sets(c) == [[0], [1]]


def test_representatives_pairwise_non_isomorphic():
    reps = exhaustive_complexes(5)
    assert len({complex_id(c) for c in reps}) == len(reps)


def test_every_vertex_is_a_face():
    for n in range(2, 6):
        for c in exhaustive_complexes(n):
            assert c.vertex_mask == (1 << n) - 1


@pytest.mark.parametrize("n", [3, 4, 5])
def test_canonical_form_against_all_permutations(n):
    rng = random.Random(n)
    for c in random_complexes(n, 40, seed=5):
        perm = list(range(n))
        rng.shuffle(perm)
        d = SimplicialComplex(n, tuple(sorted(sum(1 << perm[v] for v in bits_of(f)) for f in c.facet_masks)))
        assert canonical_form(c) == canonical_form(d)
        assert complex_id(c) == complex_id(d)
        # equal canonical forms only for brute-force isomorphic pairs
        assert canonical_brute(n, as_sets(c)) == canonical_brute(n, as_sets(d))


def test_canonical_form_separates_classes():
    reps = exhaustive_complexes(4)
    assert len({canonical_form(c) for c in reps}) == len(reps)
    assert len({canonical_brute(4, as_sets(c)) for c in reps}) == len(reps)


class TestRandom:
    def test_deterministic(self):
        a = random_complexes(6, 30, seed=42)
        b = random_complexes(6, 30, seed=42)
        assert [c.facet_masks for c in a] == [c.facet_masks for c in b]
        assert [c.facet_masks for c in random_complexes(6, 30, seed=43)] != [c.facet_masks for c in a]

    def test_valid_members(self):
        for n in (3, 6, 7):
            for c in random_complexes(n, 50, seed=1):
                full = (1 << n) - 1
                assert c.vertex_mask == full
                assert c.facet_masks != (full,)

    def test_antichain(self):
        for c in random_complexes(7, 50, seed=2):
            ms = c.facet_masks
            assert not any(a != b and a & b == a for a in ms for b in ms)

    def test_single_call(self):
        c = random_complex(4, random.Random(0))
        assert isinstance(c, SimplicialComplex) and c.n == 4


def test_bounds():
    with pytest.raises(ValueError):
        exhaustive_complexes(8)
    with pytest.raises(ValueError):
        exhaustive_complexes(0)
