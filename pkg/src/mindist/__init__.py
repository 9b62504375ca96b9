"""Minimum distance function and regularity index of Stanley-Reisner ideals."""

from .classify import find_shelling, is_cohen_macaulay, is_gorenstein, is_pure, is_shellable
from .complexes import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    SimplicialComplex,
    VertexSet,
    complex_from_facets,
    complex_from_ideal,
    form_in_prime,
    intersect_primes,
    minimal_primes,
    stanley_reisner_ideal,
)
from .distance import (
    DeltaProfile,
    delta,
    delta_profile,
    oracle_delta_forms,
    r_index,
    r_index_mixed,
    r_index_unmixed,
    stable_value,
    zero_divisor_monomials,
)
from .hilbert import (
    graded_piece_dim,
    hilbert_cumulative,
    hilbert_function,
    hilbert_polynomial_leading,
    krull_dimension,
    multiplicity,
)
from .homology import F2, QQ, Field, induced_subcomplex, link, reduced_homology, regularity

__version__ = "0.1.0"

__all__ = [
    "DeltaProfile",
    "F2",
    "Field",
    "Monomial",
    "MonomialIdeal",
    "MonomialPrime",
    "QQ",
    "SimplicialComplex",
    "VertexSet",
    "complex_from_facets",
    "complex_from_ideal",
    "delta",
    "delta_profile",
    "find_shelling",
    "form_in_prime",
    "graded_piece_dim",
    "hilbert_cumulative",
    "hilbert_function",
    "hilbert_polynomial_leading",
    "induced_subcomplex",
    "intersect_primes",
    "is_cohen_macaulay",
    "is_gorenstein",
    "is_pure",
    "is_shellable",
    "krull_dimension",
    "link",
    "minimal_primes",
    "multiplicity",
    "oracle_delta_forms",
    "r_index",
    "r_index_mixed",
    "r_index_unmixed",
    "reduced_homology",
    "regularity",
    "stable_value",
    "stanley_reisner_ideal",
    "zero_divisor_monomials",
]
