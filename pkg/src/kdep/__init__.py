"""Exact k-dependence profiles of matrices and matroids over finite fields.

The package computes, for a rank-r matroid M on s elements, the profile
d(M, k) = fraction of dependent (r - k)-subsets, and everything built on it:
closed-form bounds, a non-representability certifier, exhaustive extremal
searches with witnesses, the projective multiset construction, and seeded
Monte Carlo validation of the mean and Markov bounds.

The subset-counting kernel has a compiled backend with a pure-Python twin;
see kdep.kernel.BACKEND for which one is active (KDEP_PURE=1 forces the
fallback).
"""

from .bounds import (
    Certificate,
    MarkovBound,
    Trigger,
    certify_nonrepresentable,
    independence_probability,
    markov_dependence_bound,
    markov_probability_bound,
    mean_dependence,
    zero_dependence_size_bound,
)
from .documents import MatroidDocument, OracleTable, TableRow
from .field import Field, is_prime_power, make_field
from .kernel import BACKEND, backend_name
from .linalg import GfMatrix, decode_vector, encode_vector, enumerate_projective_points, is_independent, rank
from .matroid import (
    DependenceProfile,
    Matroid,
    dependence_profile,
    from_bases,
    from_matrix,
    k_dependence,
    matroid_bases,
)
from .montecarlo import (
    EmpiricalDistribution,
    MarkovReport,
    SampleConfig,
    check_markov,
    estimate_distribution,
    exhaustive_independence_probability,
    exhaustive_mean_dependence,
    sample_codes,
    sample_matrix,
)
from .search import (
    MonotonicityReport,
    OptimalityReport,
    SearchResult,
    projective_multiset,
    search_ind,
    search_min_dependence,
    verify_monotonicity,
    verify_optimality,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Certificate",
    "DependenceProfile",
    "EmpiricalDistribution",
    "Field",
    "GfMatrix",
    "MarkovBound",
    "MarkovReport",
    "Matroid",
    "MatroidDocument",
    "MonotonicityReport",
    "OptimalityReport",
    "OracleTable",
    "SampleConfig",
    "SearchResult",
    "TableRow",
    "Trigger",
    "backend_name",
    "certify_nonrepresentable",
    "check_markov",
    "decode_vector",
    "dependence_profile",
    "encode_vector",
    "enumerate_projective_points",
    "estimate_distribution",
    "exhaustive_independence_probability",
    "exhaustive_mean_dependence",
    "from_bases",
    "from_matrix",
    "independence_probability",
    "is_independent",
    "is_prime_power",
    "k_dependence",
    "make_field",
    "markov_dependence_bound",
    "markov_probability_bound",
    "matroid_bases",
    "mean_dependence",
    "projective_multiset",
    "rank",
    "sample_codes",
    "sample_matrix",
    "search_ind",
    "search_min_dependence",
    "verify_monotonicity",
    "verify_optimality",
    "zero_dependence_size_bound",
    "__version__",
]
