"""Arithmetic, geometric and harmonic means of accretive-dissipative matrices.

A complex matrix ``T = A + iB`` (``A``, ``B`` Hermitian) is accretive-dissipative
when ``A`` and ``B`` are both positive definite.  This package provides the
three means on that cone, the componentwise extension of the Loewner order,
parallel sums, Schur complements, and checks for the inequalities relating
them.
"""

from .exceptions import (
    AdMeansError,
    ConvergenceFailure,
    DimensionMismatch,
    HypothesisFail,
    NotAccretiveDissipative,
    NotAD,
    NotHermitian,
    NotPD,
    NotPSD,
    Singular,
    SingularBlock,
    SqrtNotInCone,
    UnknownSuite,
)
from .linalg import (
    DEFAULT_TOL,
    ToleranceConfig,
    complex_inverse,
    conjugate_transpose,
    hermitian,
    hermitian_eigendecomposition,
    hermitian_inverse,
    hermitian_sqrt,
    is_positive_definite,
    is_positive_semidefinite,
)
from .means import (
    MeanKind,
    ad_mean,
    arithmetic_mean,
    check_amgmhm,
    check_congruence,
    check_order_equivalences,
    check_superadditivity,
    commuting_normal_geometric,
    geometric_block_witness,
    geometric_mean,
    harmonic_block_witness,
    harmonic_mean,
    hermitian_mean,
    riccati_residual,
    sqrt_product,
)
from .order import (
    AccretiveDissipativeMatrix,
    Order,
    OrderRelation,
    PartOrder,
    ToeplitzParts,
    ad_sqrt,
    as_ad,
    compare_extended_order,
    compare_loewner,
    is_accretive_dissipative,
    recompose,
    toeplitz_decompose,
)
from .schur import (
    BlockPartition,
    InverseParts,
    SchurCorrectionTerms,
    check_fm_inequality,
    check_lower_bound_chain,
    check_mixed_schur,
    check_parallel_vs_harmonic,
    check_pd_schur_mean,
    compare_parallel_vs_geometric,
    evaluate_schur_mean_conjecture,
    identity_residuals,
    inverse_block_residual,
    inverse_order,
    inverse_parts,
    parallel_sum,
    parallel_sum_schur_equality,
    schur_complement,
    schur_sum_decomposition,
    smw_residual,
)

__version__ = "0.1.0"
