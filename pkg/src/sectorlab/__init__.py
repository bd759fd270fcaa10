"""sectorlab: weighted geometric means and operator entropies of accretive matrices.

The weighted geometric mean of accretive (sector) matrices is computed from
its Beta-kernel integral representation with Gauss-Jacobi quadrature; the
relative and Tsallis operator entropies extend it.  A seeded verification
engine checks every inequality these means satisfy over random ensembles.
"""

from .ensemble import GENERATOR_NAME, SectorSpec, random_accretive, random_hpd, random_unit_vectors
from .entropy import (
    EntropyConfig,
    relative_entropy,
    relative_entropy_adaptive,
    relative_entropy_hpd,
    tsallis_entropy,
    tsallis_entropy_adaptive,
    tsallis_from_mean,
    tsallis_limit_probe,
)
from .errors import (
    DimensionMismatch,
    EvaluationFailure,
    IllConditioned,
    InvalidNodeCount,
    InvalidParameters,
    InvalidScalar,
    InvalidWeight,
    NoConvergence,
    NotAccretive,
    NotPositiveDefinite,
    SectorlabError,
    SingularMatrix,
)
from .linalg import (
    AccretiveMatrix,
    LoewnerTolerance,
    as_matrix,
    frob,
    herm_eig,
    hpd_log,
    hpd_power,
    imag_part,
    inverse,
    loewner_geq,
    op_norm,
    real_part,
    symmetrize,
)
from .means import (
    GeometricMeanConfig,
    arithmetic_mean,
    check_weight,
    drury_mean,
    drury_mean_adaptive,
    geometric_mean,
    geometric_mean_adaptive,
    geometric_mean_hpd,
    harmonic_mean,
    scalar_geometric,
)
from .quadrature import (
    IntegralResult,
    QuadratureRule,
    beta_normalization,
    gauss_jacobi,
    gauss_legendre,
    integrate_adaptive,
    integrate_matrix,
)
from .verify import (
    EnsembleSpec,
    PropertyReport,
    check_bilinear,
    check_homogeneity,
    check_norm_inequality,
    check_re_geometric,
    check_re_harmonic,
    check_re_relative_entropy,
    check_re_tsallis,
    check_symmetry,
    check_vector_family,
    reports_to_dict,
    run_all,
    search_agh_counterexample,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
