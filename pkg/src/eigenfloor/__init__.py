"""Trace-based lower bounds on the smallest eigenvalue of symmetric positive
definite matrices: the bound formulas, the extremal spectra attaining them,
O(m) trace engines for bidiagonal/tridiagonal representations, a bisection
eigen-oracle, and a dqds singular-value engine using the bounds as shifts.
"""

from ._backend import backend_name
from .bounds import (
    alpha,
    bailey_bound,
    bound_report,
    gap_ratio,
    gap_upper_bound,
    householder_bound,
    iterated_laguerre,
    laguerre_bound,
    multiplicity_q,
    newton_bound,
)
from .core import (
    BoundReport,
    LowerBidiagonal,
    Spectrum,
    SymTridiagonal,
    TracePair,
    bidiagonal_gram,
    is_positive_definite,
    ldlt_pivots,
    normalize_unit_inverse_trace,
    random_spd_spectrum,
    spectrum_to_tracepair,
    tridiagonal_cholesky,
)
from .dqds import (
    DqdsReport,
    QdArrays,
    ShiftStrategy,
    choose_shift,
    dqds_step,
    qd_from_bidiagonal,
    run_dqds,
    strategy,
)
from .eigen import (
    EigenResult,
    bidiagonal_singular_values,
    full_spectrum,
    smallest_eigenvalue,
    sturm_count,
)
from .errors import (
    ConvergenceError,
    DomainError,
    EigenfloorError,
    FeasibilityError,
    FormatError,
    NotPositiveDefiniteError,
    ShiftRejectedError,
    SingularMatrixError,
    TraceOverflowError,
)
from .extremal import (
    AttainabilityReport,
    ExtremalSpectrum,
    figure_ensemble_spectrum,
    gap_extremal_spectrum,
    laguerre_extremal_spectrum,
    perturbed_realization,
    trace_preserving_perturbation,
    verify_attainability,
)
from .io import format_matrix, load_matrix, parse_matrix, save_matrix
from .traces import ShiftedTracePair, shifted_traces, traces_fast, traces_oracle

__version__ = "0.1.0"

__all__ = [
    "AttainabilityReport",
    "BoundReport",
    "ConvergenceError",
    "DomainError",
    "DqdsReport",
    "EigenResult",
    "EigenfloorError",
    "ExtremalSpectrum",
    "FeasibilityError",
    "FormatError",
    "LowerBidiagonal",
    "NotPositiveDefiniteError",
    "QdArrays",
    "ShiftRejectedError",
    "ShiftStrategy",
    "ShiftedTracePair",
    "SingularMatrixError",
    "Spectrum",
    "SymTridiagonal",
    "TraceOverflowError",
    "TracePair",
    "alpha",
    "backend_name",
    "bailey_bound",
    "bidiagonal_gram",
    "bidiagonal_singular_values",
    "bound_report",
    "choose_shift",
    "dqds_step",
    "figure_ensemble_spectrum",
    "format_matrix",
    "full_spectrum",
    "gap_extremal_spectrum",
    "gap_ratio",
    "gap_upper_bound",
    "householder_bound",
    "is_positive_definite",
    "iterated_laguerre",
    "laguerre_bound",
    "laguerre_extremal_spectrum",
    "ldlt_pivots",
    "load_matrix",
    "multiplicity_q",
    "newton_bound",
    "normalize_unit_inverse_trace",
    "parse_matrix",
    "perturbed_realization",
    "qd_from_bidiagonal",
    "random_spd_spectrum",
    "run_dqds",
    "save_matrix",
    "shifted_traces",
    "smallest_eigenvalue",
    "spectrum_to_tracepair",
    "strategy",
    "sturm_count",
    "trace_preserving_perturbation",
    "traces_fast",
    "traces_oracle",
    "tridiagonal_cholesky",
    "verify_attainability",
]
