"""Numerical toolkit for the spectral radius along the straight-line
homotopy from a matrix to its transpose."""

from .matrix_core import (Matrix, Decomposition, MatrixFormatError, matrix,
                          levinger_homotopy, centered_homotopy, decompose,
                          nonneg_extension_bound, direct_sum, is_irreducible,
                          perturb_positive, load_matrix, parse_matrix,
                          format_matrix)
from .spectra import (Spectrum, PerronPair, SolverError, perron_root,
                      full_spectrum, spectral_radius, symmetric_eigen,
                      null_space_contains)
from .families import FamilySpec, ClosedFormCurve, build, FAMILY_KINDS
from .analysis import (LevingerScan, ConcavityReport, CrossingCertificate,
                       SkewSingularityReport, levinger_value, scan,
                       second_derivative, certify_nonconcavity,
                       check_unimodality, is_constant_levinger,
                       kqp_structure_check, skew_singularity_check,
                       directsum_crossing, weight_limit_experiment)
from .verify import VerifyConfig, CheckResult, ALL_CHECKS, run_all

__version__ = "0.1.0"

__all__ = [
    "Matrix", "Decomposition", "MatrixFormatError", "matrix",
    "levinger_homotopy", "centered_homotopy", "decompose",
    "nonneg_extension_bound", "direct_sum", "is_irreducible",
    "perturb_positive", "load_matrix", "parse_matrix", "format_matrix",
    "Spectrum", "PerronPair", "SolverError", "perron_root", "full_spectrum",
    "spectral_radius", "symmetric_eigen", "null_space_contains",
    "FamilySpec", "ClosedFormCurve", "build", "FAMILY_KINDS",
    "LevingerScan", "ConcavityReport", "CrossingCertificate",
    "SkewSingularityReport", "levinger_value", "scan", "second_derivative",
    "certify_nonconcavity", "check_unimodality", "is_constant_levinger",
    "kqp_structure_check", "skew_singularity_check", "directsum_crossing",
    "weight_limit_experiment",
    "VerifyConfig", "CheckResult", "ALL_CHECKS", "run_all",
]
