"""Fractional Hadamard powers of doubly nonnegative matrices.

Rank, Hadamard power rank, inertia, Vandermonde factors and Loewner
monotonicity thresholds, backed by the C++ core.
"""

from ._core import (
    ArgumentError,
    ConvergenceError,
    DimensionError,
    DomainError,
    Error,
    NotFoundError,
    ParseError,
    PerronError,
    RankError,
    SingularPivotError,
    StructureError,
    SymmetryError,
    default_tol,
    eigvalsh,
    fh_counterexample,
    fh_integral_residual,
    hadamard_power,
    hadamard_power_rank,
    inertia,
    kruskal_rank,
    loewner_geq,
    monotone_threshold,
    numeric_rank,
    perron_decompose,
    predict_inertia,
    rank2_gap_example,
    read_matrix,
    vandermonde_factor,
    verify_power_monotone,
)

__all__ = [name for name in dir() if not name.startswith("_")]
