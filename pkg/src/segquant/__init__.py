"""Optimal quantization of the uniform unit segment under diagonal constraints.

The target measure is uniform on [0, 1] x {0}; quantizer points must lie on
the segments S_j = {(x, x + 1/j) : -1/j <= x <= 1}.  The package computes the
optimal n-point quantizers three independent ways (closed form, Lloyd-style
fixed point, exhaustive grid search) and estimates the quantization dimension
(2) and coefficient (1/2) from the error sequence.
"""

from .asymptotics import (
    RegressionEstimate,
    coefficient_estimate,
    dimension_direct,
    dimension_regression,
    excess,
    fit_log_log,
)
from .closed_form import (
    ClosedFormReport,
    coefficient,
    dimension,
    excess_exact,
    optimal_abscissas_exact,
    optimal_points,
    report,
    unconstrained_means,
    v_infinity,
    vn,
    vn_exact,
)
from .geometry import (
    ConstraintPoint,
    DegenerateBoundaryError,
    Point,
    bisector_abscissa,
    embed,
    feasible_foot_range,
    forward_map,
    inverse_map,
    squared_distance,
    voronoi_breakpoint,
)
from .measure import (
    UNIFORM,
    SupportInterval,
    UniformSegmentMeasure,
    ZeroMassError,
    optimal_abscissa,
    optimal_interval_distortion,
)
from .oracle import (
    BruteForceLimitError,
    OracleConfig,
    brute_force,
    riemann_distortion,
)
from .quantizer import (
    InvalidQuantizerError,
    Partition,
    Quantizer,
    SolverConfig,
    SolverOutcome,
    best_constraint_index,
    distortion,
    lloyd_step,
    partition_of,
    solve_fixed_constraint,
)

__version__ = "0.1.0"

__all__ = [
    "BruteForceLimitError",
    "ClosedFormReport",
    "ConstraintPoint",
    "DegenerateBoundaryError",
    "InvalidQuantizerError",
    "OracleConfig",
    "Partition",
    "Point",
    "Quantizer",
    "RegressionEstimate",
    "SolverConfig",
    "SolverOutcome",
    "SupportInterval",
    "UNIFORM",
    "UniformSegmentMeasure",
    "ZeroMassError",
    "best_constraint_index",
    "bisector_abscissa",
    "brute_force",
    "coefficient",
    "coefficient_estimate",
    "dimension",
    "dimension_direct",
    "dimension_regression",
    "distortion",
    "embed",
    "excess",
    "excess_exact",
    "feasible_foot_range",
    "fit_log_log",
    "forward_map",
    "inverse_map",
    "lloyd_step",
    "optimal_abscissa",
    "optimal_abscissas_exact",
    "optimal_interval_distortion",
    "optimal_points",
    "partition_of",
    "report",
    "riemann_distortion",
    "solve_fixed_constraint",
    "squared_distance",
    "unconstrained_means",
    "v_infinity",
    "vn",
    "vn_exact",
    "voronoi_breakpoint",
]
