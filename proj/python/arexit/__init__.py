"""Large-deviation exit-time bounds for X_{n+1} = f(X_n) + eps * xi."""

from ._core import (
    ActionResult,
    CostKind,
    DomainError,
    Error,
    ExitSide,
    MapSpec,
    McConfig,
    McEstimate,
    MinimizerConfig,
    NoiseSpec,
    NumericalError,
    ProcessConfig,
    absval_bound,
    bound_for,
    deadzone_bound,
    deadzone_quotient,
    estimate,
    grid_dp,
    halfline_bound,
    l1_cost,
    linear_bound,
    min_action,
    noise_constant,
    quad_cost,
    quadratic_bound,
    run_cli,
    saturated_bound,
    scaling_curve,
    stationary_density,
    stationary_log_density,
    stationary_log_limit,
    twoslope_bound,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
