"""Simulation and analysis of the Behrens-Feichtinger two-firm competition map."""

from .errors import (
    DegenerateSlope,
    Diverged,
    InsufficientSamples,
    LeapfrogError,
    NoSignChange,
    NotConverged,
    ParameterError,
    ZeroB1,
)
from .fixed_points import (
    BracketingInterval,
    FixedPointResult,
    brent_root,
    find_fixed_points,
    fixed_point_sweep,
    linear_slope,
    scalar_residual,
)
from .model import (
    DiffSumState,
    ModelParams,
    SaleState,
    TransformedParams,
    from_diffsum,
    sigmoid,
    step_xy,
    step_zw,
    to_diffsum,
    transform_params,
)
from .orbits import (
    OrbitConfig,
    RegimeReport,
    bifurcation_sweep,
    classify_regime,
    detect_period,
    iterate_orbit,
    parameter_grid,
    regime_grid,
)
from .stability import (
    classify_fixed_point,
    critical_elasticity,
    flip_elasticity,
    jacobian_at,
    lyapunov_largest,
    period_one_condition,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateSlope",
    "Diverged",
    "InsufficientSamples",
    "LeapfrogError",
    "NoSignChange",
    "NotConverged",
    "ParameterError",
    "ZeroB1",
    "BracketingInterval",
    "FixedPointResult",
    "brent_root",
    "find_fixed_points",
    "fixed_point_sweep",
    "linear_slope",
    "scalar_residual",
    "DiffSumState",
    "ModelParams",
    "SaleState",
    "TransformedParams",
    "from_diffsum",
    "sigmoid",
    "step_xy",
    "step_zw",
    "to_diffsum",
    "transform_params",
    "OrbitConfig",
    "RegimeReport",
    "bifurcation_sweep",
    "classify_regime",
    "detect_period",
    "iterate_orbit",
    "parameter_grid",
    "regime_grid",
    "classify_fixed_point",
    "critical_elasticity",
    "flip_elasticity",
    "jacobian_at",
    "lyapunov_largest",
    "period_one_condition",
]
