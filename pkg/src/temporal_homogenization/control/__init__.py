"""temporal_homogenization.control"""

from .algorithm import (
    ControlConfig,
    ControlTrace,
    PolynomialTarget,
    SampledTarget,
    Target,
    WindowRecord,
    control_config_from_json,
    control_trace_rows,
    evaluate_target,
    run_control,
    tracking_error,
    window_parameters,
    write_control_trace,
)
from .ignition import simulate_ignition
from .mathieu import (
    decay_phase,
    growth_phase,
    mathieu_closed_form,
    mathieu_effective,
    mathieu_matrices,
    mathieu_system,
)

__all__ = [
    "control_config_from_json",
    "control_trace_rows",
    "decay_phase",
    "evaluate_target",
    "growth_phase",
    "mathieu_closed_form",
    "mathieu_effective",
    "mathieu_matrices",
    "mathieu_system",
    "run_control",
    "simulate_ignition",
    "tracking_error",
    "window_parameters",
    "write_control_trace",
    "ControlConfig",
    "ControlTrace",
    "PolynomialTarget",
    "SampledTarget",
    "Target",
    "WindowRecord",
]
