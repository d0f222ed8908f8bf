"""temporal_homogenization.homogenize"""

from .cell import augment_forcing, cell_rhs, check_grid, effective_solution, solve_cell
from .floquet import floquet_approx
from .forcing import forcing_integral
from .report import ErrorMetrics, error_report
from .system import (
    ConstantForcing,
    ForcingSpec,
    ForcingTerm,
    LinearSystem,
    SampledForcing,
    Trajectory,
    TrigForcing,
    ZeroForcing,
    evaluate_forcing,
    forcing_dim,
    forcing_from_json,
    forcing_to_json,
    make_linear_system,
    make_sampled_forcing,
    make_trig_forcing,
    system_from_json,
    system_to_json,
    trajectory_to_rows,
    validity_horizon,
    write_trajectory,
)

__all__ = [
    "augment_forcing",
    "cell_rhs",
    "check_grid",
    "effective_solution",
    "error_report",
    "evaluate_forcing",
    "floquet_approx",
    "forcing_dim",
    "forcing_from_json",
    "forcing_integral",
    "forcing_to_json",
    "make_linear_system",
    "make_sampled_forcing",
    "make_trig_forcing",
    "solve_cell",
    "system_from_json",
    "system_to_json",
    "trajectory_to_rows",
    "validity_horizon",
    "write_trajectory",
    "ConstantForcing",
    "ErrorMetrics",
    "ForcingSpec",
    "ForcingTerm",
    "LinearSystem",
    "SampledForcing",
    "Trajectory",
    "TrigForcing",
    "ZeroForcing",
]
