"""temporal_homogenization.cli"""

from .commands import (
    cmd_circuits,
    cmd_compare_floquet,
    cmd_control,
    cmd_effective,
    cmd_simulate,
    effective_model,
)
from .main import build_parser, main
from .scenario import (
    RunSpec,
    Scenario,
    load_scenario,
    parse_scenario,
    scenario_banks,
    scenario_control,
    scenario_model,
    scenario_system,
)

__all__ = [
    "build_parser",
    "cmd_circuits",
    "cmd_compare_floquet",
    "cmd_control",
    "cmd_effective",
    "cmd_simulate",
    "effective_model",
    "load_scenario",
    "main",
    "parse_scenario",
    "scenario_banks",
    "scenario_control",
    "scenario_model",
    "scenario_system",
    "RunSpec",
    "Scenario",
]
