import json
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Union

from ..circuits.bank import CircuitBank, bank_from_json, build_bank
from ..circuits.constitutive import build_bank_constitutive
from ..control.algorithm import ControlConfig, control_config_from_json
from ..control.mathieu import mathieu_system
from ..error import ScenarioError
from ..homogenize.system import LinearSystem, system_from_json
from ..settings import DEFAULTS, Settings, settings_from_json
from ..version import VersionInfo, version_info_schema

__all__ = [
    "load_scenario",
    "parse_scenario",
    "scenario_banks",
    "scenario_control",
    "scenario_model",
    "scenario_system",
    "RunSpec",
    "Scenario",
]

BUILDERS = ("mathieu", "rlc-bank", "rlc-constitutive")
TOP_LEVEL_KEYS = {
    "schema",
    "system",
    "builder",
    "run",
    "settings",
    "bank",
    "banks",
    "model",
    "control",
}


class RunSpec(NamedTuple):
    """Time grid, integrator tolerance and seed of a run.

    Without t_end the run covers the validity horizon of the system.
    """

    t_end: Optional[float] = None
    n_points: int = 1001
    rel_tol: Optional[float] = None
    seed: Optional[int] = None
    random_x0: bool = False


class Scenario(NamedTuple):
    data: Dict[str, Any]
    run: RunSpec
    settings: Settings


def parse_scenario(data: Any) -> Scenario:
    """Validate the scenario layout and read its run and settings sections."""
    if not isinstance(data, dict):
        raise ScenarioError("A scenario must be a JSON object.")
    unknown = sorted(set(data) - TOP_LEVEL_KEYS)
    if unknown:
        raise ScenarioError(f"Unknown scenario keys: {', '.join(unknown)}.")
    if "schema" in data:
        try:
            schema = VersionInfo.from_str(str(data["schema"]))
        except ValueError as error:
            raise ScenarioError(str(error)) from error
        if not version_info_schema.is_compatible(schema):
            raise ScenarioError(
                f"Scenario schema {schema} is not compatible"
                f" with {version_info_schema}."
            )
    if "system" in data and "builder" in data:
        raise ScenarioError(
            "A scenario has either an inline system or a builder, not both."
        )
    try:
        run = RunSpec(**data.get("run", {}))
        settings = settings_from_json(data.get("settings", {}), DEFAULTS)
    except (TypeError, ValueError) as error:
        raise ScenarioError(f"Invalid run or settings section: {error}") from error
    if run.t_end is not None and not run.t_end > 0:
        raise ScenarioError(f"The run end time must be positive, got {run.t_end}.")
    if not int(run.n_points) >= 2:
        raise ScenarioError(f"A run needs at least two points, got {run.n_points}.")
    return Scenario(data, run, settings)


def load_scenario(path: Union[str, Path]) -> Scenario:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as error:
        raise ScenarioError(f"{path} is not valid JSON: {error}") from error
    return parse_scenario(data)


def _require(params: Dict[str, Any], *names: str) -> None:
    missing = [name for name in names if name not in params]
    if missing:
        raise ScenarioError(f"Missing builder parameters: {', '.join(missing)}.")


def scenario_system(scenario: Scenario) -> LinearSystem:
    """The linear system of an inline or built scenario."""
    data = scenario.data
    try:
        if "system" in data:
            return system_from_json(data["system"])
        if "builder" not in data:
            raise ScenarioError("The scenario defines neither a system nor a builder.")
        params = dict(data["builder"])
        name = params.pop("name", None)
        if name == "mathieu":
            _require(params, "omega", "epsilon")
            return mathieu_system(**params)
        if name == "rlc-bank":
            return build_bank(bank_from_json(params))
        if name == "rlc-constitutive":
            return build_bank_constitutive(bank_from_json(params))[0]
    except (KeyError, TypeError) as error:
        raise ScenarioError(f"Invalid system definition: {error}") from error
    raise ScenarioError(
        f"Unknown builder {name!r}, expected one of {', '.join(BUILDERS)}."
    )


def scenario_banks(scenario: Scenario) -> List[CircuitBank]:
    """The bank, or the list of banks of a parameter sweep."""
    data = scenario.data
    if "bank" in data and "banks" in data:
        raise ScenarioError("A scenario has either one bank or a list of banks.")
    if "bank" in data:
        entries = [data["bank"]]
    elif "banks" in data:
        entries = list(data["banks"])
    elif data.get("builder", {}).get("name") in ("rlc-bank", "rlc-constitutive"):
        entries = [{k: v for k, v in data["builder"].items() if k != "name"}]
    else:
        raise ScenarioError("The scenario defines no circuit bank.")
    try:
        return [bank_from_json(dict(entry)) for entry in entries]
    except TypeError as error:
        raise ScenarioError(f"Invalid bank definition: {error}") from error


def scenario_model(scenario: Scenario) -> str:
    """The circuit model, "charge" unless the scenario asks for "constitutive"."""
    model = scenario.data.get("model")
    builder = scenario.data.get("builder", {}).get("name")
    if model is None and builder == "rlc-constitutive":
        model = "constitutive"
    model = model or "charge"
    if model not in ("charge", "constitutive"):
        raise ScenarioError(f"Unknown circuit model {model!r}.")
    return model


def scenario_control(scenario: Scenario) -> ControlConfig:
    if "control" not in scenario.data:
        raise ScenarioError("The scenario defines no control section.")
    try:
        return control_config_from_json(scenario.data["control"])
    except (KeyError, TypeError) as error:
        raise ScenarioError(f"Invalid control definition: {error}") from error
