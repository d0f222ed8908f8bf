import json

import numpy as np
from pytest import raises

from temporal_homogenization import ScenarioError
from temporal_homogenization.cli import (
    load_scenario,
    parse_scenario,
    scenario_banks,
    scenario_control,
    scenario_model,
    scenario_system,
)

BANK = {"n": 2, "L": 1.0, "C": 1.0, "Cbar": 1.0, "R": 0.1, "eta": 0.01}


def describe_parse_scenario():
    def reads_run_and_settings():
        scenario = parse_scenario(
            {
                "schema": "1.0.0",
                "builder": {"name": "mathieu", "omega": 1.0, "epsilon": 0.01},
                "run": {"t_end": 5.0, "n_points": 11, "seed": 3},
                "settings": {"averaging_periods": 100},
            }
        )
        assert scenario.run.t_end == 5.0
        assert scenario.run.n_points == 11
        assert scenario.run.seed == 3
        assert scenario.settings.averaging_periods == 100.0
        assert scenario.settings.nodes_per_period == 20

    def rejects_malformed_scenarios():
        for data in (
            [],
            {"system": {}, "builder": {}},
            {"systems": {}},
            {"schema": "2.0.0"},
            {"schema": "latest"},
            {"run": {"steps": 10}},
            {"run": {"t_end": -1.0}},
            {"run": {"n_points": 1}},
            {"settings": {"tolerance": 1e-3}},
        ):
            with raises(ScenarioError):
                parse_scenario(data)


def describe_load_scenario():
    def reads_json_files(tmp_path):
        path = tmp_path / "scenario.json"
        path.write_text(json.dumps({"system": {"A": [[0.0]], "epsilon": 0.1}}))
        assert load_scenario(path).data["system"]["epsilon"] == 0.1

    def rejects_invalid_json(tmp_path):
        path = tmp_path / "scenario.json"
        path.write_text("{system")
        with raises(ScenarioError):
            load_scenario(path)


def describe_scenario_system():
    def builds_mathieu_system():
        scenario = parse_scenario(
            {
                "builder": {
                    "name": "mathieu",
                    "omega": 2.0,
                    "epsilon": 0.05,
                    "theta": 0.3,
                }
            }
        )
        system = scenario_system(scenario)
        assert system.epsilon == 0.05
        assert system.P.omega == 2.0

    def builds_circuit_banks():
        builder = {"builder": {"name": "rlc-bank", **BANK}}
        charge = scenario_system(parse_scenario(builder))
        assert charge.dim == 4
        constitutive = scenario_system(
            parse_scenario({"builder": {"name": "rlc-constitutive", **BANK}})
        )
        assert constitutive.dim == 5

    def reads_inline_systems():
        scenario = parse_scenario({"system": {"A": [[0, 1], [-1, 0]], "epsilon": 0.1}})
        assert np.array_equal(scenario_system(scenario).A, [[0, 1], [-1, 0]])

    def rejects_missing_or_unknown_builders():
        for data in (
            {},
            {"builder": {"name": "pendulum"}},
            {"builder": {"name": "mathieu", "omega": 1.0}},
            {"builder": {"name": "mathieu", "omega": 1.0, "epsilon": 0.1, "mass": 2}},
            {"system": {"epsilon": 0.1}},
        ):
            with raises(ScenarioError):
                scenario_system(parse_scenario(data))


def describe_scenario_banks():
    def reads_single_bank_sweep_or_builder():
        assert len(scenario_banks(parse_scenario({"bank": BANK}))) == 1
        assert len(scenario_banks(parse_scenario({"banks": [BANK, BANK, BANK]}))) == 3
        builder = {"builder": {"name": "rlc-bank", **BANK}}
        (bank,) = scenario_banks(parse_scenario(builder))
        assert bank.n == 2

    def rejects_ambiguous_or_missing_banks():
        with raises(ScenarioError):
            scenario_banks(parse_scenario({"bank": BANK, "banks": [BANK]}))
        with raises(ScenarioError):
            scenario_banks(parse_scenario({}))


def describe_scenario_model():
    def defaults_to_charge_model():
        assert scenario_model(parse_scenario({"bank": BANK})) == "charge"
        builder = {"builder": {"name": "rlc-constitutive", **BANK}}
        assert scenario_model(parse_scenario(builder)) == "constitutive"

    def rejects_unknown_models():
        with raises(ScenarioError):
            scenario_model(parse_scenario({"bank": BANK, "model": "flux"}))


def describe_scenario_control():
    def reads_control_section():
        data = {"control": {"omega": 10, "t_end": 1, "target": {"polynomial": [1]}}}
        assert scenario_control(parse_scenario(data)).omega == 10.0

    def needs_control_section():
        with raises(ScenarioError):
            scenario_control(parse_scenario({}))
