import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from time import perf_counter
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..algebra.spectrum import spectral_decompose
from ..circuits.bank import (
    CircuitBank,
    build_bank,
    coupling_transform,
    drive_frequency,
    effective_delta,
    super_resonance_threshold,
)
from ..circuits.constitutive import build_bank_constitutive, verify_growth_constitutive
from ..circuits.verify import verify_growth
from ..control.algorithm import run_control, tracking_error, write_control_trace
from ..error import (
    DefectiveMatrix,
    DivergenceDetected,
    NotAtResonance,
    UnboundedConjugation,
)
from ..growth.effective import (
    EffectiveModel,
    effective_growth_rate,
    effective_matrix_algebraic,
    effective_matrix_averaged,
)
from ..homogenize.cell import effective_solution
from ..homogenize.floquet import floquet_approx
from ..homogenize.report import error_report
from ..homogenize.system import LinearSystem, validity_horizon, write_trajectory
from ..integrate.reference import integrate_reference
from ..settings import Settings
from ..utils.serialization import write_json
from .scenario import (
    Scenario,
    scenario_banks,
    scenario_control,
    scenario_model,
    scenario_system,
)

__all__ = [
    "analyze_bank",
    "cmd_circuits",
    "cmd_compare_floquet",
    "cmd_control",
    "cmd_effective",
    "cmd_simulate",
    "effective_model",
    "verify_bank",
    "EXIT_INVALID",
    "EXIT_NUMERICAL",
    "EXIT_OK",
    "EXIT_UNBOUNDED",
]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNBOUNDED = 3
EXIT_NUMERICAL = 4

Report = Dict[str, Any]


def _algebraic(system: LinearSystem, settings: Settings) -> EffectiveModel:
    spec = spectral_decompose(
        system.A, settings.cluster_tolerance, settings.decomposition_tolerance
    )
    return effective_matrix_algebraic(
        spec,
        system.P,
        frequency_tolerance=settings.frequency_tolerance,
        prune_tolerance=settings.prune_tolerance,
        near_resonance=settings.near_resonance,
    )


def _averaged(system: LinearSystem, settings: Settings) -> EffectiveModel:
    return effective_matrix_averaged(
        system.A,
        system.P,
        divergence_guard=settings.divergence_guard,
        averaging_periods=settings.averaging_periods,
        nodes_per_period=settings.nodes_per_period,
        prune_tolerance=settings.prune_tolerance,
    )


def effective_model(system: LinearSystem, settings: Settings) -> EffectiveModel:
    """The algebraic effective model, or the averaged one for a defective A.

    Raises UnboundedConjugation when the conjugated perturbation grows.
    """
    try:
        model = _algebraic(system, settings)
    except DefectiveMatrix as error:
        logger.info("Falling back to time averaging: %s", error)
        model = _averaged(system, settings)
    if not model.bounded:
        raise UnboundedConjugation(
            f"The conjugated perturbation grows: {list(model.verdict.offending_terms)}."
        )
    return model


def _times(scenario: Scenario, system: LinearSystem) -> np.ndarray:
    t_end = scenario.run.t_end
    if t_end is None:
        t_end = validity_horizon(system, scenario.settings.horizon_constant)
    return np.linspace(0.0, t_end, int(scenario.run.n_points))


def _rel_tol(scenario: Scenario) -> float:
    if scenario.run.rel_tol is not None:
        return float(scenario.run.rel_tol)
    return scenario.settings.rel_tol


def cmd_effective(scenario: Scenario, out: Path) -> Tuple[Report, int]:
    """Effective matrix by both routes, with the boundedness verdict.

    The averaged route is skipped for an unbounded verdict and used alone
    for a defective system matrix.
    """
    system = scenario_system(scenario)
    report: Report = {"dim": system.dim, "epsilon": system.epsilon}
    models = []
    try:
        algebraic = _algebraic(system, scenario.settings)
    except DefectiveMatrix as error:
        logger.info("No algebraic effective matrix: %s", error)
        report["algebraic_error"] = str(error)
    else:
        models.append(algebraic)
        report.update(
            B_algebraic=algebraic.B,
            residual_algebraic=algebraic.residual,
            offending_terms=[list(key) for key in algebraic.verdict.offending_terms],
        )
        if not algebraic.bounded:
            report.update(bounded=False, growth_rate=float("inf"))
            write_json(out / "effective.json", report)
            return report, EXIT_UNBOUNDED
    try:
        averaged = _averaged(system, scenario.settings)
    except DivergenceDetected as error:
        if not models:
            raise
        logger.info("Averaged route gave no matrix: %s", error)
        report["averaged_error"] = str(error)
    else:
        models.append(averaged)
        report.update(B_averaged=averaged.B, residual_averaged=averaged.residual)
    report.update(
        bounded=True, growth_rate=effective_growth_rate(models[0], system.epsilon)
    )
    write_json(out / "effective.json", report)
    return report, EXIT_OK


def cmd_simulate(scenario: Scenario, out: Path) -> Tuple[Report, int]:
    """Reference and homogenized trajectories with their error metrics."""
    system = scenario_system(scenario)
    model = effective_model(system, scenario.settings)
    times = _times(scenario, system)
    reference = integrate_reference(system, times[-1], _rel_tol(scenario), times)
    effective = effective_solution(
        system, model, times, scenario.settings.horizon_constant
    )
    metrics = error_report(effective, reference, system)
    write_trajectory(out / "reference.csv", reference)
    write_trajectory(out / "effective.csv", effective)
    report: Report = {"method": model.method, **metrics._asdict()}
    write_json(out / "error.json", report)
    return report, EXIT_OK


def cmd_control(scenario: Scenario, out: Path) -> Tuple[Report, int]:
    """Run the amplitude control and write its trace."""
    cfg = scenario_control(scenario)
    trace = run_control(
        cfg,
        step_fraction=scenario.settings.step_fraction,
        slow_target_ratio=scenario.settings.slow_target_ratio,
    )
    write_control_trace(out / "control.csv", trace)
    window = scenario.data["control"].get("error_window", [0.0, cfg.t_end])
    report: Report = {
        "windows": len(trace.windows),
        "H": cfg.H,
        "gain_exponent": cfg.gain_exponent,
        "error_window": list(window),
        "rms_relative_error": tracking_error(trace, *window),
    }
    write_json(out / "summary.json", report)
    return report, EXIT_OK


def analyze_bank(bank: CircuitBank, model: str, settings: Settings) -> Report:
    """Resonance, threshold verdict and effective matrices of one bank."""
    omega = drive_frequency(bank)
    grows, margin = super_resonance_threshold(bank, omega)
    report: Report = {"n": bank.n, "omega": omega, "grows": grows, "margin": margin}
    if model == "constitutive":
        system, _, _ = build_bank_constitutive(bank)
        algebraic = _algebraic(system, settings)
        report.update(bounded=algebraic.bounded)
        return report
    system = build_bank(bank)
    algebraic = _algebraic(system, settings)
    report.update(B=algebraic.B, bounded=algebraic.bounded)
    try:
        delta = effective_delta(bank, omega)
    except NotAtResonance as error:
        logger.warning("%s", error)
    else:
        U, U_inv = coupling_transform(bank.n)
        closed_form = np.zeros_like(algebraic.B)
        closed_form[:2, :2] = bank.n * delta
        deviation = np.linalg.norm(algebraic.B - U @ closed_form @ U_inv)
        report.update(Delta=delta, closed_form_deviation=float(deviation))
    return report


def verify_bank(
    bank: CircuitBank, model: str, settings: Settings, x0: Optional[np.ndarray]
) -> Report:
    report = analyze_bank(bank, model, settings)
    verify = verify_growth_constitutive if model == "constitutive" else verify_growth
    check = verify(bank, settings.horizon_factor, x0)
    report.update(
        fitted_rate=check.fitted_rate,
        predicted_rate=check.predicted_rate,
        consistent=check.consistent,
        t_end=check.t_end,
    )
    return report


BankTask = Tuple[str, CircuitBank, str, Settings, Optional[np.ndarray]]


def _bank_task(args: BankTask) -> Report:
    action, bank, model, settings, x0 = args
    if action == "verify":
        return verify_bank(bank, model, settings, x0)
    return analyze_bank(bank, model, settings)


def cmd_circuits(
    scenario: Scenario, out: Path, action: str, jobs: int = 1
) -> Tuple[Report, int]:
    """Analyze or verify one bank or a sweep of banks.

    Sweeps run on up to jobs worker processes; results keep the input order.
    A seeded scenario with random_x0 draws the initial states of verify.
    """
    banks = scenario_banks(scenario)
    model = scenario_model(scenario)
    rng = np.random.default_rng(scenario.run.seed)
    tasks = []
    for bank in banks:
        x0 = None
        if action == "verify" and scenario.run.random_x0:
            dim = 2 * bank.n + (model == "constitutive")
            x0 = rng.standard_normal(dim)
        tasks.append((action, bank, model, scenario.settings, x0))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(_bank_task, tasks))
    else:
        results = [_bank_task(task) for task in tasks]
    report: Report = {"model": model, "action": action, "banks": results}
    write_json(out / "circuits.json", report)
    return report, EXIT_OK


def cmd_compare_floquet(scenario: Scenario, out: Path) -> Tuple[Report, int]:
    """Errors and run times of the homogenized and the perturbative Floquet solutions.

    Timings go to timings.json so that compare.json is reproducible.
    """
    system = scenario_system(scenario)
    times = _times(scenario, system)
    timings: Dict[str, float] = {}

    start = perf_counter()
    reference = integrate_reference(system, times[-1], _rel_tol(scenario), times)
    timings["reference"] = perf_counter() - start

    start = perf_counter()
    floquet = floquet_approx(system, times, scenario.settings.quadrature_tolerance)
    timings["floquet"] = perf_counter() - start

    start = perf_counter()
    model = effective_model(system, scenario.settings)
    effective = effective_solution(
        system, model, times, scenario.settings.horizon_constant
    )
    timings["effective"] = perf_counter() - start

    report: Report = {
        "effective": error_report(effective, reference, system)._asdict(),
        "floquet": error_report(floquet, reference, system)._asdict(),
        "method": model.method,
    }
    write_json(out / "compare.json", report)
    write_json(out / "timings.json", timings)
    return {**report, "timings": timings}, EXIT_OK
