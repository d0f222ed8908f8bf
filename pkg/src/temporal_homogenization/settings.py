from typing import Any, Dict, NamedTuple

__all__ = ["DEFAULTS", "Settings", "settings_from_json"]


class Settings(NamedTuple):
    """Numerical defaults shared by all operations.

    Tolerances without unit are relative: the clustering and decomposition
    tolerances scale with the norm of A, frequency tolerances with the base
    frequency of the perturbation and the pruning threshold with the norm of
    the perturbation coefficients.
    """

    cluster_tolerance: float = 1e-8
    decomposition_tolerance: float = 1e-8
    frequency_tolerance: float = 1e-9
    prune_tolerance: float = 1e-14
    near_resonance: float = 1e-6
    divergence_guard: float = 1e6
    averaging_periods: float = 1e4
    nodes_per_period: int = 20
    quadrature_tolerance: float = 1e-10
    horizon_constant: float = 1.0
    epsilon_warning: float = 0.5
    eta_warning: float = 0.1
    resonance_match: float = 1e-9
    rel_tol: float = 1e-10
    window_constant: float = 2.0
    step_fraction: float = 0.1
    slow_target_ratio: float = 0.1
    horizon_factor: float = 20.0


DEFAULTS = Settings()


def settings_from_json(data: Dict[str, Any], base: Settings = DEFAULTS) -> Settings:
    """Override fields of the given settings from a JSON object.

    Unknown keys raise a ValueError so that misspelled tolerances do not pass
    silently.
    """
    unknown = sorted(set(data) - set(Settings._fields))
    if unknown:
        raise ValueError(f"Unknown settings: {', '.join(unknown)}.")
    overrides = {
        key: type(getattr(base, key))(value) for key, value in data.items()
    }
    return base._replace(**overrides)
