"""The temporal_homogenization package"""

# The package and scenario schema version info
from .version import version, version_info, version_schema, version_info_schema

# Tunable numerical tolerances
from .settings import DEFAULTS, Settings, settings_from_json

# Exceptions
from .error import (
    DefectiveMatrix,
    DimensionError,
    DivergenceDetected,
    ExpOverflow,
    GridMismatch,
    GridTooShort,
    HomogenizationError,
    InvalidParameter,
    NonpositiveTarget,
    NonzeroForcing,
    NotAtResonance,
    NumericalFailure,
    OverdampedBank,
    ScenarioError,
    ScheduleGap,
    SingularCouplingData,
    StepUnderflow,
    UnboundedConjugation,
    UnboundedDynamics,
    UnsupportedForcing,
    ZeroState,
)

# Matrix exponentials and the real spectral decomposition
from .algebra import (
    conjugate,
    mat_exp,
    spectral_decompose,
    SpectralBlock,
    Spectrum,
)

# Fourier matrices and trigonometric-polynomial series
from .series import (
    conjugate_series,
    evaluate,
    fourier_evaluate,
    integrate_series,
    make_fourier_matrix,
    FourierMatrix,
    FourierMode,
    TrigSeries,
    TrigTerm,
)

# The growth operator and the effective matrix
from .growth import (
    effective_growth_rate,
    effective_matrix_algebraic,
    effective_matrix_averaged,
    growth_operator,
    BoundednessVerdict,
    EffectiveModel,
)

# Systems, forcing, homogenized solutions and error metrics
from .homogenize import (
    augment_forcing,
    effective_solution,
    error_report,
    floquet_approx,
    forcing_integral,
    make_linear_system,
    make_sampled_forcing,
    make_trig_forcing,
    solve_cell,
    validity_horizon,
    ConstantForcing,
    ErrorMetrics,
    ForcingTerm,
    LinearSystem,
    SampledForcing,
    Trajectory,
    TrigForcing,
    ZeroForcing,
)

# Reference integrators
from .integrate import (
    constant_schedule,
    integrate_reference,
    make_schedule,
    velocity_verlet,
    EpsilonSchedule,
)

# Parametric oscillator amplitude control
from .control import (
    mathieu_effective,
    mathieu_system,
    run_control,
    simulate_ignition,
    tracking_error,
    ControlConfig,
    ControlTrace,
    PolynomialTarget,
    SampledTarget,
)

# Coupled RLC circuit banks
from .circuits import (
    build_bank,
    build_bank_constitutive,
    effective_delta,
    make_bank,
    minimum_circuits,
    super_resonance_threshold,
    verify_growth,
    CircuitBank,
    GrowthCheck,
)

__version__ = version
__version_info__ = version_info
__version_schema__ = version_schema
__version_info_schema__ = version_info_schema

__all__ = [
    "augment_forcing",
    "build_bank",
    "build_bank_constitutive",
    "conjugate",
    "conjugate_series",
    "constant_schedule",
    "effective_delta",
    "effective_growth_rate",
    "effective_matrix_algebraic",
    "effective_matrix_averaged",
    "effective_solution",
    "error_report",
    "evaluate",
    "floquet_approx",
    "forcing_integral",
    "fourier_evaluate",
    "growth_operator",
    "integrate_reference",
    "integrate_series",
    "make_bank",
    "make_fourier_matrix",
    "make_linear_system",
    "make_sampled_forcing",
    "make_schedule",
    "make_trig_forcing",
    "mat_exp",
    "mathieu_effective",
    "mathieu_system",
    "minimum_circuits",
    "run_control",
    "settings_from_json",
    "simulate_ignition",
    "solve_cell",
    "spectral_decompose",
    "super_resonance_threshold",
    "tracking_error",
    "validity_horizon",
    "velocity_verlet",
    "verify_growth",
    "version",
    "version_info",
    "version_info_schema",
    "version_schema",
    "BoundednessVerdict",
    "CircuitBank",
    "ConstantForcing",
    "ControlConfig",
    "ControlTrace",
    "DefectiveMatrix",
    "DEFAULTS",
    "DimensionError",
    "DivergenceDetected",
    "EffectiveModel",
    "EpsilonSchedule",
    "ErrorMetrics",
    "ExpOverflow",
    "ForcingTerm",
    "FourierMatrix",
    "FourierMode",
    "GridMismatch",
    "GridTooShort",
    "GrowthCheck",
    "HomogenizationError",
    "InvalidParameter",
    "LinearSystem",
    "NonpositiveTarget",
    "NonzeroForcing",
    "NotAtResonance",
    "NumericalFailure",
    "OverdampedBank",
    "PolynomialTarget",
    "SampledForcing",
    "SampledTarget",
    "ScenarioError",
    "ScheduleGap",
    "Settings",
    "SingularCouplingData",
    "SpectralBlock",
    "Spectrum",
    "StepUnderflow",
    "Trajectory",
    "TrigForcing",
    "TrigSeries",
    "TrigTerm",
    "UnboundedConjugation",
    "UnboundedDynamics",
    "UnsupportedForcing",
    "ZeroForcing",
    "ZeroState",
]
