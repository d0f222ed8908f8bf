"""Exceptions raised by temporal_homogenization.

All errors derive from :class:`HomogenizationError`. Input problems are also
``ValueError`` instances and numerical breakdowns are ``ArithmeticError`` instances,
so callers that only know the standard hierarchy can still catch them.
"""

__all__ = [
    "DefectiveMatrix",
    "DimensionError",
    "DivergenceDetected",
    "ExpOverflow",
    "GridMismatch",
    "GridTooShort",
    "HomogenizationError",
    "InvalidParameter",
    "NonpositiveTarget",
    "NonzeroForcing",
    "NotAtResonance",
    "NumericalFailure",
    "OverdampedBank",
    "ScenarioError",
    "ScheduleGap",
    "SingularCouplingData",
    "StepUnderflow",
    "UnboundedConjugation",
    "UnboundedDynamics",
    "UnsupportedForcing",
    "ZeroState",
]


class HomogenizationError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(HomogenizationError, ValueError):
    """An argument is outside the domain of the operation."""


class DimensionError(InvalidParameter):
    """Matrix or vector shapes do not agree."""


class ZeroState(InvalidParameter):
    """The oscillator state is identically zero, so no phase is defined."""


class NonpositiveTarget(InvalidParameter):
    """A control target amplitude is not strictly positive."""


class OverdampedBank(InvalidParameter):
    """The circuit bank has no oscillatory resonant frequency."""


class NotAtResonance(InvalidParameter):
    """The supplied frequency is not the resonant frequency of the bank."""


class ScheduleGap(InvalidParameter):
    """A parametric schedule does not cover the integration interval."""


class GridTooShort(InvalidParameter):
    """A sampled function does not cover the requested time."""


class GridMismatch(InvalidParameter):
    """Two trajectories are sampled on different time grids."""


class UnsupportedForcing(InvalidParameter):
    """The forcing cannot be represented by the requested transformation."""


class NonzeroForcing(InvalidParameter):
    """An operation that needs a homogeneous system got a forced one."""


class SingularCouplingData(InvalidParameter):
    """The coupling transform of the constitutive bank model does not exist."""


class ScenarioError(InvalidParameter):
    """A scenario file is malformed."""


class NumericalFailure(HomogenizationError, ArithmeticError):
    """A numerical method could not deliver a trustworthy result."""


class ExpOverflow(NumericalFailure):
    """The matrix exponential exceeds the floating point range."""


class StepUnderflow(NumericalFailure):
    """The adaptive step size of an integrator collapsed."""


class DefectiveMatrix(NumericalFailure):
    """The matrix is not diagonalizable within the clustering tolerance."""


class UnboundedDynamics(HomogenizationError):
    """The conjugated perturbation grows, so no finite effective matrix exists."""


class UnboundedConjugation(UnboundedDynamics):
    """The growth operator found growing terms and a finite B was demanded."""


class DivergenceDetected(UnboundedDynamics):
    """The running time average exceeded the divergence guard."""
