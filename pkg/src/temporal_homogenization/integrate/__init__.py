"""temporal_homogenization.integrate"""

from .reference import integrate_reference
from .verlet import EpsilonSchedule, constant_schedule, make_schedule, velocity_verlet

__all__ = [
    "constant_schedule",
    "integrate_reference",
    "make_schedule",
    "velocity_verlet",
    "EpsilonSchedule",
]
