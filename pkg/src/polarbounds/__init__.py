"""Polar-form anisotropic elasticity and feasibility bounds for laminates."""

from .lamination import *  # noqa: F401,F403
from .polar_core import *  # noqa: F401,F403

__version__ = "0.1.0"
