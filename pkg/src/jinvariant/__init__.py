"""Exact calculator for J-invariants of semisimple groups, their motives and splittings."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    Inconsistency,
    InconsistentInput,
    InputError,
    JInvariantError,
    NegativeMultiplicity,
    NotDivisible,
)
from .jprofile import JInvariant, JProfile, load_default_profiles, load_profiles  # noqa: E402
from .polyring import IntPoly  # noqa: E402
from .rootdata import DynkinType  # noqa: E402

__all__ = [
    "IntPoly",
    "DynkinType",
    "JProfile",
    "JInvariant",
    "load_profiles",
    "load_default_profiles",
    "JInvariantError",
    "InputError",
    "Inconsistency",
    "NotDivisible",
    "NegativeMultiplicity",
    "InconsistentInput",
]
