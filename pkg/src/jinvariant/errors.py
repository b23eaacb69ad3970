"""Exception hierarchy.

Errors split into two families: input/validation problems (bad data, out of
range arguments) and mathematical inconsistencies (the requested objects
cannot coexist).  The CLI maps the first family to exit code 1 and the second
to exit code 2.
"""

from __future__ import annotations

from typing import Any


class JInvariantError(Exception):
    """Base class for every error raised by the package."""


class InputError(JInvariantError, ValueError):
    """Malformed or out-of-range input."""


class Inconsistency(JInvariantError, ArithmeticError):
    """The inputs are well-formed but mathematically incompatible.

    ``witness`` carries whatever objects document the failure (usually
    polynomials); the CLI serialises it into the report.
    """

    def __init__(self, message: str, witness: dict[str, Any] | None = None):
        super().__init__(message)
        self.witness = dict(witness or {})


class NotDivisible(Inconsistency):
    pass


class NegativeMultiplicity(Inconsistency):
    pass


class InconsistentInput(Inconsistency):
    pass


class InvalidSubset(InputError):
    pass


class InvalidType(InputError):
    pass


class GroupTooLarge(InputError):
    pass


class SchemaError(InputError):
    pass


class ConsistencyError(InputError):
    pass


class LengthMismatch(InputError):
    pass


class InvalidInput(InputError):
    pass


class InvalidData(InputError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class NotHalfSpin(InputError):
    pass
