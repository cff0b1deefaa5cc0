"""Exception hierarchy for the exact BV engine.

This module provides the error types raised by the domain modules:
- BvextError: Root of every domain error, carries the CLI exit code
- Input errors: ParseError, SchemaError, FieldError, DimensionMismatch
- Structural errors: NotFrobenius, NotDiagonalizable, NotGrouplike, ...
- Guard errors: AxiomViolation, NotCocycle (internal consistency)

Failed identity checks are not exceptions; they are recorded as
CheckResult entries in a SuiteReport.
"""
from typing import Any, Dict, Optional


class BvextError(Exception):
    """Base class for all domain errors."""

    exit_code: int = 6

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Serialize the error for report output."""
        return {
            "error_type": type(self).__name__,
            "error_message": self.message,
            "details": self.details,
        }


# Input errors

class ParseError(BvextError):
    """Input file is not valid JSON."""

    exit_code = 3


class SchemaError(BvextError):
    """Input JSON does not match the presentation schema."""

    exit_code = 4


class FieldError(BvextError):
    """Unknown field or non-prime characteristic."""

    exit_code = 4


class DimensionMismatch(BvextError):
    """Vector or tensor shape does not match the presentation."""


class IndexOutOfRange(BvextError):
    """Coface, codegeneracy or insertion index outside its range."""


class BudgetExceeded(BvextError):
    """Requested degree bound exceeds the configured hard cap."""

    exit_code = 5


# Structural errors

class ContainmentError(BvextError):
    """Denominator subspace is not contained in the numerator."""


class NotFrobenius(BvextError):
    """The Gram matrix of the functional is singular."""


class NotSymmetric(BvextError):
    """Operation requires a symmetric Frobenius structure."""


class NotDiagonalizable(BvextError):
    """The Nakayama automorphism does not split over the ground field."""


class CharacteristicError(BvextError):
    """Operation is only available in characteristic zero."""


class CoefficientNotAlgebra(BvextError):
    """Coefficient module carries no product."""


class NotCyclic(BvextError):
    """Operation requires τ^{n+1} = id."""


class NotGrouplike(BvextError):
    """Element is not grouplike."""


class TwistedInvolutionFails(BvextError):
    """S² differs from conjugation by the grouplike element."""


# Internal guards

class AxiomViolation(BvextError):
    """A structure built by the engine failed its own axioms."""


class NotCocycle(BvextError):
    """A class operation produced a non-cocycle."""
