"""
Error Types
-----------
Exception hierarchy shared by every qfold module.

Reports that are diagnostics (homomorphism checks, confluence sweeps) never
raise; they carry witnesses. Exceptions are reserved for bad input and for
conditions that indicate a bug in stored data.
"""

from typing import Any, Optional


class QFoldError(Exception):
    """Base class for all qfold errors."""


class InvalidInputError(QFoldError, ValueError):
    """Malformed text, unknown identifier, or data violating a documented precondition."""


class NotSpecializableError(QFoldError, ArithmeticError):
    """A coefficient has a pole at q = 1."""

    def __init__(self, message: str, offender: Optional[Any] = None):
        """
        Initialize error.

        Args:
            message: Human-readable description
            offender: The rule, coefficient or element that failed to specialize
        """
        super().__init__(message)
        self.offender = offender


class VerificationError(QFoldError):
    """A check that must hold by construction failed."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness
