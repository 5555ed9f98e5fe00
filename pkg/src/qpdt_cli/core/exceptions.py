"""Custom exceptions for QPDT numerical operations.

This module defines a hierarchy of exceptions for transform, quadrature and
file errors, with context preservation for debugging and a CLI exit code on
every class so the command layer can map failures without a lookup table.
"""

from typing import Any

from pydantic import ValidationError


def _truncate(text: str, limit: int = 200) -> str:
    if len(text) > limit:
        return text[:limit] + "..."
    return text


class QPDTError(Exception):
    """Base exception for QPDT errors.

    Stores optional structured details (offending values, node indices,
    bounds) that are appended to the message.

    Attributes:
        details: Optional mapping with the values that triggered the error
        exit_code: Process exit code used by the CLI for this error family
    """

    exit_code: int = 4

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        """Initialize error with message and optional details.

        Args:
            message: Human-readable error description
            details: Optional mapping of offending values
        """
        super().__init__(message)
        self.details = details

    def __str__(self) -> str:
        """Format error message with details if available."""
        message = super().__str__()
        if self.details:
            rendered = ", ".join(f"{k}={v!r}" for k, v in self.details.items())
            return f"{message} ({_truncate(rendered)})"
        return message


class DomainError(QPDTError, ValueError):
    """Argument outside the mathematical domain of an operation.

    Raised for b = 0, mu below -1/2, Bessel arguments beyond the accuracy
    ceiling, excluded preset angles and the translation kernel at mu = -1/2.
    """

    exit_code = 2


class ParameterValidationError(QPDTError, ValueError):
    """Exception for model validation failures.

    Raised when user-supplied values do not satisfy the Pydantic models
    (QpdtParams, IntegrationConfig, SampledSignal).

    Attributes:
        validation_error: Optional original Pydantic ValidationError
    """

    exit_code = 2

    def __init__(
        self,
        message: str,
        validation_error: ValidationError | None = None
    ):
        """Initialize validation error with optional Pydantic error.

        Args:
            message: Human-readable error description
            validation_error: Optional Pydantic ValidationError with details
        """
        super().__init__(message)
        self.validation_error = validation_error

    def __str__(self) -> str:
        """Format error message with validation details if available."""
        message = super().__str__()
        if self.validation_error is not None:
            error_details = _truncate(str(self.validation_error))
            return f"{message}\nValidation details: {error_details}"
        return message


class ResourceError(QPDTError):
    """Quadrature node budget exceeded."""

    exit_code = 2


class StepSizeError(QPDTError, ValueError):
    """Finite-difference step outside the supported range."""

    exit_code = 2


class SignalFileError(QPDTError):
    """Exception for signal file read/write failures.

    Covers missing files, malformed CSV rows, JSON documents that do not
    match the signal schema, and unwritable output paths.
    """

    exit_code = 3


class EvaluationError(QPDTError, ArithmeticError):
    """Integrand returned a non-finite value at a quadrature node."""


class TailBoundError(QPDTError, ArithmeticError):
    """Transform-side integrand has not decayed at the maximal half-width."""


class InterpolationError(QPDTError):
    """Sampled signal evaluated outside its tabulated domain."""


class ConvergenceError(QPDTError, ArithmeticError):
    """Gauss-Jacobi node computation failed.

    Signals a bug or an unsupported (order, alpha, beta) combination,
    not a user error.
    """
