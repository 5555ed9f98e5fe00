"""Domain models and the error hierarchy."""

from qpdt_cli.core.exceptions import (
    ConvergenceError,
    DomainError,
    EvaluationError,
    InterpolationError,
    ParameterValidationError,
    QPDTError,
    ResourceError,
    SignalFileError,
    StepSizeError,
    TailBoundError,
)
from qpdt_cli.core.models import (
    CaseResult,
    IntegrationConfig,
    QpdtParams,
    QuadratureRule,
    SampledSignal,
    Signal,
    VerificationReport,
    build,
)

__all__ = [
    "CaseResult",
    "ConvergenceError",
    "DomainError",
    "EvaluationError",
    "IntegrationConfig",
    "InterpolationError",
    "ParameterValidationError",
    "QPDTError",
    "QpdtParams",
    "QuadratureRule",
    "ResourceError",
    "SampledSignal",
    "Signal",
    "SignalFileError",
    "StepSizeError",
    "TailBoundError",
    "VerificationReport",
    "build",
]
