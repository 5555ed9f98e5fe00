"""QPDT configuration settings with environment variable support."""

import os

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


def _default_threads() -> int:
    return os.cpu_count() or 1


class QPDTSettings(BaseSettings):
    """Numerical defaults with layered loading from environment variables.

    Configuration is loaded from environment variables with QPDT_ prefix
    and an optional .env file. Every field has a default, so a bare
    ``QPDTSettings()`` is always usable; CLI flags override individual
    values after loading.

    Example:
        # Load from environment
        settings = QPDTSettings()

        # Override specific values
        settings = QPDTSettings(L=8.0, panels=32)

        # Environment variables:
        # QPDT_THREADS=4
        # QPDT_L=12
        # QPDT_PANELS=64
        # QPDT_ORDER=10
        # QPDT_W_LIMIT=16
        # QPDT_LOG_LEVEL=DEBUG
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="QPDT_",
        extra="ignore",
    )

    threads: int = Field(
        default_factory=_default_threads,
        ge=1,
        description="Upper bound on worker threads for per-point evaluation",
    )

    L: float = Field(
        default=12.0,
        gt=0,
        description="Signal-side truncation half-width",
    )

    panels: int = Field(
        default=64,
        ge=1,
        description="Minimum number of composite quadrature panels",
    )

    order: int = Field(
        default=10,
        ge=1,
        description="Gauss-Legendre points per panel",
    )

    tol: float = Field(
        default=1e-10,
        gt=0,
        description="Relative tail tolerance for transform-side integrals",
    )

    w_limit: float = Field(
        default=16.0,
        gt=0,
        description="Initial transform-side half-width",
    )

    w_limit_max: float = Field(
        default=64.0,
        gt=0,
        description="Ceiling for adaptive doubling of the transform-side half-width",
    )

    jacobi_order: int = Field(
        default=32,
        ge=1,
        description="Gauss-Jacobi nodes per branch of the translation integral",
    )

    log_level: str = Field(
        default="WARNING",
        description="Threshold for the qpdt_cli logger",
    )
