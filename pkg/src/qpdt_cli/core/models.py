"""Pydantic models for transform parameters, quadrature rules, signals and reports."""

from typing import Any, Callable, Literal, TypeVar

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from qpdt_cli.core.exceptions import InterpolationError, ParameterValidationError

ModelT = TypeVar("ModelT", bound=BaseModel)

# Anything evaluable on an array of abscissae: TestFunction, spline interpolants, lambdas.
Signal = Callable[[np.ndarray], np.ndarray]


def build(model_cls: type[ModelT], **values: Any) -> ModelT:
    """Construct a model, re-raising pydantic failures as ParameterValidationError."""
    try:
        return model_cls(**values)
    except ValidationError as e:
        raise ParameterValidationError(
            f"Invalid {model_cls.__name__}", validation_error=e
        ) from e


class QpdtParams(BaseModel):
    """The five real phase parameters plus the multiplicity index.

    Identifies a transform instance D^{a,b,c}_{d,e,mu}.
    """
    model_config = ConfigDict(extra="forbid", frozen=True)

    a: float = Field(default=0.0, description="Chirp rate on the signal side")
    b: float = Field(default=1.0, description="Scale of the Dunkl kernel argument, non-zero")
    c: float = Field(default=0.0, description="Chirp rate on the transform side")
    d: float = Field(default=0.0, description="Linear phase on the signal side")
    e: float = Field(default=0.0, description="Linear phase on the transform side")
    mu: float = Field(default=0.0, ge=-0.5, description="Multiplicity index")

    @field_validator("a", "b", "c", "d", "e", "mu")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not np.isfinite(value):
            raise ValueError("parameters must be finite")
        return value

    @field_validator("b")
    @classmethod
    def _b_nonzero(cls, value: float) -> float:
        if value == 0:
            raise ValueError("b must be non-zero")
        return value

    def adjoint(self) -> "QpdtParams":
        """Tuple (-c, -b, -a, -e, -d, mu): inverse transform and kernel conjugate."""
        return QpdtParams(
            a=-self.c, b=-self.b, c=-self.a, d=-self.e, e=-self.d, mu=self.mu
        )

    def scaled(self, k: float) -> "QpdtParams":
        """Tuple (a/k^2, b, c k^2, d/k, e k, mu) appearing in the scaling identity."""
        return QpdtParams(
            a=self.a / k**2, b=self.b, c=self.c * k**2, d=self.d / k, e=self.e * k,
            mu=self.mu,
        )

    def as_dict(self) -> dict[str, float]:
        return self.model_dump()


class IntegrationConfig(BaseModel):
    """Truncation and resolution settings shared by every quadrature-driven operation."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    L: float = Field(default=12.0, gt=0, description="Signal-side truncation half-width")
    panels: int = Field(default=64, ge=1, description="Minimum composite panels")
    order: int = Field(default=10, ge=1, description="Gauss points per panel")
    tol: float = Field(default=1e-10, gt=0, description="Relative tail tolerance")
    w_limit: float = Field(default=16.0, gt=0, description="Initial transform-side half-width")
    w_limit_max: float = Field(default=64.0, gt=0, description="Transform-side half-width ceiling")
    jacobi_order: int = Field(default=32, ge=1, description="Gauss-Jacobi nodes per branch")
    threads: int = Field(default=1, ge=1, description="Worker threads for per-point evaluation")

    @classmethod
    def from_settings(cls, settings: Any, **overrides: Any) -> "IntegrationConfig":
        """Build from QPDTSettings, letting non-None overrides win."""
        values = {
            "L": settings.L,
            "panels": settings.panels,
            "order": settings.order,
            "tol": settings.tol,
            "w_limit": settings.w_limit,
            "w_limit_max": settings.w_limit_max,
            "jacobi_order": settings.jacobi_order,
            "threads": settings.threads,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return build(cls, **values)


def _as_float_array(value: Any) -> np.ndarray:
    arr = np.asarray(value, dtype=float)
    if arr.ndim != 1:
        raise ValueError("expected a one-dimensional array")
    return arr


def _strictly_increasing(arr: np.ndarray) -> bool:
    return bool(np.all(np.diff(arr) > 0))


class QuadratureRule(BaseModel):
    """Nodes and positive weights of a Gauss-type rule on [lo, hi]."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    nodes: np.ndarray
    weights: np.ndarray
    lo: float
    hi: float

    @field_validator("nodes", "weights", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> np.ndarray:
        return _as_float_array(value)

    @model_validator(mode="after")
    def _check(self) -> "QuadratureRule":
        if self.lo >= self.hi:
            raise ValueError("domain must satisfy lo < hi")
        if self.nodes.shape != self.weights.shape or self.nodes.size == 0:
            raise ValueError("nodes and weights must be non-empty and of equal length")
        if not _strictly_increasing(self.nodes):
            raise ValueError("nodes must be strictly increasing")
        if self.nodes[0] <= self.lo or self.nodes[-1] >= self.hi:
            raise ValueError("nodes must lie inside (lo, hi)")
        if not np.all(self.weights > 0):
            raise ValueError("weights must be positive")
        return self

    def __len__(self) -> int:
        return int(self.nodes.size)


class SampledSignal(BaseModel):
    """Complex values tabulated on a strictly increasing real grid, tagged with mu.

    When the grid is the node set of a quadrature rule, ``weights`` carries
    that rule's weights so norms and inner products reuse it exactly.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    grid: np.ndarray
    values: np.ndarray
    mu: float = Field(ge=-0.5)
    weights: np.ndarray | None = None

    @field_validator("grid", mode="before")
    @classmethod
    def _coerce_grid(cls, value: Any) -> np.ndarray:
        return _as_float_array(value)

    @field_validator("values", mode="before")
    @classmethod
    def _coerce_values(cls, value: Any) -> np.ndarray:
        arr = np.asarray(value, dtype=complex)
        if arr.ndim != 1:
            raise ValueError("expected a one-dimensional array")
        return arr

    @field_validator("weights", mode="before")
    @classmethod
    def _coerce_weights(cls, value: Any) -> np.ndarray | None:
        return None if value is None else _as_float_array(value)

    @model_validator(mode="after")
    def _check(self) -> "SampledSignal":
        if self.grid.shape != self.values.shape:
            raise ValueError("grid and values must have equal length")
        if self.grid.size == 0:
            raise ValueError("signal must contain at least one sample")
        if not _strictly_increasing(self.grid):
            raise ValueError("grid must be strictly increasing")
        if not (np.all(np.isfinite(self.grid)) and np.all(np.isfinite(self.values))):
            raise ValueError("grid and values must be finite")
        if self.weights is not None and self.weights.shape != self.grid.shape:
            raise ValueError("weights must match the grid length")
        return self

    @classmethod
    def on_rule(cls, rule: QuadratureRule, values: np.ndarray, mu: float) -> "SampledSignal":
        """Samples taken at a rule's nodes, keeping the rule's weights."""
        return cls(grid=rule.nodes, values=values, mu=mu, weights=rule.weights)

    def __len__(self) -> int:
        return int(self.grid.size)

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.grid[0]), float(self.grid[-1])

    def interpolant(self, outside: Literal["raise", "zero"] = "raise") -> "SplineSignal":
        """Natural cubic spline through the samples.

        Args:
            outside: "raise" signals InterpolationError for abscissae outside
                the tabulated domain; "zero" extends the signal by zero.
        """
        if len(self) < 2:
            raise InterpolationError("at least two samples are needed to interpolate")
        return SplineSignal(self.grid, self.values, outside)


class SplineSignal:
    """Callable natural cubic spline over a tabulated domain.

    With ``outside="zero"`` the signal vanishes off the domain, which is then
    reported as ``support`` so quadratures can place panel edges on it.
    """

    def __init__(self, grid: np.ndarray, values: np.ndarray, outside: Literal["raise", "zero"]):
        from scipy.interpolate import CubicSpline

        self.domain = float(grid[0]), float(grid[-1])
        self.outside = outside
        self._re = CubicSpline(grid, values.real, bc_type="natural")
        self._im = CubicSpline(grid, values.imag, bc_type="natural")

    @property
    def support(self) -> tuple[float, float] | None:
        return self.domain if self.outside == "zero" else None

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        lo, hi = self.domain
        inside = (x >= lo) & (x <= hi)
        if self.outside == "raise" and not np.all(inside):
            bad = x[~inside]
            raise InterpolationError(
                "sampled signal evaluated outside its tabulated domain",
                details={"domain": (lo, hi), "first_offending": float(bad.flat[0])},
            )
        out = np.zeros(x.shape, dtype=complex)
        out[inside] = self._re(x[inside]) + 1j * self._im(x[inside])
        return out


class CaseResult(BaseModel):
    """One checked inequality or identity inside a verification suite."""
    model_config = ConfigDict(populate_by_name=True)

    name: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    measured: float
    bound: float
    tol: float
    passed: bool = Field(alias="pass")


class VerificationReport(BaseModel):
    """Structured pass/fail record for one suite run.

    Serialized with ``to_json`` into the documented schema
    {suite, seed, cases[], aggregate, runtime_seconds}.
    """
    model_config = ConfigDict(populate_by_name=True)

    suite: str
    seed: int
    cases: list[CaseResult] = Field(default_factory=list)
    aggregate: Literal["pass", "fail"]
    runtime_seconds: float = Field(ge=0)

    @model_validator(mode="after")
    def _aggregate_matches_cases(self) -> "VerificationReport":
        expected = "pass" if all(case.passed for case in self.cases) else "fail"
        if self.aggregate != expected:
            raise ValueError("aggregate must be 'pass' iff every case passes")
        return self

    @classmethod
    def from_cases(
        cls, suite: str, seed: int, cases: list[CaseResult], runtime_seconds: float
    ) -> "VerificationReport":
        aggregate = "pass" if all(case.passed for case in cases) else "fail"
        return cls(
            suite=suite,
            seed=seed,
            cases=cases,
            aggregate=aggregate,
            runtime_seconds=runtime_seconds,
        )

    @property
    def passed(self) -> bool:
        return self.aggregate == "pass"

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)
