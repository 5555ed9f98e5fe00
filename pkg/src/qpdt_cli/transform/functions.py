"""Named analytic test functions.

Every family decays super-polynomially, so each member is integrable and
square-integrable against |v|^{2 mu + 1} dv for all mu >= -1/2.

    gaussian:width               exp(-v^2 / (2 width^2))
    chirped_gaussian:width,rate  gaussian * exp(i rate v^2)
    hermite_gaussian:n,width     H_n(v / width) * gaussian
    bump:center,radius           exp(1 - 1/(1 - u^2)) for |u| < 1, u = (v-center)/radius
    zero                         0
"""

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import special

from qpdt_cli.core.exceptions import ParameterValidationError
from qpdt_cli.core.models import build

FunctionName = Literal["gaussian", "chirped_gaussian", "hermite_gaussian", "bump", "zero"]

DEFAULT_SHAPES: dict[str, tuple[float, ...]] = {
    "gaussian": (1.0,),
    "chirped_gaussian": (1.0, 0.5),
    "hermite_gaussian": (1.0, 1.0),
    "bump": (0.0, 1.0),
    "zero": (),
}


class TestFunction(BaseModel):
    """A named analytic function, evaluable at any real abscissa.

    ``dilation`` k evaluates f(v / k), the dilate used by the scaling identity.
    """

    __test__ = False  # keep pytest from collecting this as a test class

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: FunctionName
    shape: tuple[float, ...] = ()
    dilation: float = Field(default=1.0, gt=0)

    @model_validator(mode="after")
    def _check_shape(self) -> "TestFunction":
        defaults = DEFAULT_SHAPES[self.name]
        if len(self.shape) > len(defaults):
            raise ValueError(
                f"{self.name} takes at most {len(defaults)} shape parameters"
            )
        full = self.shape + defaults[len(self.shape):]
        if not all(np.isfinite(full)):
            raise ValueError("shape parameters must be finite")
        if self.name in ("gaussian", "chirped_gaussian") and full[0] <= 0:
            raise ValueError("width must be positive")
        if self.name == "hermite_gaussian":
            degree, width = full
            if degree < 0 or degree != int(degree):
                raise ValueError("Hermite degree must be a non-negative integer")
            if width <= 0:
                raise ValueError("width must be positive")
        if self.name == "bump" and full[1] <= 0:
            raise ValueError("bump radius must be positive")
        return self

    @property
    def parameters(self) -> tuple[float, ...]:
        """Shape parameters with defaults filled in."""
        defaults = DEFAULT_SHAPES[self.name]
        return self.shape + defaults[len(self.shape):]

    def dilated(self, k: float) -> "TestFunction":
        """The function v -> f(v / k)."""
        return self.model_copy(update={"dilation": self.dilation * k})

    @property
    def support(self) -> tuple[float, float] | None:
        """Closed interval outside which the function vanishes; None when unbounded."""
        if self.name != "bump":
            return None
        center, radius = self.parameters
        return self.dilation * (center - radius), self.dilation * (center + radius)

    def label(self) -> str:
        if not self.parameters:
            return self.name
        return f"{self.name}:" + ",".join(repr(p) for p in self.parameters)

    def __call__(self, v: np.ndarray | float) -> np.ndarray:
        v = np.asarray(v, dtype=float) / self.dilation
        p = self.parameters
        match self.name:
            case "gaussian":
                return np.exp(-0.5 * (v / p[0]) ** 2).astype(complex)
            case "chirped_gaussian":
                width, rate = p
                return np.exp(-0.5 * (v / width) ** 2 + 1j * rate * v * v)
            case "hermite_gaussian":
                degree, width = p
                u = v / width
                return (special.eval_hermite(int(degree), u) * np.exp(-0.5 * u * u)).astype(complex)
            case "bump":
                center, radius = p
                u = (v - center) / radius
                out = np.zeros(v.shape, dtype=complex)
                inside = np.abs(u) < 1.0
                out[inside] = np.exp(1.0 - 1.0 / (1.0 - u[inside] ** 2))
                return out
            case _:
                return np.zeros(v.shape, dtype=complex)


def parse(text: str) -> TestFunction:
    """Parse ``NAME`` or ``NAME:p1,p2`` into a TestFunction.

    Hyphens in the name are accepted in place of underscores.

    Example:
        >>> parse("gaussian:1.0")
        TestFunction(name='gaussian', shape=(1.0,), dilation=1.0)

    Raises:
        ParameterValidationError: If the name is unknown or the parameters are invalid
    """
    name, _, rest = text.strip().partition(":")
    name = name.strip().replace("-", "_")
    if name not in DEFAULT_SHAPES:
        known = ", ".join(sorted(DEFAULT_SHAPES))
        raise ParameterValidationError(f"Unknown test function '{name}' (known: {known})")
    try:
        shape = tuple(float(p) for p in rest.split(",") if p.strip()) if rest else ()
    except ValueError as e:
        raise ParameterValidationError(f"Invalid parameters for '{name}': {rest}") from e
    return build(TestFunction, name=name, shape=shape)
