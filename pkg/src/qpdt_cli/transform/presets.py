"""Parameter presets for the classical transforms the QPDT contains.

Each preset returns the parameter tuple together with the constant
``postfactor`` such that ``postfactor * forward(params, f)`` is the named
transform in its usual normalization.

    dunkl                  a = c = d = e = 0, b = 1
    fourier                the dunkl tuple at mu = -1/2
    fresnel(tau)           a = c = -1/(2 tau), b = tau
    linear_canonical(A,B,C,D)  a = -A/(2B), b = B, c = -D/(2B), AD - BC = 1
    lct(A,B,C,D)           the linear_canonical tuple at mu = -1/2
    fractional_dunkl(theta)    a = c = -cot(theta)/2, b = sin(theta)
    fractional_fourier(theta)  fractional_dunkl geometry at mu = -1/2
    qpft(a,b,c,d,e)        mu = -1/2 with b -> 1/b
"""

import cmath
import math
from typing import Callable, Literal, Sequence

from pydantic import BaseModel, ConfigDict

from qpdt_cli.core.exceptions import DomainError
from qpdt_cli.core.models import QpdtParams, build
from qpdt_cli.transform.kernels import power_ib

PresetName = Literal[
    "dunkl",
    "fourier",
    "fresnel",
    "linear_canonical",
    "lct",
    "fractional_dunkl",
    "fractional_fourier",
    "qpft",
]

_DETERMINANT_TOL = 1e-12


class Preset(BaseModel):
    """A named parameter tuple and the constant that completes the named transform."""

    model_config = ConfigDict(frozen=True)

    name: str
    params: QpdtParams
    postfactor: complex

    def as_json_dict(self) -> dict:
        return {
            "name": self.name,
            **self.params.as_dict(),
            "postfactor": {"re": self.postfactor.real, "im": self.postfactor.imag},
        }


def _params(**values: float) -> QpdtParams:
    return build(QpdtParams, **values)


def _check_angle(theta: float) -> None:
    ratio = theta / math.pi
    if not math.isfinite(theta) or abs(ratio - round(ratio)) < 1e-12:
        raise DomainError("theta must not be an integer multiple of pi", details={"theta": theta})


def dunkl(mu: float = 0.0) -> Preset:
    """The classical Dunkl transform.

    The QPDT prefactor at this tuple is c_mu / i^{mu+1}, so the postfactor
    is i^{mu+1}.
    """
    return Preset(name="dunkl", params=_params(mu=mu), postfactor=power_ib(1.0, mu))


def fourier() -> Preset:
    """The unitary Fourier transform (2 pi)^{-1/2} int f(v) exp(-i w v) dv."""
    return Preset(name="fourier", params=_params(mu=-0.5), postfactor=power_ib(1.0, -0.5))


def fresnel(tau: float, mu: float = 0.0) -> Preset:
    """Dunkl-type Fresnel transform with kernel exp(i (w^2+v^2) / (2 tau)) E_mu(-iw/tau, v).

    Raises:
        DomainError: If tau == 0
    """
    if tau == 0 or not math.isfinite(tau):
        raise DomainError("fresnel preset requires a finite tau != 0", details={"tau": tau})
    a = -1.0 / (2.0 * tau)
    return Preset(name="fresnel", params=_params(a=a, b=tau, c=a, mu=mu), postfactor=1 + 0j)


def linear_canonical(A: float, B: float, C: float, D: float, mu: float = 0.0) -> Preset:
    """Linear canonical Dunkl transform for the unimodular matrix [[A, B], [C, D]].

    Kernel exp(i (A v^2 + D w^2) / (2B)) E_mu(-iw/B, v) with prefactor
    c_mu / (iB)^{mu+1}; C enters only through AD - BC = 1.

    Raises:
        DomainError: If B == 0 or AD - BC != 1
    """
    if B == 0:
        raise DomainError("linear canonical preset requires B != 0")
    det = A * D - B * C
    if abs(det - 1.0) > _DETERMINANT_TOL:
        raise DomainError("matrix must satisfy AD - BC = 1", details={"det": det})
    params = _params(a=-A / (2.0 * B), b=B, c=-D / (2.0 * B), mu=mu)
    return Preset(name="linear_canonical", params=params, postfactor=1 + 0j)


def lct(A: float, B: float, C: float, D: float) -> Preset:
    """Linear canonical transform (2 pi i B)^{-1/2} int exp(i (A v^2 - 2 v w + D w^2) / (2B)) f(v) dv.

    The linear canonical tuple at mu = -1/2. Its prefactor c_{-1/2} / (iB)^{1/2}
    is already the 1/sqrt(2 pi i B) amplification on the principal branch, so
    the postfactor is 1.

    Raises:
        DomainError: If B == 0 or AD - BC != 1
    """
    base = linear_canonical(A, B, C, D, mu=-0.5)
    return Preset(name="lct", params=base.params, postfactor=base.postfactor)


def fractional_dunkl(theta: float, mu: float = 0.0) -> Preset:
    """Fractional Dunkl transform of angle theta.

    The target normalization A_{mu,theta} = exp(i(mu+1)(sgn(sin theta) pi/2 - theta'))
    / (Gamma(mu+1) (2|sin theta|)^{mu+1}), theta' = theta mod 2 pi, makes
    the postfactor exp(i (mu+1) (sgn(sin theta) pi - theta')), which is unimodular.

    Raises:
        DomainError: If theta is an integer multiple of pi
    """
    _check_angle(theta)
    s = math.sin(theta)
    half_cot = -0.5 * math.cos(theta) / s
    reduced = math.fmod(theta, 2.0 * math.pi)
    if reduced < 0:
        reduced += 2.0 * math.pi
    postfactor = cmath.exp(1j * (mu + 1.0) * (math.copysign(math.pi, s) - reduced))
    params = _params(a=half_cot, b=s, c=half_cot, mu=mu)
    return Preset(name="fractional_dunkl", params=params, postfactor=postfactor)


def qpft(a: float, b: float, c: float, d: float, e: float) -> Preset:
    """Quadratic-phase Fourier transform (2 pi)^{-1/2} int exp(-i(a v^2 + c w^2 + b w v + d v + e w)) f dv.

    At mu = -1/2 the Dunkl kernel is exp(-i w v / b'), so b' = 1/b and the
    postfactor is (i b')^{1/2}.

    Raises:
        DomainError: If b == 0
    """
    if b == 0:
        raise DomainError("qpft preset requires b != 0")
    inverse_b = 1.0 / b
    params = _params(a=a, b=inverse_b, c=c, d=d, e=e, mu=-0.5)
    return Preset(name="qpft", params=params, postfactor=power_ib(inverse_b, -0.5))


def fractional_fourier(theta: float) -> Preset:
    """Fractional Fourier transform with kernel
    sqrt((1 - i cot theta) / (2 pi)) exp(i/2 (w^2+v^2) cot theta - i w v csc theta).

    Reached through ``qpft`` with a = c = -cot(theta)/2, b = csc(theta),
    amplified by sqrt(1 - i cot theta) on the principal branch.

    Raises:
        DomainError: If theta is an integer multiple of pi
    """
    _check_angle(theta)
    s = math.sin(theta)
    cot = math.cos(theta) / s
    base = qpft(-0.5 * cot, 1.0 / s, -0.5 * cot, 0.0, 0.0)
    postfactor = cmath.sqrt(1.0 - 1j * cot) * base.postfactor
    return Preset(name="fractional_fourier", params=base.params, postfactor=postfactor)


_ARITY: dict[str, int] = {
    "dunkl": 0,
    "fourier": 0,
    "fresnel": 1,
    "linear_canonical": 4,
    "lct": 4,
    "fractional_dunkl": 1,
    "fractional_fourier": 1,
    "qpft": 5,
}

_TAKES_MU = {"dunkl", "fresnel", "linear_canonical", "fractional_dunkl"}

_BUILDERS: dict[str, Callable[..., Preset]] = {
    "dunkl": dunkl,
    "fourier": fourier,
    "fresnel": fresnel,
    "linear_canonical": linear_canonical,
    "lct": lct,
    "fractional_dunkl": fractional_dunkl,
    "fractional_fourier": fractional_fourier,
    "qpft": qpft,
}


def preset(name: str, args: Sequence[float] = (), mu: float = 0.0) -> Preset:
    """Look up a preset by name (hyphens accepted) with its numeric arguments.

    Args:
        name: One of PresetName
        args: Positional numeric arguments (tau, theta, matrix entries, qpft tuple)
        mu: Multiplicity index for the presets defined for every mu

    Raises:
        DomainError: For unknown names, wrong arity or excluded values
    """
    key = name.strip().replace("-", "_")
    if key not in _BUILDERS:
        raise DomainError(f"Unknown preset '{name}'", details={"known": sorted(_BUILDERS)})
    if len(args) != _ARITY[key]:
        raise DomainError(
            f"preset '{key}' takes {_ARITY[key]} numeric arguments",
            details={"given": list(args)},
        )
    if key in _TAKES_MU:
        return _BUILDERS[key](*args, mu=mu)
    return _BUILDERS[key](*args)
