"""Dunkl and quadratic-phase Dunkl kernels.

E_mu(i lambda, v) depends on lambda and v only through their product x, so the
array functions take x directly:

    E_mu(i lambda, v) = j_mu(x) + i x / (2 (mu+1)) j_{mu+1}(x),   x = lambda v.
"""

import cmath
import math

import numpy as np

from qpdt_cli.core.exceptions import DomainError
from qpdt_cli.core.models import QpdtParams
from qpdt_cli.numerics.specfun import W_MAX, normalized_bessel_array


def dunkl_kernel_array(mu: float | np.ndarray, x: float | np.ndarray) -> np.ndarray:
    """Vectorised E_mu(i lambda, v) as a function of x = lambda v."""
    x = np.asarray(x, dtype=float)
    mu = np.asarray(mu, dtype=float)
    even = normalized_bessel_array(mu, x)
    odd = x / (2.0 * (mu + 1.0)) * normalized_bessel_array(mu + 1.0, x)
    return even + 1j * odd


def dunkl_kernel(mu: float, lam: float, v: float) -> complex:
    """E_mu(i lambda, v) for real lambda and v with |lambda v| <= W_MAX.

    Raises:
        DomainError: If |lambda v| exceeds W_MAX or mu < -1/2
    """
    x = lam * v
    if abs(x) > W_MAX:
        raise DomainError(
            "Dunkl kernel argument exceeds W_MAX",
            details={"lambda": lam, "v": v, "W_MAX": W_MAX},
        )
    return complex(dunkl_kernel_array(mu, x))


def power_ib(b: float, mu: float) -> complex:
    """(ib)^{mu+1} on the branch arg(ib) = sgn(b) pi/2.

    With this branch power_ib(b, mu) * power_ib(-b, mu) = |b|^{2mu+2}, which is
    what makes the inverse transform exact for non-integer mu.
    """
    if b == 0:
        raise DomainError("power_ib requires b != 0")
    p = mu + 1.0
    return abs(b) ** p * cmath.exp(1j * math.copysign(1.0, b) * math.pi * p / 2.0)


def qpdt_kernel_values(
    params: QpdtParams, w: float | np.ndarray, v: float | np.ndarray
) -> np.ndarray:
    """Vectorised Psi(w, v) = exp(-i(a v^2 + c w^2 + d v + e w)) E_mu(-i w/b, v)."""
    w = np.asarray(w, dtype=float)
    v = np.asarray(v, dtype=float)
    phase = params.a * v * v + params.c * w * w + params.d * v + params.e * w
    return np.exp(-1j * phase) * dunkl_kernel_array(params.mu, -(w * v) / params.b)


def qpdt_kernel(params: QpdtParams, w: float, v: float) -> complex:
    """Quadratic-phase Dunkl kernel at one point, |w v / b| <= W_MAX.

    Raises:
        DomainError: If |w v / b| exceeds W_MAX
    """
    if abs(w * v / params.b) > W_MAX:
        raise DomainError(
            "kernel argument |w v / b| exceeds W_MAX",
            details={"w": w, "v": v, "b": params.b, "W_MAX": W_MAX},
        )
    return complex(qpdt_kernel_values(params, w, v))
