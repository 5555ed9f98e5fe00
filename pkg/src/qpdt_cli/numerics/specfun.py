"""Scalar and vectorised special functions: gamma, normalized Bessel j_mu, c_mu.

The normalized spherical Bessel function is

    j_mu(w) = 2^mu Gamma(mu+1) J_mu(w) / w^mu
            = Gamma(mu+1) sum_n (-1)^n (w/2)^{2n} / (n! Gamma(n+mu+1)),

even in w with j_mu(0) = 1. Three evaluation paths exist:

- ``normalized_bessel_array``: vectorised production path. Small arguments use
  the term recurrence t_n = t_{n-1} (-w^2/4) / (n (n+mu)); larger ones go
  through scipy's Bessel function of the first kind.
- ``normalized_bessel``: scalar wrapper with the W_MAX contract.
- ``normalized_bessel_series``: the defining series summed in extended
  precision with mpmath, kept as an independent reference.
"""

import mpmath
import numpy as np
from scipy import special

from qpdt_cli.core.exceptions import DomainError

# Scalar operations and the reference series refuse |w| beyond this.
W_MAX = 60.0

# Vectorised path ceiling; scipy's Bessel evaluation stays accurate far beyond W_MAX.
ARRAY_ARG_MAX = 1.0e4

SERIES_MAX_TERMS = 250
SERIES_REL_TOL = 1e-17

# Working precision for the reference series: covers the ~26 digits lost to
# cancellation at |w| = W_MAX with room to spare.
_SERIES_DPS = 60

_SMALL_ARG = 1.0
_SMALL_TERMS = 24


def _check_mu(mu: float) -> None:
    if not mu >= -0.5:
        raise DomainError("multiplicity index must satisfy mu >= -1/2", details={"mu": mu})


def gamma_fn(x: float) -> float:
    """Gamma function for positive real arguments.

    Raises:
        DomainError: If x <= 0 or Gamma(x) overflows (x above about 171.6)
    """
    if not x > 0:
        raise DomainError("gamma_fn is only defined here for x > 0", details={"x": x})
    value = float(special.gamma(x))
    if not np.isfinite(value):
        raise DomainError("gamma function overflows", details={"x": x})
    return value


def c_mu(mu: float) -> float:
    """Normalization constant 1 / (2^{mu+1} Gamma(mu+1))."""
    _check_mu(mu)
    return 1.0 / (2.0 ** (mu + 1.0) * gamma_fn(mu + 1.0))


def _small_series(mu: np.ndarray, z: np.ndarray) -> np.ndarray:
    quarter = -0.25 * z * z
    term = np.ones_like(z)
    total = np.ones_like(z)
    for n in range(1, _SMALL_TERMS):
        term = term * quarter / (n * (n + mu))
        total = total + term
    return total


def normalized_bessel_array(mu: float | np.ndarray, w: float | np.ndarray) -> np.ndarray:
    """Vectorised j_mu(w); broadcasts mu against w.

    Raises:
        DomainError: If any mu < -1/2 or any |w| > ARRAY_ARG_MAX
    """
    mu_arr = np.asarray(mu, dtype=float)
    if np.any(mu_arr < -0.5):
        raise DomainError("multiplicity index must satisfy mu >= -1/2")
    z = np.abs(np.asarray(w, dtype=float))
    if np.any(z > ARRAY_ARG_MAX):
        raise DomainError(
            "Bessel argument beyond the supported range",
            details={"max_abs_arg": float(np.max(z)), "limit": ARRAY_ARG_MAX},
        )
    mu_arr, z = np.broadcast_arrays(mu_arr, z)
    out = np.empty(z.shape, dtype=float)

    small = z < _SMALL_ARG
    if np.any(small):
        out[small] = _small_series(mu_arr[small], z[small])

    large = ~small
    cosine = large & (mu_arr == -0.5)
    sinc = large & (mu_arr == 0.5)
    general = large & ~cosine & ~sinc
    if np.any(cosine):
        out[cosine] = np.cos(z[cosine])
    if np.any(sinc):
        out[sinc] = np.sin(z[sinc]) / z[sinc]
    if np.any(general):
        m = mu_arr[general]
        zz = z[general]
        scale = np.exp(special.gammaln(m + 1.0) + m * np.log(2.0 / zz))
        out[general] = scale * special.jv(m, zz)
    return out


def normalized_bessel(mu: float, w: float) -> float:
    """Scalar j_mu(w) for |w| <= W_MAX.

    Raises:
        DomainError: If mu < -1/2 or |w| > W_MAX
    """
    _check_mu(mu)
    if abs(w) > W_MAX:
        raise DomainError(
            "normalized_bessel argument exceeds W_MAX", details={"w": w, "W_MAX": W_MAX}
        )
    return float(normalized_bessel_array(mu, w))


def normalized_bessel_series(mu: float, w: float, max_terms: int = SERIES_MAX_TERMS) -> float:
    """Reference j_mu(w) from the defining power series.

    Terms are generated by their ratio recurrence in mpmath at extended
    precision and summed until |term| <= 1e-17 |partial sum| or
    ``max_terms`` terms have been taken. The series is independent of the
    scipy path and serves as an oracle.

    Raises:
        DomainError: If mu < -1/2 or |w| > W_MAX
    """
    _check_mu(mu)
    if abs(w) > W_MAX:
        raise DomainError(
            "series argument exceeds W_MAX", details={"w": w, "W_MAX": W_MAX}
        )
    with mpmath.workdps(_SERIES_DPS):
        m = mpmath.mpf(mu)
        ratio = -(mpmath.mpf(abs(w)) / 2) ** 2
        term = mpmath.mpf(1)
        terms = [term]
        partial = term
        for n in range(1, max_terms):
            term = term * ratio / (n * (n + m))
            terms.append(term)
            partial += term
            if abs(term) <= SERIES_REL_TOL * abs(partial):
                break
        return float(mpmath.fsum(terms))
