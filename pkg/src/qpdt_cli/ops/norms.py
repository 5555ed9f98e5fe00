"""Weighted L^p norms ||f||_{mu,p} = (int |f(v)|^p |v|^{2mu+1} dv)^{1/p}."""

import math

import numpy as np
from scipy import integrate

from qpdt_cli.core.exceptions import DomainError
from qpdt_cli.core.models import IntegrationConfig, SampledSignal, Signal
from qpdt_cli.numerics.quadrature import compensated_sum, integrate_values, radial_weight, symmetric_rule


def _check_p(p: float) -> None:
    if not p >= 1:
        raise DomainError("norm exponent must satisfy p >= 1", details={"p": p})


def _from_moduli(moduli: np.ndarray, p: float, total: float) -> float:
    if math.isinf(p):
        return float(np.max(moduli)) if moduli.size else 0.0
    return max(total, 0.0) ** (1.0 / p)


def lp_norm(
    f: Signal | SampledSignal,
    p: float,
    mu: float | None = None,
    cfg: IntegrationConfig | None = None,
) -> float:
    """Weighted L^p norm over [-L, L].

    Callables are integrated with the composite Gauss rule of ``cfg``. Sampled
    signals reuse their quadrature weights when they carry them and fall back
    to Simpson's rule on their grid otherwise. p = inf is the largest modulus
    over the evaluation points.

    Args:
        f: Callable signal or SampledSignal
        p: Exponent in [1, inf]
        mu: Multiplicity index; defaults to the signal's own for SampledSignal
        cfg: Integration settings for callables

    Raises:
        DomainError: If p < 1
    """
    _check_p(p)
    if isinstance(f, SampledSignal):
        mu = f.mu if mu is None else mu
        moduli = np.abs(f.values)
        if math.isinf(p):
            return _from_moduli(moduli, p, 0.0)
        integrand = moduli**p * radial_weight(f.grid, mu)
        if f.weights is not None:
            total = compensated_sum(f.weights * integrand).real
        elif len(f) >= 2:
            total = float(integrate.simpson(integrand, x=f.grid))
        else:
            total = 0.0
        return _from_moduli(moduli, p, total)

    if mu is None:
        raise DomainError("mu is required to take the norm of a callable signal")
    cfg = cfg or IntegrationConfig()
    rule = symmetric_rule(cfg, cfg.L)
    moduli = np.abs(np.asarray(f(rule.nodes), dtype=complex))
    if math.isinf(p):
        return _from_moduli(moduli, p, 0.0)
    total = integrate_values(moduli**p, mu, rule).real
    return _from_moduli(moduli, p, total)
