"""Gauss rules and weighted integration against |v|^{2 mu + 1} dv.

Improper integrals over the real line are truncated to [-L, L]. The weight
|v|^{2 mu + 1} is folded into the integrand rather than the rule, so one rule
serves every mu; symmetric domains always use an even panel count so v = 0
is a panel boundary and the weight's kink never sits inside a panel.
"""

import math
from typing import Callable

import numpy as np
from scipy import special

from qpdt_cli.core.exceptions import ConvergenceError, EvaluationError, ResourceError
from qpdt_cli.core.models import IntegrationConfig, QuadratureRule
from qpdt_cli.log import get_logger

logger = get_logger(__name__)

NODE_BUDGET = 1_000_000

Integrand = Callable[[np.ndarray], np.ndarray]


def _check_budget(panels: int, order: int) -> None:
    if panels * order > NODE_BUDGET:
        raise ResourceError(
            "quadrature node budget exceeded",
            details={"panels": panels, "order": order, "budget": NODE_BUDGET},
        )


def gauss_legendre_composite(cfg: IntegrationConfig, lo: float, hi: float) -> QuadratureRule:
    """Composite Gauss-Legendre rule with ``cfg.panels`` equal panels on [lo, hi].

    Exact for polynomials of degree <= 2*order - 1 on each panel.

    Raises:
        ValueError: If lo >= hi
        ResourceError: If panels * order exceeds the node budget
    """
    if not lo < hi:
        raise ValueError(f"expected lo < hi, got [{lo}, {hi}]")
    _check_budget(cfg.panels, cfg.order)
    t, wt = special.roots_legendre(cfg.order)
    edges = np.linspace(lo, hi, cfg.panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * t[None, :]).ravel()
    weights = (half[:, None] * wt[None, :]).ravel()
    return QuadratureRule(nodes=nodes, weights=weights, lo=lo, hi=hi)


def interval_rule(cfg: IntegrationConfig, lo: float, hi: float, min_panels: int = 0) -> QuadratureRule:
    """Composite rule on [lo, hi] whose panels never straddle v = 0.

    max(cfg.panels, min_panels) panels are shared between the two sides of
    the origin in proportion to their lengths.
    """
    panels = max(cfg.panels, min_panels)
    if not lo < 0.0 < hi:
        return gauss_legendre_composite(cfg.model_copy(update={"panels": panels}), lo, hi)
    left = max(1, round(panels * -lo / (hi - lo)))
    right = max(1, panels - left)
    pieces = [
        gauss_legendre_composite(cfg.model_copy(update={"panels": left}), lo, 0.0),
        gauss_legendre_composite(cfg.model_copy(update={"panels": right}), 0.0, hi),
    ]
    return QuadratureRule(
        nodes=np.concatenate([p.nodes for p in pieces]),
        weights=np.concatenate([p.weights for p in pieces]),
        lo=lo,
        hi=hi,
    )


def gauss_jacobi(order: int, alpha: float, beta: float) -> QuadratureRule:
    """Gauss-Jacobi rule on (-1, 1) for the weight (1-t)^alpha (1+t)^beta.

    Raises:
        ValueError: If order < 1 or alpha, beta <= -1
        ConvergenceError: If the node solve produces invalid nodes or weights
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if not (alpha > -1 and beta > -1):
        raise ValueError("alpha and beta must exceed -1")
    try:
        t, wt = special.roots_jacobi(order, alpha, beta)
    except (ValueError, np.linalg.LinAlgError) as e:
        raise ConvergenceError(
            "Gauss-Jacobi node solve failed",
            details={"order": order, "alpha": alpha, "beta": beta},
        ) from e
    t = np.asarray(t, dtype=float)
    wt = np.asarray(wt, dtype=float)
    if not (np.all(np.isfinite(t)) and np.all(np.isfinite(wt)) and np.all(wt > 0)):
        raise ConvergenceError(
            "Gauss-Jacobi node solve returned invalid values",
            details={"order": order, "alpha": alpha, "beta": beta},
        )
    return QuadratureRule(nodes=t, weights=wt, lo=-1.0, hi=1.0)


def compensated_sum(values: np.ndarray) -> complex:
    """Correctly rounded sum of a complex array, real and imaginary parts separately."""
    values = np.asarray(values)
    if np.iscomplexobj(values):
        return complex(math.fsum(values.real.tolist()), math.fsum(values.imag.tolist()))
    return complex(math.fsum(values.tolist()), 0.0)


def radial_weight(v: np.ndarray, mu: float) -> np.ndarray:
    """|v|^{2 mu + 1}, equal to 1 everywhere at mu = -1/2."""
    return np.abs(v) ** (2.0 * mu + 1.0)


def integrate_weighted(f: Integrand, mu: float, rule: QuadratureRule) -> complex:
    """Sum_k weights[k] f(nodes[k]) |nodes[k]|^{2 mu + 1}, in ascending node order.

    Raises:
        EvaluationError: If f is non-finite at any node
    """
    values = np.asarray(f(rule.nodes))
    return integrate_values(values, mu, rule)


def integrate_values(values: np.ndarray, mu: float, rule: QuadratureRule) -> complex:
    """Weighted quadrature of integrand values already sampled at the rule's nodes."""
    values = np.broadcast_to(np.asarray(values), rule.nodes.shape)
    finite = np.isfinite(values)
    if not np.all(finite):
        k = int(np.argmin(finite))
        raise EvaluationError(
            "integrand is not finite at a quadrature node",
            details={"node": float(rule.nodes[k]), "value": complex(values[k])},
        )
    return compensated_sum(rule.weights * values * radial_weight(rule.nodes, mu))


def oscillation_panels(half_width: float, phase_rate: float) -> int:
    """Panels needed so every oscillation of a phase with the given maximal
    derivative is covered by at least one panel on [-half_width, half_width]."""
    return int(math.ceil(half_width * phase_rate / math.pi))


def symmetric_rule(
    cfg: IntegrationConfig, half_width: float, min_panels: int = 0
) -> QuadratureRule:
    """Composite rule on [-half_width, half_width] with an even panel count."""
    panels = max(cfg.panels, min_panels)
    panels += panels % 2
    if panels != cfg.panels:
        logger.debug("raising panel count %d -> %d on [-%g, %g]", cfg.panels, panels, half_width, half_width)
    return gauss_legendre_composite(cfg.model_copy(update={"panels": panels}), -half_width, half_width)
