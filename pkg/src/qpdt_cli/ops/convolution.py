"""Quadratic-phase Dunkl convolution.

    (f * g)(w) = int tau^{a,b,d}_w f(-v) g(v) e^{i(a v^2 + d v)} |v|^{2mu+1} dv
               = e^{-i(a w^2 + d w)} int tau_w f(-v) g(v) e^{2 i d v} |v|^{2mu+1} dv.

The product is commutative for d = 0 and associative for a = d = 0.
"""

from typing import Sequence

import numpy as np

from qpdt_cli.core.models import IntegrationConfig, QpdtParams, QuadratureRule, SampledSignal, Signal, build
from qpdt_cli.log import get_logger
from qpdt_cli.numerics.parallel import ordered_map
from qpdt_cli.numerics.quadrature import integrate_values, interval_rule, oscillation_panels, symmetric_rule
from qpdt_cli.ops.translation import jacobi_rule, require_translation_mu, signal_support, translate_values

logger = get_logger(__name__)


def outer_rule(params: QpdtParams, g: Signal, cfg: IntegrationConfig) -> QuadratureRule | None:
    """Rule for the v integral: [-L, L], or g's support clipped to it.

    Returns None when g's support misses [-L, L] entirely.
    """
    support = signal_support(g)
    if support is None:
        return symmetric_rule(cfg, cfg.L, oscillation_panels(cfg.L, 2.0 * abs(params.d)))
    lo, hi = max(support[0], -cfg.L), min(support[1], cfg.L)
    if not hi > lo:
        return None
    return interval_rule(cfg, lo, hi, oscillation_panels(0.5 * (hi - lo), 2.0 * abs(params.d)))


def convolve(
    params: QpdtParams,
    f: Signal,
    g: Signal,
    wgrid: Sequence[float] | np.ndarray,
    cfg: IntegrationConfig,
) -> SampledSignal:
    """Convolution f * g on ``wgrid``, integrating over [-L, L].

    A g with declared support is integrated over that support only, with
    panel edges on its ends. Nodes where g vanishes exactly are skipped.

    Raises:
        DomainError: If mu <= -1/2
    """
    require_translation_mu(params.mu)
    w = np.asarray(wgrid, dtype=float).ravel()
    rule = outer_rule(params, g, cfg)
    if rule is None:
        logger.debug("convolve: support of g misses [-%g, %g]", cfg.L, cfg.L)
        return build(SampledSignal, grid=w, values=np.zeros(w.size, dtype=complex), mu=params.mu)
    jacobi = jacobi_rule(params.mu, cfg)

    g_values = np.asarray(g(rule.nodes), dtype=complex)
    active = g_values != 0
    nodes = rule.nodes[active]
    weighted_g = g_values[active] * np.exp(2j * params.d * nodes)
    logger.debug("convolve: %d of %d nodes active, %d output points", nodes.size, len(rule), w.size)

    def point(wk: float) -> complex:
        if nodes.size == 0:
            return 0j
        integrand = np.zeros(len(rule), dtype=complex)
        integrand[active] = translate_values(params.mu, f, wk, -nodes, jacobi) * weighted_g
        phase = np.exp(-1j * (params.a * wk * wk + params.d * wk))
        return phase * integrate_values(integrand, params.mu, rule)

    values = np.asarray(ordered_map(point, w, cfg.threads), dtype=complex)
    return build(SampledSignal, grid=w, values=values, mu=params.mu)
