"""Numerical functionals for the transform's theorems.

Each function computes the two sides of an identity or inequality and returns
the residual, ratio or a CaseResult; the suites decide pass or fail.

Transform-side integrals run over [-W, W] starting at ``cfg.w_limit`` and
doubling up to ``cfg.w_limit_max`` until the integrand at +-W is below
1e-2 * tol times the collected mass.
"""

import math
from typing import Callable, Sequence

import numpy as np
from pydantic import BaseModel

from qpdt_cli.core.exceptions import DomainError, StepSizeError, TailBoundError
from qpdt_cli.core.models import CaseResult, IntegrationConfig, QpdtParams, QuadratureRule, SampledSignal, Signal
from qpdt_cli.log import get_logger
from qpdt_cli.numerics.quadrature import gauss_jacobi, integrate_values, radial_weight, symmetric_rule
from qpdt_cli.numerics.specfun import c_mu
from qpdt_cli.ops.convolution import convolve
from qpdt_cli.ops.norms import lp_norm
from qpdt_cli.ops.translation import (
    branch_weight,
    jacobi_rule,
    measure_scale,
    require_translation_mu,
    translate_values,
    triangle_kernel,
)
from qpdt_cli.transform.kernels import dunkl_kernel_array
from qpdt_cli.transform.qpdt import dunkl_transform, forward, signal_rule, transform_side_rule

logger = get_logger(__name__)

STEP_MIN = 1e-6
STEP_MAX = 1e-2

Integrand = Callable[[list[np.ndarray], np.ndarray], np.ndarray]


class HeisenbergResult(BaseModel):
    """Both sides of the uncertainty inequality; the theorem asserts ratio >= 1."""

    lhs: float
    bound: float
    ratio: float
    signal_moment: float
    transform_moment: float
    norm_squared: float
    half_width: float


def _signal_side_rule(params: QpdtParams, cfg: IntegrationConfig) -> QuadratureRule:
    # Same resolution the forward transform uses for transform-side nodes.
    return signal_rule(params, cfg, np.array([cfg.w_limit]))


def _transform_side_integral(
    params: QpdtParams,
    signals: Sequence[Signal],
    integrand: Integrand,
    cfg: IntegrationConfig,
) -> tuple[complex, float]:
    """int integrand(F_1, ..., F_n)(w) |w|^{2mu+1} dw with adaptive half-width.

    Returns:
        The integral and the half-width that satisfied the tail check

    Raises:
        TailBoundError: If the integrand has not decayed at cfg.w_limit_max
    """
    mu = params.mu
    half_width = min(cfg.w_limit, cfg.w_limit_max)
    while True:
        rule = transform_side_rule(params, cfg, half_width, outer_max=0.0)
        edge = np.array([-half_width, half_width])
        samples = [forward(params, s, rule.nodes, cfg).values for s in signals]
        edges = [forward(params, s, edge, cfg).values for s in signals]
        values = integrand(samples, rule.nodes)
        total = integrate_values(values, mu, rule)
        mass = integrate_values(np.abs(values), mu, rule).real
        tail = float(np.max(np.abs(integrand(edges, edge)) * radial_weight(edge, mu)))
        if tail <= 1e-2 * cfg.tol * mass:
            return total, half_width
        if half_width >= cfg.w_limit_max:
            raise TailBoundError(
                "transform-side integrand has not decayed",
                details={"half_width": half_width, "tail": tail, "mass": mass},
            )
        logger.debug("tail %.3e too large at W=%g; doubling", tail, half_width)
        half_width = min(2.0 * half_width, cfg.w_limit_max)


def inner_product(f: Signal, g: Signal, mu: float, rule: QuadratureRule) -> complex:
    """<f, g>_mu = int f conj(g) |v|^{2mu+1} dv on the given rule."""
    fv = np.asarray(f(rule.nodes), dtype=complex)
    gv = np.asarray(g(rule.nodes), dtype=complex)
    return integrate_values(fv * np.conj(gv), mu, rule)


def parseval_residual(params: QpdtParams, f: Signal, g: Signal, cfg: IntegrationConfig) -> float:
    """|<f, g>_mu - <D f, D g>_mu|."""
    signal_side = inner_product(f, g, params.mu, _signal_side_rule(params, cfg))
    transform_side, _ = _transform_side_integral(
        params, [f, g], lambda s, w: s[0] * np.conj(s[1]), cfg
    )
    return abs(signal_side - transform_side)


def plancherel_residual(params: QpdtParams, f: Signal, cfg: IntegrationConfig) -> float:
    """| ||D f||^2 - ||f||^2 | / ||f||^2, defined as 0 for f = 0."""
    norm_sq = inner_product(f, f, params.mu, _signal_side_rule(params, cfg)).real
    if norm_sq == 0:
        return 0.0
    transform_sq, _ = _transform_side_integral(params, [f], lambda s, w: np.abs(s[0]) ** 2, cfg)
    return abs(transform_sq.real - norm_sq) / norm_sq


def heisenberg_ratio(params: QpdtParams, f: Signal, cfg: IntegrationConfig) -> HeisenbergResult:
    """Second-moment product against |b|^2 (mu + 1/2)^2 ||f||^4.

    At mu = -1/2 the bound vanishes and the ratio is reported as inf.

    Raises:
        DomainError: If f vanishes on the quadrature nodes
        TailBoundError: If the transform-side second moment does not converge
    """
    rule = _signal_side_rule(params, cfg)
    moduli_sq = np.abs(np.asarray(f(rule.nodes), dtype=complex)) ** 2
    norm_sq = integrate_values(moduli_sq, params.mu, rule).real
    if norm_sq == 0:
        raise DomainError("uncertainty ratio is undefined for the zero function")
    signal_moment = integrate_values(rule.nodes**2 * moduli_sq, params.mu, rule).real
    transform_moment, half_width = _transform_side_integral(
        params, [f], lambda s, w: w * w * np.abs(s[0]) ** 2, cfg
    )
    lhs = signal_moment * transform_moment.real
    bound = params.b**2 * (params.mu + 0.5) ** 2 * norm_sq**2
    ratio = math.inf if bound == 0 else lhs / bound
    return HeisenbergResult(
        lhs=lhs,
        bound=bound,
        ratio=ratio,
        signal_moment=signal_moment,
        transform_moment=transform_moment.real,
        norm_squared=norm_sq,
        half_width=half_width,
    )


def dunkl_operator_apply(mu: float, f: Signal, v: float, h: float = 1e-4) -> complex:
    """Lambda_mu f(v) = f'(v) + (2mu+1)/(2v) (f(v) - f(-v)), f' by central difference.

    Raises:
        StepSizeError: If h is outside (1e-6, 1e-2)
        DomainError: If v == 0 or mu < -1/2
    """
    if not STEP_MIN < h < STEP_MAX:
        raise StepSizeError(
            "finite-difference step outside the supported range",
            details={"h": h, "range": (STEP_MIN, STEP_MAX)},
        )
    if v == 0:
        raise DomainError("Dunkl operator is evaluated at v != 0")
    if not mu >= -0.5:
        raise DomainError("multiplicity index must satisfy mu >= -1/2", details={"mu": mu})
    values = np.asarray(f(np.array([v + h, v - h, v, -v])), dtype=complex)
    derivative = (values[0] - values[1]) / (2.0 * h)
    return complex(derivative + (2.0 * mu + 1.0) / (2.0 * v) * (values[2] - values[3]))


def young_exponent(p: float, q: float) -> float:
    """r with 1/r = 1/p + 1/q - 1.

    Raises:
        DomainError: If p or q < 1 or 1/p + 1/q < 1
    """
    if not (p >= 1 and q >= 1):
        raise DomainError("Young exponents must satisfy p, q >= 1", details={"p": p, "q": q})
    inv_r = 1.0 / p + 1.0 / q - 1.0
    if inv_r < -1e-15:
        raise DomainError("Young exponents must satisfy 1/p + 1/q >= 1", details={"p": p, "q": q})
    return math.inf if inv_r <= 0 else 1.0 / inv_r


def young_check(
    params: QpdtParams,
    f: Signal,
    g: Signal,
    p: float,
    q: float,
    cfg: IntegrationConfig,
    tol: float = 1e-6,
) -> CaseResult:
    """||f * g||_{mu,r} <= 4 ||f||_{mu,p} ||g||_{mu,q}, r from 1/r = 1/p + 1/q - 1.

    The convolution is tabulated on the nodes of the [-L, L] rule so its norm
    reuses that rule's weights.
    """
    r = young_exponent(p, q)
    rule = symmetric_rule(cfg, cfg.L)
    product = convolve(params, f, g, rule.nodes, cfg)
    tabulated = SampledSignal.on_rule(rule, product.values, params.mu)
    lhs = lp_norm(tabulated, r)
    rhs = 4.0 * lp_norm(f, p, params.mu, cfg) * lp_norm(g, q, params.mu, cfg)
    return CaseResult(
        name=f"young p={p:g} q={q:g} r={r:g}",
        inputs={"p": p, "q": q, "r": r, **params.as_dict()},
        measured=lhs,
        bound=rhs,
        tol=tol,
        passed=lhs <= rhs + tol,
    )


def riemann_lebesgue_slack(
    params: QpdtParams, f: Signal, wgrid: Sequence[float] | np.ndarray, cfg: IntegrationConfig
) -> float:
    """c_mu / |b|^{mu+1} ||f||_{mu,1} - sup_w |D f(w)|; non-negative when the bound holds."""
    bound = c_mu(params.mu) / abs(params.b) ** (params.mu + 1.0) * lp_norm(f, 1, params.mu, cfg)
    return bound - float(np.max(np.abs(forward(params, f, wgrid, cfg).values)))


def linearity_residual(
    params: QpdtParams,
    f: Signal,
    g: Signal,
    alpha: complex,
    beta: complex,
    wgrid: Sequence[float] | np.ndarray,
    cfg: IntegrationConfig,
) -> float:
    """max_w |D(alpha f + beta g) - alpha D f - beta D g|."""

    def combined(v: np.ndarray) -> np.ndarray:
        return alpha * np.asarray(f(v), dtype=complex) + beta * np.asarray(g(v), dtype=complex)

    lhs = forward(params, combined, wgrid, cfg).values
    rhs = alpha * forward(params, f, wgrid, cfg).values + beta * forward(params, g, wgrid, cfg).values
    return float(np.max(np.abs(lhs - rhs)))


def triangle_mass(mu: float, w: float, v: float, order: int = 32) -> float:
    """int K_mu(w, v, kappa) kappa^{2mu+1} dkappa over (|w - v|, w + v), expected 1.

    kappa is mapped linearly onto t in (-1, 1); the endpoint factors
    (1 -+ t)^{mu - 1/2} go into the Gauss-Jacobi weight and the rest of the
    integrand is evaluated through ``triangle_kernel`` itself.
    """
    lo, hi = abs(w - v), w + v
    mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
    rule = gauss_jacobi(order, mu - 0.5, mu - 0.5)
    total = 0.0
    for t, weight in zip(rule.nodes, rule.weights):
        kappa = mid + half * t
        singular = (1.0 - t * t) ** (mu - 0.5)
        total += weight * triangle_kernel(mu, w, v, kappa) * kappa ** (2.0 * mu + 1.0) * half / singular
    return float(total)


def translation_mass(mu: float, w: float, v: float, cfg: IntegrationConfig) -> float:
    """int |W_mu(w, v, kappa)| |kappa|^{2mu+1} dkappa, bounded by 4.

    Same branch substitution as the translation itself, with the branch
    weight replaced by its modulus.
    """
    require_translation_mu(mu)
    if w == 0 or v == 0:
        raise DomainError("translation mass requires w != 0 and v != 0", details={"w": w, "v": v})
    rule = jacobi_rule(mu, cfg)
    kappa = np.sqrt((w * w + v * v) + 2.0 * abs(w * v) * rule.nodes)
    total = sum(
        np.sum(np.abs(branch_weight(w, v, sign * kappa)) * rule.weights) for sign in (1.0, -1.0)
    )
    return float(measure_scale(mu) * total)


def signed_translation_mass(mu: float, w: float, v: float, cfg: IntegrationConfig) -> float:
    """int W_mu(w, v, kappa) |kappa|^{2mu+1} dkappa, i.e. tau_w 1 (v); expected 1."""

    def one(x: np.ndarray) -> np.ndarray:
        return np.ones(np.shape(x), dtype=complex)

    value = translate_values(mu, one, w, np.array([v]), jacobi_rule(mu, cfg))
    return float(value[0].real)


def translation_eigen_residual(
    mu: float, f: Signal, v: float, wgrid: Sequence[float] | np.ndarray, cfg: IntegrationConfig
) -> float:
    """max_w |D_mu(tau_v f)(w) - E_mu(iw, v) D_mu f(w)|."""
    jacobi = jacobi_rule(mu, cfg)

    def shifted(x: np.ndarray) -> np.ndarray:
        return translate_values(mu, f, v, np.asarray(x, dtype=float), jacobi)

    w = np.asarray(wgrid, dtype=float)
    lhs = dunkl_transform(mu, shifted, w, cfg).values
    rhs = dunkl_kernel_array(mu, w * v) * dunkl_transform(mu, f, w, cfg).values
    return float(np.max(np.abs(lhs - rhs)))
