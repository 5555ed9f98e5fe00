"""Forward, inverse and factorized quadratic-phase Dunkl transforms.

Every transform value is one weighted quadrature

    D[f](w) = c_mu / (ib)^{mu+1} * int Psi(w, v) f(v) |v|^{2 mu + 1} dv

over [-L, L]. The signal is sampled once on the rule's nodes; output points are
independent and are evaluated through ``ordered_map`` into fixed slots.
"""

from typing import Sequence

import numpy as np

from qpdt_cli.core.exceptions import DomainError, EvaluationError, ParameterValidationError, TailBoundError
from qpdt_cli.core.models import (
    IntegrationConfig,
    QpdtParams,
    QuadratureRule,
    SampledSignal,
    Signal,
    build,
)
from qpdt_cli.log import get_logger
from qpdt_cli.numerics.parallel import ordered_map
from qpdt_cli.numerics.quadrature import (
    gauss_legendre_composite,
    integrate_values,
    oscillation_panels,
    symmetric_rule,
)
from qpdt_cli.numerics.specfun import ARRAY_ARG_MAX, c_mu, normalized_bessel_array
from qpdt_cli.transform.kernels import dunkl_kernel_array, power_ib, qpdt_kernel_values
from qpdt_cli.transform.presets import linear_canonical

logger = get_logger(__name__)

# Default output grid: 257 uniform points on [-8, 8].
DEFAULT_WGRID = np.linspace(-8.0, 8.0, 257)

# Truncation estimate of the transform-side tail, relative to sup |f|.
DECAY_TOL = 1e-8


def _as_grid(grid: Sequence[float] | np.ndarray) -> np.ndarray:
    arr = np.asarray(grid, dtype=float).ravel()
    if arr.size == 0:
        raise ParameterValidationError("evaluation grid is empty")
    if not np.all(np.isfinite(arr)):
        raise ParameterValidationError("evaluation grid must be finite")
    return arr


def _sample(f: Signal, nodes: np.ndarray) -> np.ndarray:
    values = np.asarray(f(nodes), dtype=complex)
    finite = np.isfinite(values)
    if not np.all(finite):
        k = int(np.argmin(finite))
        raise EvaluationError(
            "signal is not finite at a quadrature node",
            details={"node": float(nodes[k])},
        )
    return values


def _check_argument_range(outer_max: float, half_width: float, b: float) -> None:
    if outer_max * half_width / abs(b) > ARRAY_ARG_MAX:
        raise DomainError(
            "Bessel argument |w L / b| beyond the supported range",
            details={"w_max": outer_max, "L": half_width, "b": b, "limit": ARRAY_ARG_MAX},
        )


def chirp_panels(params: QpdtParams, half_width: float, outer_max: float) -> int:
    """Panel count resolving the integrand's phase on [-half_width, half_width].

    The integration-side phase a v^2 + d v + w v / b has derivative at most
    |w_max / b| + 2 |a| half_width + |d| there.
    """
    rate = abs(outer_max / params.b) + 2.0 * abs(params.a) * half_width + abs(params.d)
    return oscillation_panels(half_width, rate)


def signal_rule(
    params: QpdtParams, cfg: IntegrationConfig, wgrid: np.ndarray
) -> QuadratureRule:
    """Composite rule on [-L, L] resolving the kernel oscillation for every w in ``wgrid``."""
    w_max = float(np.max(np.abs(wgrid)))
    _check_argument_range(w_max, cfg.L, params.b)
    return symmetric_rule(cfg, cfg.L, chirp_panels(params, cfg.L, w_max))


def transform_side_rule(
    params: QpdtParams,
    cfg: IntegrationConfig,
    half_width: float | None = None,
    outer_max: float | None = None,
) -> QuadratureRule:
    """Composite rule on [-W, W] for integrating transform-side data.

    The kernel phase seen from the transform side is that of the adjoint
    tuple, so the oscillation bound uses (-c, -b, -a, -e, -d). ``outer_max``
    is the largest signal-side abscissa the integral is evaluated at.
    """
    half_width = cfg.w_limit if half_width is None else half_width
    outer_max = cfg.L if outer_max is None else outer_max
    adjoint = params.adjoint()
    _check_argument_range(outer_max, half_width, adjoint.b)
    return symmetric_rule(cfg, half_width, chirp_panels(adjoint, half_width, outer_max))


def _apply_kernel(
    params: QpdtParams,
    samples: np.ndarray,
    rule: QuadratureRule,
    grid: np.ndarray,
    threads: int,
) -> np.ndarray:
    prefactor = c_mu(params.mu) / power_ib(params.b, params.mu)

    def point(w: float) -> complex:
        integrand = qpdt_kernel_values(params, w, rule.nodes) * samples
        return prefactor * integrate_values(integrand, params.mu, rule)

    return np.asarray(ordered_map(point, grid, threads), dtype=complex)


def _apply_dunkl(
    mu: float,
    samples: np.ndarray,
    rule: QuadratureRule,
    lam: np.ndarray,
    threads: int,
) -> np.ndarray:
    cm = c_mu(mu)

    def point(x: float) -> complex:
        integrand = dunkl_kernel_array(mu, -x * rule.nodes) * samples
        return cm * integrate_values(integrand, mu, rule)

    return np.asarray(ordered_map(point, lam, threads), dtype=complex)


def forward(
    params: QpdtParams,
    f: Signal,
    wgrid: Sequence[float] | np.ndarray,
    cfg: IntegrationConfig,
) -> SampledSignal:
    """Quadratic-phase Dunkl transform of ``f`` on ``wgrid``.

    Args:
        params: Transform parameters (a, b, c, d, e, mu)
        f: Signal evaluable on arrays (TestFunction, interpolant, callable)
        wgrid: Strictly increasing output abscissae
        cfg: Integration settings; panels are raised to resolve the kernel phase

    Returns:
        SampledSignal on ``wgrid`` tagged with params.mu

    Raises:
        DomainError: If |w L / b| leaves the Bessel range
        EvaluationError: If f is non-finite at a node
    """
    w = _as_grid(wgrid)
    rule = signal_rule(params, cfg, w)
    samples = _sample(f, rule.nodes)
    values = _apply_kernel(params, samples, rule, w, cfg.threads)
    return build(SampledSignal, grid=w, values=values, mu=params.mu)


def transform_half_width(params: QpdtParams, f: Signal, cfg: IntegrationConfig) -> float:
    """Smallest transform-side half-width W at which D[f] has decayed.

    D[f] is evaluated at +-W for W on a ladder of step cfg.w_limit / 4 up to
    cfg.w_limit_max. The truncation estimate c_mu / |b|^{mu+1} |D[f](W)| W^{2mu+2}
    must fall below DECAY_TOL * sup |f| at two consecutive rungs; the lower
    rung is returned, never less than cfg.w_limit.

    Raises:
        TailBoundError: If no rung up to cfg.w_limit_max qualifies
    """
    step = 0.25 * cfg.w_limit
    top = min(cfg.w_limit_max, ARRAY_ARG_MAX * abs(params.b) / cfg.L)
    rungs = step * np.arange(1, max(int(top / step + 1e-9), 1) + 1)
    values = forward(params, f, np.concatenate([-rungs[::-1], rungs]), cfg).values
    count = rungs.size
    moduli = np.maximum(np.abs(values[:count][::-1]), np.abs(values[count:]))
    estimate = c_mu(params.mu) / abs(params.b) ** (params.mu + 1.0) * moduli * rungs ** (2.0 * params.mu + 2.0)
    f_max = float(np.max(np.abs(_sample(f, symmetric_rule(cfg, cfg.L).nodes))))
    decayed = estimate <= DECAY_TOL * f_max
    settled = decayed & np.append(decayed[1:], True)
    settled &= rungs >= min(cfg.w_limit, float(rungs[-1]))
    if not np.any(settled):
        raise TailBoundError(
            "transform has not decayed within the half-width ceiling",
            details={"half_width": float(rungs[-1]), "estimate": float(estimate[-1]), "sup_f": f_max},
        )
    half_width = float(rungs[int(np.argmax(settled))])
    logger.debug("transform-side half-width %g for %s", half_width, params.as_dict())
    return half_width


def tabulate_forward(
    params: QpdtParams,
    f: Signal,
    cfg: IntegrationConfig,
    outer_max: float | None = None,
) -> tuple[QuadratureRule, SampledSignal]:
    """D[f] tabulated on the nodes of a transform-side rule wide enough for inversion.

    Passing the returned rule to ``inverse`` integrates the samples as they
    are, with no interpolation step.
    """
    rule = transform_side_rule(params, cfg, transform_half_width(params, f, cfg), outer_max)
    return rule, forward(params, f, rule.nodes, cfg)


def dunkl_transform(
    mu: float,
    f: Signal,
    wgrid: Sequence[float] | np.ndarray,
    cfg: IntegrationConfig,
) -> SampledSignal:
    """Classical Dunkl transform c_mu int E_mu(-iw, v) f(v) |v|^{2mu+1} dv."""
    params = build(QpdtParams, mu=mu)
    w = _as_grid(wgrid)
    rule = signal_rule(params, cfg, w)
    samples = _sample(f, rule.nodes)
    values = _apply_dunkl(mu, samples, rule, w, cfg.threads)
    return build(SampledSignal, grid=w, values=values, mu=mu)


def forward_via_dunkl(
    params: QpdtParams,
    f: Signal,
    wgrid: Sequence[float] | np.ndarray,
    cfg: IntegrationConfig,
) -> SampledSignal:
    """The transform factored through the Dunkl transform.

    D[f](w) = (ib)^{-(mu+1)} exp(-i(c w^2 + e w)) D_mu[h](w / b),
    h(v) = exp(-i(a v^2 + d v)) f(v).

    Uses the same rule as ``forward`` so the two paths differ only in the
    order of floating-point operations.
    """
    w = _as_grid(wgrid)
    rule = signal_rule(params, cfg, w)
    v = rule.nodes
    h = np.exp(-1j * (params.a * v * v + params.d * v)) * _sample(f, v)
    inner = _apply_dunkl(params.mu, h, rule, w / params.b, cfg.threads)
    outer = np.exp(-1j * (params.c * w * w + params.e * w)) / power_ib(params.b, params.mu)
    return build(SampledSignal, grid=w, values=outer * inner, mu=params.mu)


def inverse(
    params: QpdtParams,
    F: SampledSignal,
    vgrid: Sequence[float] | np.ndarray,
    cfg: IntegrationConfig,
    rule: QuadratureRule | None = None,
) -> SampledSignal:
    """Inverse transform: the transform with tuple (-c, -b, -a, -e, -d, mu).

    f(v) = c_mu / (-ib)^{mu+1} int Psi'(v, w) F(w) |w|^{2mu+1} dw.

    When ``rule`` is given and F is tabulated exactly on its nodes the samples
    are used as they are; otherwise F is interpolated by a natural cubic
    spline. Without a rule, one is built over F's tabulated domain.

    Raises:
        InterpolationError: If the rule needs F outside its tabulated domain
    """
    v = _as_grid(vgrid)
    adjoint = params.adjoint()
    v_max = float(np.max(np.abs(v)))
    if rule is None:
        lo, hi = F.domain
        if lo == -hi:
            rule = transform_side_rule(params, cfg, hi, v_max)
        else:
            half_width = max(abs(lo), abs(hi))
            _check_argument_range(v_max, half_width, adjoint.b)
            panels = max(cfg.panels, chirp_panels(adjoint, half_width, v_max))
            rule = gauss_legendre_composite(cfg.model_copy(update={"panels": panels}), lo, hi)
    if F.grid.shape == rule.nodes.shape and np.array_equal(F.grid, rule.nodes):
        samples = F.values
    else:
        logger.debug("inverse: interpolating %d samples onto %d nodes", len(F), len(rule))
        samples = F.interpolant("raise")(rule.nodes)
    values = _apply_kernel(adjoint, samples, rule, v, cfg.threads)
    return build(SampledSignal, grid=v, values=values, mu=params.mu)


def scaling_check(
    params: QpdtParams,
    k: float,
    f: Signal,
    wgrid: Sequence[float] | np.ndarray,
    cfg: IntegrationConfig,
) -> float:
    """Max residual of D[f](k w) = k^{-(2mu+2)} D'[f_k](w).

    D' uses (a/k^2, b, c k^2, d/k, e k, mu) and f_k(v) = f(v / k). The right
    side integrates over [-kL, kL], the image of the left side's domain, so
    both sides see the same panels and matched nodes.
    """
    if not k > 0:
        raise DomainError("scaling factor must be positive", details={"k": k})
    w = _as_grid(wgrid)
    lhs = forward(params, f, k * w, cfg)

    def f_k(v: np.ndarray) -> np.ndarray:
        return f(np.asarray(v) / k)

    rhs = forward(params.scaled(k), f_k, w, cfg.model_copy(update={"L": cfg.L * k}))
    scale = k ** (-(2.0 * params.mu + 2.0))
    return float(np.max(np.abs(lhs.values - scale * rhs.values)))


def fourier_bessel(
    params: QpdtParams,
    f: Signal,
    wgrid: Sequence[float] | np.ndarray,
    cfg: IntegrationConfig,
) -> SampledSignal:
    """Quadratic-phase Fourier-Bessel transform.

    2 c_mu / (ib)^{mu+1} int_0^L exp(-i(a v^2 + c w^2 + d v + e w)) j_mu(w v / b) f_e(v) v^{2mu+1} dv

    with f_e(v) = (f(v) + f(-v)) / 2. For d = 0 this is the transform of f_e.
    """
    w = _as_grid(wgrid)
    full = signal_rule(params, cfg, w)
    half_panels = (len(full) // cfg.order) // 2
    rule = gauss_legendre_composite(cfg.model_copy(update={"panels": half_panels}), 0.0, cfg.L)
    v = rule.nodes
    even = 0.5 * (_sample(f, v) + _sample(f, -v))
    samples = even * np.exp(-1j * (params.a * v * v + params.d * v))
    prefactor = 2.0 * c_mu(params.mu) / power_ib(params.b, params.mu)

    def point(wk: float) -> complex:
        kernel = normalized_bessel_array(params.mu, wk * v / params.b)
        outer = np.exp(-1j * (params.c * wk * wk + params.e * wk))
        return prefactor * outer * integrate_values(kernel * samples, params.mu, rule)

    values = np.asarray(ordered_map(point, w, cfg.threads), dtype=complex)
    return build(SampledSignal, grid=w, values=values, mu=params.mu)


def linear_canonical_fourier_bessel(
    matrix: tuple[float, float, float, float],
    mu: float,
    f: Signal,
    wgrid: Sequence[float] | np.ndarray,
    cfg: IntegrationConfig,
) -> SampledSignal:
    """Linear canonical Fourier-Bessel transform for the unimodular [[A, B], [C, D]].

    ``fourier_bessel`` at the linear canonical tuple (d = e = 0), with kernel
    exp(i (A v^2 + D w^2) / (2B)) j_mu(w v / B).

    Raises:
        DomainError: If B == 0 or AD - BC != 1
    """
    return fourier_bessel(linear_canonical(*matrix, mu=mu).params, f, wgrid, cfg)
