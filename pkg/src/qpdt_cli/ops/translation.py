"""Dunkl and quadratic-phase Dunkl translation operators.

The Dunkl translation of f by w is

    tau_w f(v) = int f(kappa) W_mu(w, v, kappa) |kappa|^{2mu+1} dkappa,
    W_mu = 1/2 (1 - sigma_{w,v,kappa} + sigma_{kappa,w,v} + sigma_{kappa,v,w}) K_mu(|w|, |v|, |kappa|),

with K_mu supported on ||w| - |v|| < |kappa| < |w| + |v|. On each sign branch
of kappa the substitution kappa^2 = m + h t, m = w^2 + v^2, h = 2|w v|, maps
the support onto t in (-1, 1) and turns K_mu |kappa|^{2mu+1} dkappa into

    Gamma(mu+1) / (sqrt(pi) Gamma(mu+1/2)) (1 - t^2)^{mu - 1/2} dt,

a measure of unit mass integrated exactly by Gauss-Jacobi with
alpha = beta = mu - 1/2.

In the quadratic-phase translation the chirp e^{i(a kappa^2 + d kappa)} of the
measure cancels the kappa part of the kernel phase, leaving

    tau^{a,b,d}_w f(v) = exp(-i[a(w^2 + v^2) + d(w + v)]) tau_w f(v).
"""

import math
from functools import lru_cache
from typing import Sequence

import numpy as np

from qpdt_cli.core.exceptions import DomainError
from qpdt_cli.core.models import IntegrationConfig, QpdtParams, QuadratureRule, SampledSignal, Signal, build
from qpdt_cli.numerics.quadrature import gauss_jacobi
from qpdt_cli.numerics.specfun import gamma_fn

# Offsets below this are treated as zero (identity branch).
IDENTITY_EPS = 1e-12


def require_translation_mu(mu: float) -> None:
    if not mu > -0.5:
        raise DomainError("translation requires mu > -1/2", details={"mu": mu})


def _sigma(w, v, kappa):
    return (w * w + v * v - kappa * kappa) / (2.0 * (w * v))


def sigma(w: float, v: float, kappa: float) -> float:
    """(w^2 + v^2 - kappa^2) / (2 w v).

    Raises:
        DomainError: If w == 0 or v == 0
    """
    if w == 0 or v == 0:
        raise DomainError("sigma requires w != 0 and v != 0", details={"w": w, "v": v})
    return float(_sigma(w, v, kappa))


def _triangle_constant(mu: float) -> float:
    return 2.0 ** (1.0 - 2.0 * mu) * gamma_fn(mu + 1.0) / (math.sqrt(math.pi) * gamma_fn(mu + 0.5))


def triangle_kernel(mu: float, w: float, v: float, kappa: float) -> float:
    """K_mu(w, v, kappa) for positive arguments; zero outside |w - v| < kappa < w + v.

    Raises:
        DomainError: If mu <= -1/2 or any argument is not positive
    """
    require_translation_mu(mu)
    if not (w > 0 and v > 0 and kappa > 0):
        raise DomainError(
            "triangle kernel requires w, v, kappa > 0", details={"w": w, "v": v, "kappa": kappa}
        )
    if not abs(w - v) < kappa < w + v:
        return 0.0
    spread = ((w + v) ** 2 - kappa * kappa) * (kappa * kappa - (w - v) ** 2)
    return _triangle_constant(mu) * spread ** (mu - 0.5) / (w * v * kappa) ** (2.0 * mu)


def branch_weight(w, v, kappa):
    """1/2 (1 - sigma_{w,v,k} + sigma_{k,w,v} + sigma_{k,v,w}), grouped so swapping w and v is exact."""
    return 0.5 * ((1.0 - _sigma(w, v, kappa)) + (_sigma(kappa, w, v) + _sigma(kappa, v, w)))


def dunkl_translation_kernel(mu: float, w: float, v: float, kappa: float) -> float:
    """W_mu(w, v, kappa): symmetric in (w, v), compactly supported in kappa.

    The triangle factor K_mu is nonnegative but the branch weight is not, so
    W_mu is a signed kernel with unit mass and total variation at most 4.

    Raises:
        DomainError: If w == 0, v == 0 or mu <= -1/2
    """
    if w == 0 or v == 0:
        raise DomainError("translation kernel requires w != 0 and v != 0", details={"w": w, "v": v})
    if kappa == 0:
        return 0.0
    k = triangle_kernel(mu, abs(w), abs(v), abs(kappa))
    if k == 0.0:
        return 0.0
    return float(branch_weight(w, v, kappa)) * k


def jacobi_rule(mu: float, cfg: IntegrationConfig) -> QuadratureRule:
    """Gauss-Jacobi rule absorbing the (1 - t^2)^{mu - 1/2} endpoint factor."""
    require_translation_mu(mu)
    return gauss_jacobi(cfg.jacobi_order, mu - 0.5, mu - 0.5)


def measure_scale(mu: float) -> float:
    return gamma_fn(mu + 1.0) / (math.sqrt(math.pi) * gamma_fn(mu + 0.5))


def signal_support(f: Signal) -> tuple[float, float] | None:
    """The interval a signal vanishes outside of, when it declares one."""
    return getattr(f, "support", None)


@lru_cache(maxsize=64)
def _reference_rule(order: int, alpha: float, beta: float) -> QuadratureRule:
    return gauss_jacobi(order, alpha, beta)


def _branch_on_support(
    mu: float,
    f: Signal,
    w: float,
    vv: np.ndarray,
    sign: float,
    support: tuple[float, float],
    order: int,
) -> np.ndarray:
    """One sign branch of tau_w f at the rows ``vv`` for f vanishing off ``support``.

    The branch covers radii |kappa| in [lo, hi]; in t this is [t0, t1] inside
    [-1, 1]. Each row is integrated by Gauss-Jacobi on its own interval,
    absorbing (1 -+ t)^{mu - 1/2} only at the ends the interval shares with
    [-1, 1] and keeping the factor explicit at ends that cut through the
    interior. Rows whose interval is empty contribute exactly zero.
    """
    alpha = mu - 0.5
    s0, s1 = support
    lo, hi = (max(s0, 0.0), s1) if sign > 0 else (max(-s1, 0.0), -s0)
    total = np.zeros(vv.size, dtype=complex)
    if not hi > lo:
        return total
    m = w * w + vv * vv
    h = 2.0 * abs(w) * np.abs(vv)
    t0 = np.clip((lo * lo - m) / h, -1.0, 1.0)
    t1 = np.clip((hi * hi - m) / h, -1.0, 1.0)
    for touches_left in (False, True):
        for touches_right in (False, True):
            rows = (t1 > t0) & ((t0 <= -1.0) == touches_left) & ((t1 >= 1.0) == touches_right)
            if not np.any(rows):
                continue
            a_right = alpha if touches_right else 0.0
            a_left = alpha if touches_left else 0.0
            ref = _reference_rule(order, a_right, a_left)
            start = t0[rows][:, None]
            half = 0.5 * (t1[rows] - t0[rows])[:, None]
            t = start + half * (ref.nodes[None, :] + 1.0)
            weights = ref.weights[None, :] * half ** (1.0 + a_right + a_left)
            if not touches_right:
                weights = weights * (1.0 - t) ** alpha
            if not touches_left:
                weights = weights * (1.0 + t) ** alpha
            wv = vv[rows][:, None]
            kappa = sign * np.sqrt(np.maximum(m[rows][:, None] + h[rows][:, None] * t, 0.0))
            values = np.asarray(f(kappa.ravel()), dtype=complex).reshape(kappa.shape)
            total[rows] = np.sum(branch_weight(w, wv, kappa) * values * weights, axis=1)
    return total


def translate_values(
    mu: float,
    f: Signal,
    w: float,
    v: np.ndarray,
    rule: QuadratureRule,
) -> np.ndarray:
    """Dunkl translation tau_w f at the points ``v`` using a prepared Jacobi rule.

    tau_0 f = f and, by symmetry, tau_w f(0) = f(w). The plain translation
    is continuous at w = 0; the quadratic-phase phase factor applied by
    ``translate`` is not. When f declares a
    bounded ``support`` the integration range of each row is cut to the radii
    that meet it, so the result is exactly zero wherever the triangle
    condition rules the support out and the edges of f never fall inside a
    Gauss panel.
    """
    v = np.asarray(v, dtype=float)
    if abs(w) < IDENTITY_EPS:
        return np.asarray(f(v), dtype=complex)
    out = np.empty(v.shape, dtype=complex)
    at_origin = np.abs(v) < IDENTITY_EPS
    if np.any(at_origin):
        out[at_origin] = np.asarray(f(np.full(int(at_origin.sum()), w)), dtype=complex)
    rest = ~at_origin
    if not np.any(rest):
        return out
    support = signal_support(f)
    if support is not None:
        vv = v[rest]
        total = sum(_branch_on_support(mu, f, w, vv, sign, support, len(rule)) for sign in (1.0, -1.0))
        out[rest] = measure_scale(mu) * total
        return out
    vv = v[rest][:, None]
    t = rule.nodes[None, :]
    s = (w * w + vv * vv) + 2.0 * abs(w) * np.abs(vv) * t
    kappa = np.sqrt(s)
    total = np.zeros(vv.shape[0], dtype=complex)
    for sign in (1.0, -1.0):
        branch = sign * kappa
        values = np.asarray(f(branch.ravel()), dtype=complex).reshape(branch.shape)
        total += np.sum(branch_weight(w, vv, branch) * values * rule.weights[None, :], axis=1)
    out[rest] = measure_scale(mu) * total
    return out


def _phase(params: QpdtParams, w: float, v: np.ndarray) -> np.ndarray:
    return np.exp(-1j * (params.a * (w * w + v * v) + params.d * (w + v)))


def translate(
    params: QpdtParams,
    f: Signal,
    w: float,
    vgrid: Sequence[float] | np.ndarray,
    cfg: IntegrationConfig,
) -> SampledSignal:
    """Quadratic-phase Dunkl translation tau^{a,b,d}_w f sampled on ``vgrid``.

    |w| < IDENTITY_EPS returns f on vgrid unchanged. This is a deliberate
    identity case, not the limit of the general formula: for small non-zero
    w the phase exp(-i[a(w^2 + v^2) + d(w + v)]) applies in full, so when a
    or d is non-zero the result jumps at w = 0.

    Raises:
        DomainError: If mu <= -1/2
    """
    require_translation_mu(params.mu)
    v = np.asarray(vgrid, dtype=float).ravel()
    if abs(w) < IDENTITY_EPS:
        values = np.asarray(f(v), dtype=complex)
    else:
        rule = jacobi_rule(params.mu, cfg)
        values = _phase(params, w, v) * translate_values(params.mu, f, w, v, rule)
    return build(SampledSignal, grid=v, values=values, mu=params.mu)


def dunkl_translate(
    mu: float,
    f: Signal,
    v: float,
    wgrid: Sequence[float] | np.ndarray,
    cfg: IntegrationConfig,
) -> SampledSignal:
    """Plain Dunkl translation tau_{v,mu} f sampled on ``wgrid``."""
    require_translation_mu(mu)
    w = np.asarray(wgrid, dtype=float).ravel()
    values = translate_values(mu, f, v, w, jacobi_rule(mu, cfg))
    return build(SampledSignal, grid=w, values=values, mu=mu)
