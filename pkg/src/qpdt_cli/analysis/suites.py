"""Seeded verification suites.

A suite is a function (rng, cfg) -> list[CaseResult]. ``run_suite`` wraps it
with timing and builds the VerificationReport; ``all`` runs every suite in
registry order with the same seed and prefixes case names with the suite.
"""

import math
import time
from typing import Callable

import numpy as np

from qpdt_cli.analysis import theorems
from qpdt_cli.core.exceptions import DomainError
from qpdt_cli.core.models import CaseResult, IntegrationConfig, QpdtParams, SampledSignal, VerificationReport
from qpdt_cli.log import get_logger
from qpdt_cli.numerics.quadrature import symmetric_rule
from qpdt_cli.numerics.specfun import gamma_fn
from qpdt_cli.ops.convolution import convolve
from qpdt_cli.ops.norms import lp_norm
from qpdt_cli.ops.translation import translate
from qpdt_cli.transform import presets
from qpdt_cli.transform.functions import TestFunction
from qpdt_cli.transform.kernels import dunkl_kernel_array, power_ib, qpdt_kernel_values
from qpdt_cli.transform.qpdt import (
    dunkl_transform,
    forward,
    forward_via_dunkl,
    fourier_bessel,
    inverse,
    scaling_check,
    signal_rule,
    tabulate_forward,
)

logger = get_logger(__name__)

Suite = Callable[[np.random.Generator, IntegrationConfig], list[CaseResult]]

GAUSSIAN = TestFunction(name="gaussian")
WGRID = np.linspace(-4.0, 4.0, 33)


def _case(
    name: str,
    measured: float,
    bound: float = 0.0,
    tol: float = 0.0,
    inputs: dict | None = None,
    passed: bool | None = None,
) -> CaseResult:
    if passed is None:
        passed = bool(measured <= bound + tol)
    return CaseResult(
        name=name, inputs=inputs or {}, measured=measured, bound=bound, tol=tol, passed=passed
    )


def _signed(rng: np.random.Generator, lo: float, hi: float) -> float:
    return float(rng.choice([-1.0, 1.0]) * rng.uniform(lo, hi))


def draw_params(
    rng: np.random.Generator,
    mu: float,
    chirp: float = 1.0,
    b_range: tuple[float, float] = (0.5, 2.0),
) -> QpdtParams:
    """Random tuple with |a|, |c|, |d|, |e| <= chirp and |b| in b_range."""
    a, c, d, e = rng.uniform(-chirp, chirp, size=4)
    return QpdtParams(a=a, b=_signed(rng, *b_range), c=c, d=d, e=e, mu=mu)


def _max_abs(x: np.ndarray) -> float:
    return float(np.max(np.abs(x)))


# ---- transform suites ----


def fixed_point_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    """Gaussian e^{-v^2/2} is a fixed point of the Dunkl transform for every mu."""
    target = np.exp(-0.5 * WGRID**2)
    cases = []
    for mu in (-0.5, 0.0, 1.0, 2.5):
        values = dunkl_transform(mu, GAUSSIAN, WGRID, cfg).values
        cases.append(_case(f"gaussian fixed point mu={mu}", _max_abs(values - target), tol=1e-6, inputs={"mu": mu}))
        refined = dunkl_transform(mu, GAUSSIAN, WGRID, cfg.model_copy(update={"panels": 4 * cfg.panels})).values
        cases.append(_case(f"refinement mu={mu}", _max_abs(values - refined), tol=1e-6, inputs={"mu": mu}))
    return cases


def two_path_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    """forward agrees with the factorization through the Dunkl transform."""
    functions = [GAUSSIAN, TestFunction(name="hermite_gaussian", shape=(1.0, 1.0))]
    cases = []
    for _ in range(5):
        params = draw_params(rng, float(rng.choice([0.0, 0.75, 2.0])))
        for f in functions:
            direct = forward(params, f, WGRID, cfg).values
            factored = forward_via_dunkl(params, f, WGRID, cfg).values
            cases.append(
                _case(f"two-path {f.label()}", _max_abs(direct - factored), tol=1e-8, inputs=params.as_dict())
            )
    return cases


def roundtrip_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    """inverse(forward(f)) recovers f on |v| <= 3.

    F is tabulated on the nodes of a transform-side rule whose half-width
    follows the transform's decay, so the inverse integrates the samples
    without interpolation. At mu = -1/2 the Dunkl tuple reduces the round
    trip to Fourier inversion.
    """
    vgrid = np.linspace(-3.0, 3.0, 25)
    target = GAUSSIAN(vgrid)
    cases = []
    for _ in range(5):
        params = draw_params(rng, float(rng.choice([0.0, 0.75, 2.0])))
        rule, F = tabulate_forward(params, GAUSSIAN, cfg, outer_max=3.0)
        recovered = inverse(params, F, vgrid, cfg, rule=rule).values
        cases.append(_case("roundtrip gaussian", _max_abs(recovered - target), tol=1e-5, inputs=params.as_dict()))
    params = presets.dunkl(-0.5).params
    rule, F = tabulate_forward(params, GAUSSIAN, cfg, outer_max=3.0)
    recovered = inverse(params, F, vgrid, cfg, rule=rule).values
    cases.append(_case("roundtrip fourier inversion", _max_abs(recovered - target), tol=1e-6, inputs=params.as_dict()))
    return cases


def plancherel_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    cases = [
        _case(
            "plancherel gaussian dunkl",
            theorems.plancherel_residual(presets.dunkl(0.0).params, GAUSSIAN, cfg),
            tol=1e-6,
        )
    ]
    chirped = TestFunction(name="chirped_gaussian", shape=(1.0, 0.8))
    params = QpdtParams(a=0.3, b=1.5, c=-0.4, d=0.2, e=-0.1, mu=0.75)
    cases.append(
        _case("plancherel chirped_gaussian", theorems.plancherel_residual(params, chirped, cfg), tol=1e-6, inputs=params.as_dict())
    )
    for _ in range(3):
        params = draw_params(rng, float(rng.uniform(0.0, 2.0)), chirp=0.3, b_range=(0.7, 1.5))
        cases.append(
            _case("plancherel gaussian", theorems.plancherel_residual(params, GAUSSIAN, cfg), tol=1e-6, inputs=params.as_dict())
        )
    return cases


def parseval_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    hermite = TestFunction(name="hermite_gaussian", shape=(1.0, 1.0))
    cases = [
        _case(
            "parseval gaussian dunkl",
            theorems.parseval_residual(presets.dunkl(0.0).params, GAUSSIAN, GAUSSIAN, cfg),
            tol=1e-6,
        )
    ]
    for _ in range(3):
        params = draw_params(rng, 1.0, chirp=0.3, b_range=(0.7, 1.5))
        cases.append(
            _case(
                "parseval hermite_gaussian:1 vs gaussian",
                theorems.parseval_residual(params, hermite, GAUSSIAN, cfg),
                tol=1e-6,
                inputs=params.as_dict(),
            )
        )
    return cases


def scaling_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    wgrid = np.linspace(-3.0, 3.0, 25)
    functions = [GAUSSIAN, TestFunction(name="chirped_gaussian", shape=(1.0, 0.3))]
    cases = [
        _case(
            "scaling k=2 dunkl gaussian",
            scaling_check(presets.dunkl(0.0).params, 2.0, GAUSSIAN, wgrid, cfg),
            tol=1e-7,
        )
    ]
    for index in range(3):
        params = draw_params(rng, float(rng.choice([0.0, 0.75, 2.0])), chirp=0.3, b_range=(0.7, 1.5))
        f = functions[index % 2]
        for k in (0.5, 2.0, 3.0):
            residual = scaling_check(params, k, f, wgrid, cfg)
            cases.append(_case(f"scaling k={k} {f.label()}", residual, tol=1e-6, inputs={"k": k, **params.as_dict()}))
    return cases


def kernel_bounds_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    """Kernel modulus bounds, branch consistency, conjugation and the Riemann-Lebesgue sup bound."""
    n = 100_000
    mu = rng.uniform(-0.5, 3.0, n)
    x = rng.uniform(-50.0, 50.0, n)
    dunkl_max = _max_abs(dunkl_kernel_array(mu, x))
    cases = [_case("dunkl kernel |E| <= 1", dunkl_max, bound=1.0, tol=1e-12, inputs={"samples": n})]

    a, c, d, e = (rng.uniform(-2.0, 2.0, n) for _ in range(4))
    b = rng.choice([-1.0, 1.0], n) * rng.uniform(0.2, 5.0, n)
    v = rng.uniform(-5.0, 5.0, n)
    w = rng.uniform(-50.0, 50.0, n) * b / np.where(v == 0, 1.0, v)
    w = np.clip(w, -1e3, 1e3)
    phase = a * v * v + c * w * w + d * v + e * w
    psi = np.exp(-1j * phase) * dunkl_kernel_array(mu, -(w * v) / b)
    cases.append(_case("qpdt kernel |Psi| <= 1", _max_abs(psi), bound=1.0, tol=1e-12, inputs={"samples": n}))

    worst_branch = 0.0
    worst_conj = 0.0
    for _ in range(200):
        params = draw_params(rng, float(rng.uniform(-0.5, 3.0)), chirp=1.0, b_range=(0.2, 5.0))
        p = params.mu + 1.0
        product = power_ib(params.b, params.mu) * power_ib(-params.b, params.mu)
        expected = abs(params.b) ** (2.0 * p)
        worst_branch = max(worst_branch, abs(product - expected) / expected)
        ws, vs = rng.uniform(-5.0, 5.0, 2)
        lhs = np.conj(qpdt_kernel_values(params, ws, vs))
        rhs = qpdt_kernel_values(params.adjoint(), vs, ws)
        worst_conj = max(worst_conj, float(abs(lhs - rhs)))
    cases.append(_case("power_ib branch consistency", worst_branch, tol=1e-12))
    cases.append(_case("kernel conjugation with swapped arguments", worst_conj, tol=1e-13))

    wgrid = np.linspace(-6.0, 6.0, 49)
    families = [
        GAUSSIAN,
        TestFunction(name="hermite_gaussian", shape=(1.0, 1.0)),
        TestFunction(name="chirped_gaussian", shape=(1.0, 0.5)),
        TestFunction(name="bump", shape=(0.5, 1.5)),
    ]
    slack_min = math.inf
    for index in range(20):
        params = draw_params(rng, float(rng.uniform(-0.5, 2.0)))
        f = families[index % len(families)]
        slack_min = min(slack_min, theorems.riemann_lebesgue_slack(params, f, wgrid, cfg))
    cases.append(_case("riemann-lebesgue slack", slack_min, bound=0.0, passed=slack_min >= 0.0, inputs={"cases": 20}))
    return cases


def reductions_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    """Presets reproduce the classical transforms they name."""
    wgrid = np.linspace(-4.0, 4.0, 17)
    f = TestFunction(name="hermite_gaussian", shape=(1.0, 1.0))
    cases = []

    def direct(params: QpdtParams, kernel: Callable[[float, np.ndarray], np.ndarray], weight_mu: float) -> np.ndarray:
        rule = signal_rule(params, cfg, wgrid)
        fv = f(rule.nodes) * np.abs(rule.nodes) ** (2.0 * weight_mu + 1.0) * rule.weights
        return np.array([np.sum(kernel(wk, rule.nodes) * fv) for wk in wgrid])

    qa, qb, qc, qd, qe = 0.3, 0.8, -0.2, 0.1, 0.4
    qp = presets.qpft(qa, qb, qc, qd, qe)
    qpft_direct = direct(
        qp.params,
        lambda wk, v: np.exp(-1j * (qa * v * v + qc * wk * wk + qb * wk * v + qd * v + qe * wk)) / math.sqrt(2.0 * math.pi),
        -0.5,
    )
    cases.append(
        _case("qpft preset", _max_abs(qp.postfactor * forward(qp.params, f, wgrid, cfg).values - qpft_direct), tol=1e-8)
    )

    four = presets.fourier()
    fourier_direct = direct(four.params, lambda wk, v: np.exp(-1j * wk * v) / math.sqrt(2.0 * math.pi), -0.5)
    cases.append(
        _case("fourier preset", _max_abs(four.postfactor * forward(four.params, f, wgrid, cfg).values - fourier_direct), tol=1e-8)
    )

    mu = 0.7
    fd = presets.fractional_dunkl(math.pi / 2.0, mu)
    modulus = np.abs(forward(fd.params, f, wgrid, cfg).values)
    dunkl_modulus = np.abs(dunkl_transform(mu, f, wgrid, cfg).values)
    cases.append(_case("fractional dunkl at pi/2", _max_abs(modulus - dunkl_modulus), tol=1e-8, inputs={"mu": mu}))
    cases.append(_case("fractional dunkl postfactor unimodular", abs(abs(fd.postfactor) - 1.0), tol=1e-14))

    dk = presets.dunkl(mu)
    completed = dk.postfactor * forward(dk.params, f, wgrid, cfg).values
    cases.append(
        _case("dunkl preset postfactor", _max_abs(completed - dunkl_transform(mu, f, wgrid, cfg).values), tol=1e-12)
    )

    tau = 0.7
    fr = presets.fresnel(tau, mu)
    normalization = 1.0 / (gamma_fn(mu + 1.0) * 2.0 ** (mu + 1.0) * power_ib(tau, mu))
    fresnel_direct = normalization * direct(
        fr.params,
        lambda wk, v: np.exp(0.5j * (wk * wk + v * v) / tau) * dunkl_kernel_array(mu, -wk * v / tau),
        mu,
    )
    cases.append(_case("fresnel preset", _max_abs(forward(fr.params, f, wgrid, cfg).values - fresnel_direct), tol=1e-10))
    lc = presets.linear_canonical(1.0, tau, 0.0, 1.0, mu)
    cases.append(
        _case(
            "linear canonical (1, tau, 0, 1) equals fresnel",
            max(abs(getattr(lc.params, k) - getattr(fr.params, k)) for k in "abcde"),
            tol=0.0,
        )
    )

    theta = 0.9
    frft = presets.fractional_fourier(theta)
    cot, csc = math.cos(theta) / math.sin(theta), 1.0 / math.sin(theta)
    amplitude = np.sqrt((1.0 - 1j * cot) / (2.0 * math.pi))
    frft_direct = direct(
        frft.params,
        lambda wk, v: amplitude * np.exp(0.5j * (wk * wk + v * v) * cot - 1j * wk * v * csc),
        -0.5,
    )
    frft_values = frft.postfactor * forward(frft.params, f, wgrid, cfg).values
    cases.append(_case("fractional fourier preset", _max_abs(frft_values - frft_direct), tol=1e-8))
    cases.append(
        _case("fractional fourier modulus", _max_abs(np.abs(frft_values) - np.abs(frft_direct)), tol=1e-8)
    )

    params = QpdtParams(a=0.2, b=1.1, c=-0.3, d=0.0, e=0.25, mu=1.0)
    g = TestFunction(name="bump", shape=(0.4, 2.0))

    def even_part(v: np.ndarray) -> np.ndarray:
        return 0.5 * (g(v) + g(-np.asarray(v)))

    bessel = fourier_bessel(params, g, wgrid, cfg).values
    cases.append(
        _case("fourier-bessel equals even part", _max_abs(bessel - forward(params, even_part, wgrid, cfg).values), tol=1e-8)
    )
    return cases


# ---- operator suites ----


def translation_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    cases = []
    vgrid = np.linspace(-4.0, 4.0, 41)
    params = QpdtParams(a=0.3, b=1.2, c=0.1, d=-0.2, e=0.0, mu=1.0)
    hermite = TestFunction(name="hermite_gaussian", shape=(1.0, 1.0))

    identity = translate(params, GAUSSIAN, 0.0, vgrid, cfg).values
    cases.append(_case("identity at w=0", _max_abs(identity - GAUSSIAN(vgrid)), tol=1e-12))

    worst = 0.0
    for _ in range(5):
        w, v = rng.uniform(-3.0, 3.0, 2)
        left = translate(params, hermite, w, [v], cfg).values[0]
        right = translate(params, hermite, v, [w], cfg).values[0]
        worst = max(worst, abs(left - right))
    cases.append(_case("symmetry", worst, tol=1e-6))

    rule = symmetric_rule(cfg, cfg.L)
    for p in (1.0, 2.0):
        for f in (GAUSSIAN, hermite):
            w = float(rng.uniform(0.5, 3.0))
            shifted = translate(params, f, w, rule.nodes, cfg)
            lhs = lp_norm(SampledSignal.on_rule(rule, shifted.values, params.mu), p)
            rhs = 4.0 * lp_norm(f, p, params.mu, cfg)
            cases.append(_case(f"norm bound p={p:g} {f.label()}", lhs, bound=rhs, tol=1e-6, inputs={"w": w}))

    for mu in (0.25, 1.0, 2.0):
        w = float(rng.uniform(0.5, 1.5))
        v = w + float(rng.uniform(0.3, 1.5))
        mass = theorems.triangle_mass(mu, w, v)
        cases.append(_case(f"triangle mass mu={mu}", abs(mass - 1.0), tol=1e-8, inputs={"w": w, "v": v}))
        signed_v = float(rng.choice([-1.0, 1.0])) * v
        total = theorems.translation_mass(mu, w, signed_v, cfg)
        cases.append(_case(f"translation variation <= 4 mu={mu}", total, bound=4.0, inputs={"w": w, "v": signed_v}))
        unit = theorems.signed_translation_mass(mu, w, signed_v, cfg)
        cases.append(_case(f"signed translation mass mu={mu}", abs(unit - 1.0), tol=1e-10, inputs={"w": w, "v": signed_v}))

    eigen = theorems.translation_eigen_residual(1.0, GAUSSIAN, 0.8, np.linspace(-3.0, 3.0, 13), cfg)
    cases.append(_case("dunkl eigenrelation", eigen, tol=1e-6))

    w = 1.3
    combo = translate(params, lambda x: 2.0 * GAUSSIAN(x) - 0.5j * hermite(x), w, vgrid, cfg).values
    parts = 2.0 * translate(params, GAUSSIAN, w, vgrid, cfg).values - 0.5j * translate(params, hermite, w, vgrid, cfg).values
    cases.append(_case("linearity", _max_abs(combo - parts), tol=1e-10))
    return cases


def _reach(f: TestFunction) -> float:
    lo, hi = f.support
    return max(abs(lo), abs(hi))


def convolution_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    """Commutativity (d = 0), associativity (a = d = 0), support and the zero product.

    Compactly supported f * g vanishes for |w| > R_f + R_g, so inner products
    are tabulated on that interval and extended by zero.
    """
    small = cfg.model_copy(update={"L": 8.0, "panels": 32, "order": 10, "jacobi_order": max(cfg.jacobi_order, 64)})
    wgrid = np.linspace(-2.0, 2.0, 9)
    bump_f = TestFunction(name="bump", shape=(0.0, 1.5))
    bump_g = TestFunction(name="bump", shape=(0.5, 1.0))
    cases = []

    params = QpdtParams(a=0.3, b=1.0, mu=1.0)
    for f, g in ((GAUSSIAN, bump_g), (bump_f, bump_g)):
        fg = convolve(params, f, g, wgrid, small).values
        gf = convolve(params, g, f, wgrid, small).values
        cases.append(
            _case(f"commutativity d=0 {f.label()} * {g.label()}", _max_abs(fg - gf), tol=1e-6, inputs=params.as_dict())
        )

    zero = TestFunction(name="zero")
    cases.append(_case("g = 0 gives 0", _max_abs(convolve(params, GAUSSIAN, zero, wgrid, small).values), tol=0.0))

    reach = _reach(bump_f) + _reach(bump_g)
    outside = np.array([-reach - 1.0, -reach - 0.25, reach + 0.25, reach + 1.0])
    spill = _max_abs(convolve(params, bump_f, bump_g, outside, small).values)
    cases.append(_case("convolution vanishes beyond R_f + R_g", spill, tol=1e-12, inputs={"reach": reach}))

    narrow = TestFunction(name="bump", shape=(1.0, 0.5))
    shift = 3.0
    excluded = np.concatenate([np.linspace(-1.4, 1.4, 15), [-6.0, -4.6, 4.6, 6.0]])
    leak = _max_abs(translate(params, narrow, shift, excluded, small).values)
    cases.append(_case("translate vanishes off the triangle", leak, tol=1e-12, inputs={"w": shift}))

    plain = QpdtParams(mu=1.0)
    h1 = TestFunction(name="bump", shape=(0.0, 1.0))
    h2 = TestFunction(name="bump", shape=(0.3, 0.8))
    h3 = TestFunction(name="bump", shape=(-0.2, 0.9))
    left_reach = _reach(h1) + _reach(h2)
    right_reach = _reach(h2) + _reach(h3)
    left_inner = convolve(plain, h1, h2, np.linspace(-left_reach, left_reach, 481), small).interpolant(outside="zero")
    right_inner = convolve(plain, h2, h3, np.linspace(-right_reach, right_reach, 481), small).interpolant(outside="zero")
    left = convolve(plain, left_inner, h3, wgrid, small).values
    right = convolve(plain, h1, right_inner, wgrid, small).values
    cases.append(_case("associativity a=d=0 bump triple", _max_abs(left - right), tol=1e-5))
    return cases


def young_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    small = cfg.model_copy(update={"L": 6.0, "panels": 24, "order": 8})
    params = draw_params(rng, 0.5, chirp=0.5)
    gaussians = (GAUSSIAN, TestFunction(name="gaussian", shape=(0.7,)))
    bumps = (TestFunction(name="bump", shape=(0.0, 1.5)), TestFunction(name="bump", shape=(0.5, 1.0)))
    cases = []
    for (p, q), (f, g) in (((1.0, 1.0), gaussians), ((1.0, 2.0), gaussians), ((2.0, 2.0), bumps)):
        cases.append(theorems.young_check(params, f, g, p, q, small))
    return cases


# ---- analysis suites ----


def heisenberg_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    cases = []
    for mu in (0.0, 1.0):
        expected = (mu + 1.0) ** 2 / (mu + 0.5) ** 2
        for b in (1.0, 2.0):
            result = theorems.heisenberg_ratio(QpdtParams(b=b, mu=mu), GAUSSIAN, cfg)
            rel = abs(result.ratio - expected) / expected
            cases.append(
                _case(f"gaussian ratio mu={mu} b={b}", rel, tol=1e-4, inputs={"mu": mu, "b": b, "ratio": result.ratio})
            )

    for _ in range(20):
        params = draw_params(rng, float(rng.uniform(0.0, 2.0)), chirp=0.3, b_range=(0.7, 1.3))
        family = rng.integers(0, 3)
        width = float(rng.uniform(0.8, 1.2))
        if family == 0:
            f = TestFunction(name="gaussian", shape=(width,))
        elif family == 1:
            f = TestFunction(name="hermite_gaussian", shape=(float(rng.integers(0, 2)), width))
        else:
            f = TestFunction(name="chirped_gaussian", shape=(width, float(rng.uniform(-0.3, 0.3))))
        result = theorems.heisenberg_ratio(params, f, cfg)
        cases.append(
            _case(
                f"ratio >= 1 {f.label()}",
                result.ratio,
                bound=1.0,
                tol=1e-9,
                inputs=params.as_dict(),
                passed=result.ratio >= 1.0 - 1e-9,
            )
        )
    return cases


def dunkl_operator_suite(rng: np.random.Generator, cfg: IntegrationConfig) -> list[CaseResult]:
    mu, lam = 1.0, 1.3
    points = np.linspace(0.1, 3.0, 12)

    def eigenfunction(v: np.ndarray) -> np.ndarray:
        return dunkl_kernel_array(mu, lam * np.asarray(v, dtype=float))

    def residual(h: float) -> float:
        return max(
            abs(theorems.dunkl_operator_apply(mu, eigenfunction, v, h) - 1j * lam * eigenfunction(v))
            for v in points
        )

    coarse, fine = residual(1e-3), residual(5e-4)
    cases = [
        _case("eigen-check h=1e-4", residual(1e-4), tol=1e-6, inputs={"mu": mu, "lambda": lam}),
        _case(
            "second-order convergence",
            coarse / fine,
            bound=4.0,
            passed=3.5 <= coarse / fine <= 4.5,
            inputs={"coarse": coarse, "fine": fine},
        ),
    ]
    identity = theorems.dunkl_operator_apply(0.0, lambda v: np.asarray(v, dtype=complex), 0.7)
    cases.append(_case("f(v) = v at mu=0 gives 2", abs(identity - 2.0), tol=1e-9))
    v = 0.9
    derivative = -v * math.exp(-0.5 * v * v)
    even = theorems.dunkl_operator_apply(2.0, GAUSSIAN, v)
    cases.append(_case("even function reduces to f'", abs(even - derivative), tol=1e-7))
    return cases


SUITES: dict[str, Suite] = {
    "fixed-point": fixed_point_suite,
    "two-path": two_path_suite,
    "roundtrip": roundtrip_suite,
    "parseval": parseval_suite,
    "plancherel": plancherel_suite,
    "kernel-bounds": kernel_bounds_suite,
    "scaling": scaling_suite,
    "reductions": reductions_suite,
    "translation": translation_suite,
    "convolution": convolution_suite,
    "young": young_suite,
    "heisenberg": heisenberg_suite,
    "dunkl-operator": dunkl_operator_suite,
}

SUITE_NAMES = (*SUITES, "all")


def run_suite(name: str, seed: int = 42, cfg: IntegrationConfig | None = None) -> VerificationReport:
    """Run one named suite, or every suite for ``all``.

    Raises:
        DomainError: If the suite name is unknown
    """
    cfg = cfg or IntegrationConfig()
    if name not in SUITE_NAMES:
        raise DomainError(f"Unknown suite '{name}'", details={"known": list(SUITE_NAMES)})
    start = time.perf_counter()
    if name == "all":
        cases = []
        for suite_name, suite in SUITES.items():
            cases.extend(_prefixed(suite_name, _timed(suite_name, suite, seed, cfg)))
    else:
        cases = _timed(name, SUITES[name], seed, cfg)
    report = VerificationReport.from_cases(name, seed, cases, time.perf_counter() - start)
    if not report.passed:
        failed = [case.name for case in report.cases if not case.passed]
        logger.warning("suite %s failed %d case(s): %s", name, len(failed), ", ".join(failed))
    return report


def _timed(name: str, suite: Suite, seed: int, cfg: IntegrationConfig) -> list[CaseResult]:
    start = time.perf_counter()
    cases = suite(np.random.default_rng(seed), cfg)
    logger.debug("suite %s: %d cases in %.2fs", name, len(cases), time.perf_counter() - start)
    return cases


def _prefixed(prefix: str, cases: list[CaseResult]) -> list[CaseResult]:
    return [case.model_copy(update={"name": f"{prefix}/{case.name}"}) for case in cases]
