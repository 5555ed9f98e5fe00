"""Tests for translation, convolution and weighted norms."""

import math

import numpy as np
import pytest

from qpdt_cli.core.exceptions import DomainError
from qpdt_cli.core.models import IntegrationConfig, QpdtParams, SampledSignal
from qpdt_cli.numerics.quadrature import symmetric_rule
from qpdt_cli.numerics.specfun import gamma_fn
from qpdt_cli.ops.convolution import convolve, outer_rule
from qpdt_cli.ops.norms import lp_norm
from qpdt_cli.ops.translation import (
    dunkl_translate,
    dunkl_translation_kernel,
    sigma,
    translate,
    triangle_kernel,
)
from qpdt_cli.transform.functions import TestFunction


class TestKernels:
    def test_sigma(self):
        """sigma(w, v, kappa) = (w^2 + v^2 - kappa^2) / (2 w v)."""
        assert sigma(1.0, 2.0, 2.0) == pytest.approx(0.25)

    def test_sigma_zero_argument(self):
        """w = 0 or v = 0 is outside sigma's domain."""
        with pytest.raises(DomainError):
            sigma(0.0, 1.0, 1.0)

    def test_triangle_kernel_support(self):
        """K_mu vanishes outside |w - v| < kappa < w + v."""
        assert triangle_kernel(1.0, 1.0, 2.0, 0.5) == 0.0
        assert triangle_kernel(1.0, 1.0, 2.0, 3.5) == 0.0
        assert triangle_kernel(1.0, 1.0, 2.0, 2.0) > 0.0

    def test_triangle_kernel_requires_mu_above_minus_half(self):
        """The kernel is undefined at mu = -1/2."""
        with pytest.raises(DomainError):
            triangle_kernel(-0.5, 1.0, 1.0, 1.0)

    def test_translation_kernel_symmetric(self):
        """W_mu(w, v, kappa) = W_mu(v, w, kappa) exactly."""
        for w, v, kappa in [(1.0, 2.0, 1.5), (-0.7, 1.3, -1.1), (2.2, -0.4, 2.0)]:
            assert dunkl_translation_kernel(0.8, w, v, kappa) == dunkl_translation_kernel(0.8, v, w, kappa)

    def test_triangle_kernel_non_negative(self):
        """K_mu >= 0 on a grid of points."""
        grid = np.linspace(0.25, 2.0, 8)
        for w in grid:
            for v in grid:
                for kappa in np.linspace(0.1, 4.0, 14):
                    assert triangle_kernel(1.5, w, v, kappa) >= 0.0

    def test_translation_kernel_is_signed(self):
        """The branch weight makes W_mu negative on part of its support."""
        assert dunkl_translation_kernel(1.0, 1.0, 1.0, -0.5) < 0.0
        assert dunkl_translation_kernel(1.0, 1.0, 1.0, 0.5) > 0.0

    def test_translation_kernel_zero_argument(self):
        """w = 0 is the identity branch and has no kernel."""
        with pytest.raises(DomainError):
            dunkl_translation_kernel(1.0, 0.0, 1.0, 1.0)


class TestTranslate:
    def test_identity(self, gaussian, small_cfg):
        """tau_0 f = f bit for bit."""
        v = np.linspace(-3.0, 3.0, 13)
        params = QpdtParams(a=0.5, d=0.2, mu=1.0)
        assert np.array_equal(translate(params, gaussian, 0.0, v, small_cfg).values, gaussian(v))

    def test_value_at_origin(self, hermite, small_cfg):
        """tau_w f(0) carries the phase times f(w)."""
        params = QpdtParams(a=0.3, d=-0.2, mu=0.5)
        w = 1.2
        value = translate(params, hermite, w, [0.0], small_cfg).values[0]
        expected = np.exp(-1j * (params.a * w * w + params.d * w)) * hermite(np.array([w]))[0]
        assert value == pytest.approx(expected, abs=1e-15)

    def test_symmetric(self, hermite, small_cfg):
        """tau_w f(v) = tau_v f(w)."""
        params = QpdtParams(a=0.2, d=0.1, mu=1.0)
        left = translate(params, hermite, 0.9, [-1.6], small_cfg).values[0]
        right = translate(params, hermite, -1.6, [0.9], small_cfg).values[0]
        assert abs(left - right) < 1e-6

    def test_plain_translation_matches_quadratic_phase_at_zero_chirp(self, gaussian, small_cfg):
        """With a = d = 0 both translations agree exactly."""
        w = np.linspace(-2.0, 2.0, 9)
        plain = dunkl_translate(0.75, gaussian, 1.1, w, small_cfg).values
        phased = translate(QpdtParams(b=3.0, c=1.0, mu=0.75), gaussian, 1.1, w, small_cfg).values
        assert np.array_equal(plain, phased)

    def test_constant_is_preserved(self, small_cfg):
        """The translation of a constant is the same constant (unit mass)."""
        def one(x):
            return np.ones(np.shape(x), dtype=complex)

        values = dunkl_translate(1.0, one, 1.3, np.array([-2.0, 0.5, 1.7]), small_cfg).values
        assert np.max(np.abs(values - 1.0)) < 1e-12

    def test_rejects_minus_half(self, gaussian, small_cfg):
        """Translation requires mu > -1/2."""
        with pytest.raises(DomainError):
            translate(QpdtParams(mu=-0.5), gaussian, 1.0, [0.0], small_cfg)

    def test_bump_vanishes_off_triangle(self, small_cfg):
        """tau_w of a bump on [0.5, 1.5] is zero wherever ||w| - |v|| > 1.5."""
        bump = TestFunction(name="bump", shape=(1.0, 0.5))
        params = QpdtParams(a=0.3, d=-0.2, mu=1.0)
        excluded = np.concatenate([np.linspace(-1.4, 1.4, 15), [-6.0, -4.6, 4.6, 6.0]])
        values = translate(params, bump, 3.0, excluded, small_cfg).values
        assert np.max(np.abs(values)) <= 1e-12

    def test_bump_reaches_inside_triangle(self, small_cfg):
        """Where the triangle condition admits the support the translate is non-zero."""
        bump = TestFunction(name="bump", shape=(1.0, 0.5))
        values = dunkl_translate(1.0, bump, 3.0, np.array([-3.0, 2.5, 3.0, 3.5]), small_cfg).values
        assert np.all(np.abs(values) > 1e-6)

    @pytest.mark.parametrize("mu", [0.25, 1.0])
    def test_bump_translation_converges(self, mu, small_cfg):
        """Cutting the rule to the support gives order-independent values for a bump."""
        bump = TestFunction(name="bump", shape=(0.5, 1.0))
        v = np.array([-2.1, -0.4, 0.7, 1.9])
        coarse = dunkl_translate(mu, bump, 1.2, v, small_cfg.model_copy(update={"jacobi_order": 64})).values
        fine = dunkl_translate(mu, bump, 1.2, v, small_cfg.model_copy(update={"jacobi_order": 128})).values
        assert np.max(np.abs(coarse - fine)) < 1e-7

    def test_wide_support_matches_unbounded_rule(self, gaussian, small_cfg):
        """A support covering every radius reproduces the plain Jacobi rule."""

        class Supported:
            support = (-50.0, 50.0)

            def __call__(self, x):
                return gaussian(x)

        v = np.array([-1.5, 0.3, 2.0])
        plain = dunkl_translate(0.75, gaussian, 0.9, v, small_cfg).values
        supported = dunkl_translate(0.75, Supported(), 0.9, v, small_cfg).values
        assert np.max(np.abs(plain - supported)) < 1e-14

    def test_identity_jump_at_origin(self, gaussian, small_cfg):
        """w = 0 is exactly f, while small non-zero w carries the full phase."""
        params = QpdtParams(a=0.4, d=0.3, mu=1.0)
        v = np.array([1.0])
        at_zero = translate(params, gaussian, 0.0, v, small_cfg).values[0]
        near_zero = translate(params, gaussian, 1e-6, v, small_cfg).values[0]
        assert at_zero == gaussian(v)[0]
        assert near_zero == pytest.approx(np.exp(-1j * (params.a + params.d)) * gaussian(v)[0], abs=1e-5)


class TestConvolve:
    def test_zero_factor(self, gaussian, small_cfg):
        """f * 0 = 0."""
        values = convolve(QpdtParams(a=0.3, mu=1.0), gaussian, TestFunction(name="zero"), [-1.0, 0.0, 1.0], small_cfg).values
        assert not np.any(values)

    @pytest.mark.slow
    def test_commutative_without_linear_phase(self, gaussian, hermite, small_cfg):
        """For d = 0, f * g = g * f."""
        params = QpdtParams(a=0.3, b=1.0, mu=1.0)
        w = np.linspace(-2.0, 2.0, 5)
        fg = convolve(params, gaussian, hermite, w, small_cfg).values
        gf = convolve(params, hermite, gaussian, w, small_cfg).values
        assert np.max(np.abs(fg - gf)) < 1e-6

    def test_rejects_minus_half(self, gaussian, small_cfg):
        """Convolution requires mu > -1/2."""
        with pytest.raises(DomainError):
            convolve(QpdtParams(mu=-0.5), gaussian, gaussian, [0.0], small_cfg)

    def test_vanishes_beyond_support_sum(self, small_cfg):
        """Bumps reaching R_f and R_g have f * g = 0 for |w| > R_f + R_g."""
        f = TestFunction(name="bump", shape=(0.0, 1.5))
        g = TestFunction(name="bump", shape=(0.5, 1.0))
        w = np.array([-4.0, -3.25, 3.25, 4.0])
        assert np.max(np.abs(convolve(QpdtParams(a=0.3, mu=1.0), f, g, w, small_cfg).values)) <= 1e-12

    def test_support_outside_window(self, gaussian, small_cfg):
        """A g supported beyond [-L, L] gives zero."""
        g = TestFunction(name="bump", shape=(20.0, 1.0))
        assert not np.any(convolve(QpdtParams(mu=1.0), gaussian, g, [0.0, 1.0], small_cfg).values)

    def test_outer_rule_follows_support(self, gaussian, small_cfg):
        """The v rule spans g's support, split at the origin."""
        rule = outer_rule(QpdtParams(mu=1.0), TestFunction(name="bump", shape=(0.5, 1.0)), small_cfg)
        assert (rule.lo, rule.hi) == (-0.5, 1.5)
        assert np.all(rule.nodes != 0.0)
        assert outer_rule(QpdtParams(mu=1.0), gaussian, small_cfg).hi == small_cfg.L

    @pytest.mark.slow
    @pytest.mark.parametrize("pair", ["bumps", "gaussian-bump"])
    def test_commutative_with_bumps(self, pair, gaussian, small_cfg):
        """For d = 0, f * g = g * f within 1e-6 when bumps are involved."""
        cfg = small_cfg.model_copy(update={"jacobi_order": 64})
        g = TestFunction(name="bump", shape=(0.5, 1.0))
        f = TestFunction(name="bump", shape=(0.0, 1.5)) if pair == "bumps" else gaussian
        params = QpdtParams(a=0.3, b=1.0, mu=1.0)
        w = np.linspace(-2.0, 2.0, 9)
        fg = convolve(params, f, g, w, cfg).values
        gf = convolve(params, g, f, w, cfg).values
        assert np.max(np.abs(fg - gf)) < 1e-6

    @pytest.mark.slow
    def test_associative_on_bump_triple(self, small_cfg):
        """For a = d = 0, (f * g) * h = f * (g * h) within 1e-5."""
        cfg = small_cfg.model_copy(update={"jacobi_order": 64})
        params = QpdtParams(mu=1.0)
        f = TestFunction(name="bump", shape=(0.0, 1.0))
        g = TestFunction(name="bump", shape=(0.3, 0.8))
        h = TestFunction(name="bump", shape=(-0.2, 0.9))
        fg = convolve(params, f, g, np.linspace(-2.1, 2.1, 481), cfg).interpolant(outside="zero")
        gh = convolve(params, g, h, np.linspace(-2.2, 2.2, 481), cfg).interpolant(outside="zero")
        w = np.linspace(-1.5, 1.5, 7)
        left = convolve(params, fg, h, w, cfg).values
        right = convolve(params, f, gh, w, cfg).values
        assert np.max(np.abs(left - right)) < 1e-5


class TestNorms:
    @pytest.mark.parametrize("mu", [-0.5, 0.0, 1.5])
    def test_gaussian_two_norm(self, mu, gaussian, cfg):
        """||e^{-v^2/2}||_{mu,2}^2 = Gamma(mu+1)."""
        assert lp_norm(gaussian, 2, mu, cfg) ** 2 == pytest.approx(gamma_fn(mu + 1.0), rel=1e-12)

    def test_gaussian_one_norm(self, gaussian, cfg):
        """||e^{-v^2/2}||_{mu,1} = 2^{mu+1} Gamma(mu+1)."""
        mu = 0.5
        assert lp_norm(gaussian, 1, mu, cfg) == pytest.approx(2 ** (mu + 1) * gamma_fn(mu + 1), rel=1e-12)

    def test_sup_norm(self, gaussian, cfg):
        """p = inf is the largest modulus."""
        assert lp_norm(gaussian, math.inf, 0.0, cfg) == pytest.approx(1.0, abs=1e-3)

    def test_sampled_on_rule_matches_callable(self, hermite, cfg):
        """Sampled signals carrying rule weights give the callable result."""
        rule = symmetric_rule(cfg, cfg.L)
        sampled = SampledSignal.on_rule(rule, hermite(rule.nodes), 1.0)
        assert lp_norm(sampled, 2) == pytest.approx(lp_norm(hermite, 2, 1.0, cfg), rel=1e-14)

    def test_sampled_without_weights_uses_simpson(self, gaussian):
        """Plain grids are integrated with Simpson's rule."""
        grid = np.linspace(-10.0, 10.0, 2001)
        sampled = SampledSignal(grid=grid, values=gaussian(grid), mu=-0.5)
        assert lp_norm(sampled, 2) ** 2 == pytest.approx(math.sqrt(math.pi), rel=1e-8)

    def test_exponent_below_one(self, gaussian, cfg):
        """p < 1 is not a norm."""
        with pytest.raises(DomainError):
            lp_norm(gaussian, 0.5, 0.0, cfg)

    def test_callable_needs_mu(self, gaussian):
        """mu is required for callables."""
        with pytest.raises(DomainError):
            lp_norm(gaussian, 2)
