"""Tests for the forward and inverse transforms."""

import numpy as np
import pytest

from qpdt_cli.core.exceptions import DomainError, EvaluationError, InterpolationError, TailBoundError
from qpdt_cli.core.models import IntegrationConfig, QpdtParams, SampledSignal
from qpdt_cli.transform.functions import TestFunction
from qpdt_cli.transform.presets import dunkl, fourier, lct, linear_canonical
from qpdt_cli.transform.qpdt import (
    dunkl_transform,
    forward,
    forward_via_dunkl,
    fourier_bessel,
    inverse,
    linear_canonical_fourier_bessel,
    scaling_check,
    tabulate_forward,
    transform_half_width,
    transform_side_rule,
)

WGRID = np.linspace(-4.0, 4.0, 17)


class TestForward:
    @pytest.mark.parametrize("mu", [-0.5, 0.0, 1.0, 2.5])
    def test_gaussian_fixed_point(self, mu, gaussian, cfg):
        """The Dunkl transform maps e^{-v^2/2} to e^{-w^2/2}."""
        values = dunkl_transform(mu, gaussian, WGRID, cfg).values
        assert np.max(np.abs(values - np.exp(-0.5 * WGRID**2))) < 1e-6

    def test_preset_postfactor_completes_dunkl(self, gaussian, cfg):
        """postfactor * forward at the dunkl tuple is the Dunkl transform."""
        p = dunkl(0.5)
        completed = p.postfactor * forward(p.params, gaussian, WGRID, cfg).values
        assert np.max(np.abs(completed - dunkl_transform(0.5, gaussian, WGRID, cfg).values)) < 1e-12

    def test_fourier_of_gaussian(self, gaussian, cfg):
        """The fourier preset reproduces the unitary Fourier transform of a Gaussian."""
        p = fourier()
        values = p.postfactor * forward(p.params, gaussian, WGRID, cfg).values
        assert np.max(np.abs(values - np.exp(-0.5 * WGRID**2))) < 1e-10

    def test_lct_of_gaussian(self, gaussian, cfg):
        """The lct preset reproduces the closed-form linear canonical transform of a Gaussian."""
        A, B, C, D = 0.5, 1.2, -0.5, 0.8
        p = lct(A, B, C, D)
        values = p.postfactor * forward(p.params, gaussian, WGRID, cfg).values
        expected = (
            np.exp(1j * D * WGRID**2 / (2.0 * B))
            / np.sqrt(A + 1j * B)
            * np.exp(-((WGRID / B) ** 2) / (2.0 * (1.0 - 1j * A / B)))
        )
        assert np.max(np.abs(values - expected)) < 1e-8

    def test_two_paths_agree(self, hermite, cfg):
        """Direct quadrature and the Dunkl factorization agree."""
        params = QpdtParams(a=0.4, b=-1.3, c=0.2, d=-0.3, e=0.6, mu=0.75)
        direct = forward(params, hermite, WGRID, cfg).values
        factored = forward_via_dunkl(params, hermite, WGRID, cfg).values
        assert np.max(np.abs(direct - factored)) < 1e-8

    def test_zero_signal(self, cfg):
        """The transform of zero is zero."""
        values = forward(QpdtParams(a=0.2, b=2.0), TestFunction(name="zero"), WGRID, cfg).values
        assert not np.any(values)

    def test_linear(self, gaussian, hermite, cfg):
        """forward is linear in the signal."""
        params = QpdtParams(a=0.1, b=0.9, c=-0.2, d=0.3, e=0.0, mu=1.0)
        combined = forward(params, lambda v: 2.0 * gaussian(v) - 1j * hermite(v), WGRID, cfg).values
        parts = 2.0 * forward(params, gaussian, WGRID, cfg).values - 1j * forward(params, hermite, WGRID, cfg).values
        assert np.max(np.abs(combined - parts)) < 1e-12

    def test_non_finite_signal(self, cfg):
        """A signal that is NaN somewhere raises EvaluationError."""
        with pytest.raises(EvaluationError):
            forward(QpdtParams(), lambda v: np.where(np.abs(v) < 1.0, np.nan, 0.0), WGRID, cfg)

    def test_argument_ceiling(self, gaussian):
        """w_max L / |b| beyond the array ceiling is refused."""
        with pytest.raises(DomainError):
            forward(QpdtParams(b=1e-4), gaussian, WGRID, IntegrationConfig())

    def test_deterministic_across_threads(self, hermite):
        """Thread count does not change a single bit."""
        params = QpdtParams(a=0.3, b=1.1, mu=0.5)
        serial = forward(params, hermite, WGRID, IntegrationConfig(threads=1)).values
        threaded = forward(params, hermite, WGRID, IntegrationConfig(threads=4)).values
        assert np.array_equal(serial, threaded)


class TestInverse:
    def test_roundtrip_on_rule_nodes(self, gaussian, cfg):
        """inverse(forward(f)) recovers f when F is tabulated on the rule's nodes."""
        params = QpdtParams(a=0.3, b=1.2, c=-0.25, d=0.1, e=-0.2, mu=0.75)
        rule = transform_side_rule(params, cfg, cfg.w_limit, outer_max=3.0)
        F = forward(params, gaussian, rule.nodes, cfg)
        vgrid = np.linspace(-3.0, 3.0, 13)
        recovered = inverse(params, F, vgrid, cfg, rule=rule).values
        assert np.max(np.abs(recovered - gaussian(vgrid))) < 1e-5

    def test_roundtrip_negative_b_non_integer_mu(self, gaussian, cfg):
        """The branch choice keeps negative b exact for non-integer mu."""
        params = QpdtParams(b=-0.8, mu=0.3)
        rule = transform_side_rule(params, cfg, cfg.w_limit, outer_max=2.0)
        F = forward(params, gaussian, rule.nodes, cfg)
        vgrid = np.linspace(-2.0, 2.0, 9)
        recovered = inverse(params, F, vgrid, cfg, rule=rule).values
        assert np.max(np.abs(recovered - gaussian(vgrid))) < 1e-5

    def test_dense_samples_are_interpolated(self, gaussian, cfg):
        """Off-rule samples go through the spline path."""
        params = QpdtParams(mu=0.0)
        grid = np.linspace(-12.0, 12.0, 2401)
        F = forward(params, gaussian, grid, cfg)
        recovered = inverse(params, F, np.array([0.0, 1.0]), cfg).values
        assert np.max(np.abs(recovered - gaussian(np.array([0.0, 1.0])))) < 1e-6

    def test_rule_outside_samples_raises(self, cfg):
        """A rule wider than the tabulated F cannot be served."""
        F = SampledSignal(grid=np.linspace(-2.0, 2.0, 41), values=np.ones(41), mu=0.0)
        rule = transform_side_rule(QpdtParams(), cfg, 4.0, outer_max=1.0)
        with pytest.raises(InterpolationError):
            inverse(QpdtParams(), F, [0.0], cfg, rule=rule)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "params",
        [
            QpdtParams(a=-0.46, b=1.87, c=-0.92, d=-0.97, e=0.63, mu=2.0),
            QpdtParams(a=1.0, b=2.0, c=1.0, d=1.0, e=-1.0, mu=2.0),
            QpdtParams(a=-1.0, b=-0.5, c=0.8, d=-1.0, e=1.0, mu=0.75),
            QpdtParams(a=0.9, b=-2.0, c=-1.0, d=0.5, e=0.2, mu=0.0),
        ],
    )
    def test_roundtrip_across_parameter_box(self, params, gaussian, cfg):
        """Round trip stays within 1e-5 up to |a|, |c|, |d|, |e| = 1 and |b| in [0.5, 2]."""
        vgrid = np.linspace(-3.0, 3.0, 13)
        rule, F = tabulate_forward(params, gaussian, cfg, outer_max=3.0)
        recovered = inverse(params, F, vgrid, cfg, rule=rule).values
        assert np.max(np.abs(recovered - gaussian(vgrid))) < 1e-5

    def test_fourier_inversion_at_minus_half(self, gaussian, cfg):
        """At mu = -1/2 the Dunkl tuple round trip is Fourier inversion, within 1e-6."""
        params = dunkl(-0.5).params
        vgrid = np.linspace(-3.0, 3.0, 13)
        rule, F = tabulate_forward(params, gaussian, cfg, outer_max=3.0)
        recovered = inverse(params, F, vgrid, cfg, rule=rule).values
        assert np.max(np.abs(recovered - gaussian(vgrid))) < 1e-6


class TestHalfWidth:
    def test_narrow_transform_keeps_initial_width(self, gaussian, cfg):
        """A transform that has decayed by w_limit uses w_limit."""
        assert transform_half_width(QpdtParams(mu=0.5), gaussian, cfg) == cfg.w_limit

    def test_wide_transform_widens(self, gaussian, cfg):
        """|b| = 2 with strong chirp spreads the weighted transform beyond w_limit."""
        params = QpdtParams(a=1.0, b=2.0, c=1.0, d=1.0, e=1.0, mu=2.0)
        half_width = transform_half_width(params, gaussian, cfg)
        assert cfg.w_limit < half_width <= cfg.w_limit_max

    def test_ceiling_raises(self, gaussian):
        """Without room to widen, the undecayed tail is a TailBoundError."""
        cfg = IntegrationConfig(w_limit=16.0, w_limit_max=16.0)
        params = QpdtParams(a=1.0, b=2.0, c=1.0, d=1.0, e=1.0, mu=2.0)
        with pytest.raises(TailBoundError):
            transform_half_width(params, gaussian, cfg)

    def test_tabulation_lands_on_rule_nodes(self, gaussian, cfg):
        """tabulate_forward samples F exactly at the rule's nodes."""
        rule, F = tabulate_forward(QpdtParams(mu=0.0), gaussian, cfg, outer_max=1.0)
        assert np.array_equal(F.grid, rule.nodes)


class TestScalingAndBessel:
    @pytest.mark.parametrize("k", [0.5, 2.0])
    def test_scaling_identity(self, k, gaussian, cfg):
        """D[f](k w) = k^{-(2mu+2)} D'[f_k](w)."""
        params = QpdtParams(a=0.2, b=1.1, c=-0.1, d=0.15, e=0.05, mu=0.75)
        assert scaling_check(params, k, gaussian, np.linspace(-3.0, 3.0, 13), cfg) < 1e-6

    def test_scaling_rejects_non_positive_k(self, gaussian, cfg):
        """k must be positive."""
        with pytest.raises(DomainError):
            scaling_check(QpdtParams(), 0.0, gaussian, WGRID, cfg)

    def test_fourier_bessel_is_transform_of_even_part(self, hermite, cfg):
        """With d = 0 the Fourier-Bessel transform only sees the even part."""
        params = QpdtParams(a=0.2, b=1.1, c=-0.3, e=0.25, mu=1.0)
        f = TestFunction(name="bump", shape=(0.4, 2.0))

        def even(v):
            return 0.5 * (f(v) + f(-np.asarray(v)))

        bessel = fourier_bessel(params, f, WGRID, cfg).values
        assert np.max(np.abs(bessel - forward(params, even, WGRID, cfg).values)) < 1e-8

    def test_fourier_bessel_ignores_odd_functions(self, hermite, cfg):
        """An odd signal has a zero Fourier-Bessel transform."""
        values = fourier_bessel(QpdtParams(a=0.3, mu=0.5), hermite, WGRID, cfg).values
        assert not np.any(values)

    def test_linear_canonical_fourier_bessel_of_gaussian(self, gaussian, cfg):
        """On an even signal the linear canonical Fourier-Bessel transform is the linear canonical transform."""
        matrix = (0.5, 1.2, -0.5, 0.8)
        bessel = linear_canonical_fourier_bessel(matrix, 0.75, gaussian, WGRID, cfg).values
        params = linear_canonical(*matrix, mu=0.75).params
        assert np.max(np.abs(bessel - forward(params, gaussian, WGRID, cfg).values)) < 1e-8

    def test_linear_canonical_fourier_bessel_determinant(self, gaussian, cfg):
        """The matrix must be unimodular."""
        with pytest.raises(DomainError):
            linear_canonical_fourier_bessel((1.0, 1.0, 1.0, 1.0), 0.5, gaussian, WGRID, cfg)
