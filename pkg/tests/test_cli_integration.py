"""CliRunner integration tests for CLI commands."""

import json

import numpy as np
import pytest
from typer.testing import CliRunner

from qpdt_cli.__main__ import app
from qpdt_cli.cli import ops as cli_ops
from qpdt_cli.config.settings import QPDTSettings
from qpdt_cli.core.models import (
    CaseResult,
    IntegrationConfig,
    QpdtParams,
    SampledSignal,
    VerificationReport,
)
from qpdt_cli.io import read_signal, write_signal
from qpdt_cli.io.signal_file import format_csv
from qpdt_cli.ops.translation import translate
from qpdt_cli.transform.functions import TestFunction
from qpdt_cli.transform.presets import dunkl, fractional_dunkl
from qpdt_cli.transform.qpdt import forward

runner = CliRunner()


def test_version_command():
    """Test version command returns exit code 0 with version string."""
    result = runner.invoke(app, ["version"])

    assert result.exit_code == 0, f"Expected exit code 0, got {result.exit_code}"
    assert "qpdt-cli" in result.output
    assert "0.1.0" in result.output


def test_help_output():
    """Test help command lists every subcommand."""
    result = runner.invoke(app, ["--help"])

    assert result.exit_code == 0
    for command in ("transform", "translate", "convolve", "verify", "preset"):
        assert command in result.output, f"Expected '{command}' in help"


class TestPreset:
    def test_dunkl(self, clean_env):
        result = runner.invoke(app, ["preset", "--name", "dunkl", "--mu", "0.5"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["name"] == "dunkl"
        assert (data["a"], data["b"], data["c"], data["d"], data["e"], data["mu"]) == (0, 1, 0, 0, 0, 0.5)

    def test_fractional_dunkl_quarter_turn(self, clean_env):
        """theta = pi/2 is the Dunkl tuple with a unit postfactor modulus."""
        result = runner.invoke(
            app, ["preset", "--name", "fractional-dunkl", "--theta", str(np.pi / 2), "--mu", "1"]
        )

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["b"] == pytest.approx(1.0)
        assert data["a"] == pytest.approx(0.0, abs=1e-15)
        assert abs(complex(data["postfactor"]["re"], data["postfactor"]["im"])) == pytest.approx(1.0)

    def test_fresnel_zero_tau(self, clean_env):
        result = runner.invoke(app, ["preset", "--name", "fresnel", "--tau", "0"])
        assert result.exit_code == 2

    def test_fresnel_requires_tau(self, clean_env):
        result = runner.invoke(app, ["preset", "--name", "fresnel"])
        assert result.exit_code == 2

    def test_unknown_preset(self, clean_env):
        result = runner.invoke(app, ["preset", "--name", "laplace"])
        assert result.exit_code == 2


class TestTransform:
    def test_zero_b(self, clean_env):
        """b = 0 is rejected with the invalid-input code."""
        result = runner.invoke(app, ["transform", "--b", "0", "--fn", "gaussian"])
        assert result.exit_code == 2

    def test_fractional_dunkl_integer_angle(self, clean_env):
        result = runner.invoke(
            app, ["transform", "--preset", "fractional-dunkl", "--theta", "0", "--fn", "gaussian"]
        )
        assert result.exit_code == 2

    def test_needs_exactly_one_input(self, clean_env, tmp_path):
        result = runner.invoke(app, ["transform"])
        assert result.exit_code == 2

    def test_missing_input_file(self, clean_env, tmp_path):
        result = runner.invoke(app, ["transform", "--input", str(tmp_path / "absent.csv")])
        assert result.exit_code == 3

    def test_dunkl_gaussian_fixed_point(self, clean_env, tmp_path):
        """The Dunkl preset maps exp(-v^2/2) to exp(-w^2/2)."""
        out = tmp_path / "F.csv"
        result = runner.invoke(
            app,
            ["transform", "--preset", "dunkl", "--mu", "0.5", "--fn", "gaussian",
             "--wmin", "-3", "--wmax", "3", "--wpoints", "13", "-o", str(out)],
        )

        assert result.exit_code == 0, result.output
        signal = read_signal(out, mu=0.5)
        assert np.max(np.abs(signal.values - np.exp(-0.5 * signal.grid**2))) < 1e-8

    def test_stdout_matches_library(self, clean_env):
        """Command output is the library result, formatted exactly."""
        result = runner.invoke(
            app, ["transform", "--b", "1.5", "--a", "0.2", "--mu", "1", "--fn", "gaussian",
                  "--wmin", "-2", "--wmax", "2", "--wpoints", "5"],
        )

        assert result.exit_code == 0
        cfg = IntegrationConfig.from_settings(QPDTSettings())
        expected = forward(QpdtParams(a=0.2, b=1.5, mu=1.0), TestFunction(name="gaussian"),
                           np.linspace(-2.0, 2.0, 5), cfg)
        assert result.stdout == format_csv(expected)

    def test_preset_postfactor_applied(self, clean_env, tmp_path):
        """--preset output is the raw transform times the preset's postfactor."""
        out = tmp_path / "F.json"
        args = ["--mu", "1", "--fn", "gaussian", "--wmin", "-1", "--wmax", "1", "--wpoints", "3",
                "-o", str(out), "--format", "json"]
        assert runner.invoke(app, ["transform", "--preset", "dunkl", *args]).exit_code == 0
        with_postfactor = read_signal(out)
        assert runner.invoke(app, ["transform", *args]).exit_code == 0
        raw = read_signal(out)
        assert np.allclose(with_postfactor.values, dunkl(1.0).postfactor * raw.values, rtol=0, atol=1e-15)

    @pytest.mark.slow
    def test_inverse_recovers_gaussian(self, clean_env, tmp_path):
        """Forward to a file, then --inverse from that file."""
        forward_out = tmp_path / "F.csv"
        back_out = tmp_path / "f.csv"
        common = ["--a", "0.3", "--b", "1.2", "--c", "-0.2", "--d", "0.1", "--e", "0.4", "--mu", "0.5"]
        first = runner.invoke(
            app, ["transform", *common, "--fn", "gaussian", "--wmin", "-12", "--wmax", "12",
                  "--wpoints", "961", "-o", str(forward_out)],
        )
        assert first.exit_code == 0
        second = runner.invoke(
            app, ["transform", *common, "--inverse", "--input", str(forward_out),
                  "--wmin", "-2", "--wmax", "2", "--wpoints", "9", "-o", str(back_out)],
        )
        assert second.exit_code == 0
        recovered = read_signal(back_out)
        assert np.max(np.abs(recovered.values - np.exp(-0.5 * recovered.grid**2))) < 1e-4


class TestTranslateAndConvolve:
    def test_translate_zero_reproduces_file(self, clean_env, tmp_path):
        source = SampledSignal(grid=np.linspace(-2.0, 2.0, 9), values=np.linspace(0.0, 1.0, 9) + 0.5j, mu=0.5)
        path = write_signal(source, tmp_path / "f.csv")
        out = tmp_path / "g.csv"
        result = runner.invoke(
            app, ["translate", "--at", "0", "--mu", "0.5", "--input", str(path), "-o", str(out)]
        )

        assert result.exit_code == 0
        assert out.read_text() == path.read_text()

    def test_translate_rejects_minus_half(self, clean_env):
        result = runner.invoke(app, ["translate", "--at", "1", "--mu", "-0.5", "--fn", "gaussian"])
        assert result.exit_code == 2

    def test_translate_with_preset_and_quadrature_flags(self, clean_env, tmp_path, mocker):
        """--preset supplies a and d; --L, --panels and --order reach the integration settings."""
        spy = mocker.spy(cli_ops, "translate")
        out = tmp_path / "t.json"
        result = runner.invoke(
            app,
            ["translate", "--preset", "fractional-dunkl", "--theta", "1.0", "--mu", "0.5", "--fn", "gaussian",
             "--at", "0.5", "--wmin", "-1", "--wmax", "1", "--wpoints", "5",
             "--L", "6", "--panels", "16", "--order", "8", "-o", str(out), "--format", "json"],
        )

        assert result.exit_code == 0
        params, _, _, _, cfg = spy.call_args.args
        assert params == fractional_dunkl(1.0, mu=0.5).params
        assert (cfg.L, cfg.panels, cfg.order) == (6.0, 16, 8)
        written = read_signal(out)
        expected = translate(params, TestFunction(name="gaussian"), 0.5, np.linspace(-1.0, 1.0, 5), cfg)
        assert np.allclose(written.values, expected.values, rtol=0.0, atol=1e-14)

    def test_translate_preset_missing_argument(self, clean_env):
        result = runner.invoke(app, ["translate", "--preset", "fresnel", "--mu", "0.5", "--fn", "gaussian", "--at", "1"])
        assert result.exit_code == 2

    def test_convolve_with_zero(self, clean_env, tmp_path):
        out = tmp_path / "h.csv"
        result = runner.invoke(
            app,
            ["convolve", "--mu", "0.5", "--fn", "gaussian", "--gfn", "zero", "--wmin", "-1", "--wmax", "1",
             "--wpoints", "3", "--L", "4", "--panels", "8", "-o", str(out)],
        )

        assert result.exit_code == 0
        assert not np.any(read_signal(out).values)


class TestVerify:
    def _report(self, passed: bool) -> VerificationReport:
        case = CaseResult(name="case", measured=0.0, bound=0.0, tol=1e-9, passed=passed)
        return VerificationReport.from_cases("plancherel", 42, [case], 0.1)

    def test_unknown_suite(self, clean_env):
        result = runner.invoke(app, ["verify", "--suite", "nonexistent"])
        assert result.exit_code == 2

    def test_pass_writes_report(self, clean_env, tmp_path, mocker):
        run = mocker.patch("qpdt_cli.cli.verify.run_suite", return_value=self._report(True))
        report = tmp_path / "report.json"
        result = runner.invoke(app, ["verify", "--suite", "plancherel", "--seed", "7", "--report", str(report)])

        assert result.exit_code == 0
        assert run.call_args.args == ("plancherel",)
        assert run.call_args.kwargs["seed"] == 7
        data = json.loads(report.read_text())
        assert data["aggregate"] == "pass"
        assert data["cases"][0]["pass"] is True

    def test_failure_exits_one_and_still_writes(self, clean_env, tmp_path, mocker):
        mocker.patch("qpdt_cli.cli.verify.run_suite", return_value=self._report(False))
        report = tmp_path / "report.json"
        result = runner.invoke(app, ["verify", "--suite", "plancherel", "--report", str(report), "-q"])

        assert result.exit_code == 1
        assert json.loads(report.read_text())["aggregate"] == "fail"

    def test_dunkl_operator_suite(self, clean_env):
        result = runner.invoke(app, ["verify", "--suite", "dunkl-operator"])
        assert result.exit_code == 0
        assert "pass" in result.output
