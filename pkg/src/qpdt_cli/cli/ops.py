"""The translate and convolve commands."""

from pathlib import Path
from typing import Literal

import typer

from qpdt_cli.cli import common
from qpdt_cli.core.models import SampledSignal
from qpdt_cli.ops.convolution import convolve
from qpdt_cli.ops.translation import IDENTITY_EPS, require_translation_mu, translate


def cmd_translate(
    at: float = typer.Option(..., "--at", help="Translation offset w"),
    a: float = typer.Option(0.0, "--a", help="Signal-side chirp rate"),
    b: float = typer.Option(1.0, "--b", help="Kernel scale, non-zero"),
    c: float = typer.Option(0.0, "--c", help="Transform-side chirp rate"),
    d: float = typer.Option(0.0, "--d", help="Signal-side linear phase"),
    e: float = typer.Option(0.0, "--e", help="Transform-side linear phase"),
    mu: float = typer.Option(0.0, "--mu", help="Multiplicity index, > -1/2"),
    preset_name: str | None = typer.Option(None, "--preset", help="Named preset; replaces --a..--e"),
    theta: float | None = typer.Option(None, "--theta", help="Angle for fractional presets"),
    tau: float | None = typer.Option(None, "--tau", help="Fresnel parameter"),
    preset_args: str | None = typer.Option(
        None, "--preset-args", help="Comma-separated arguments for linear-canonical (A,B,C,D) or qpft (a,b,c,d,e)"
    ),
    input_file: Path | None = typer.Option(None, "--input", help="Signal file (CSV or JSON)"),
    fn: str | None = typer.Option(None, "--fn", help="Test function, e.g. gaussian:1.0"),
    wmin: float = typer.Option(-8.0, "--wmin", help="First output abscissa"),
    wmax: float = typer.Option(8.0, "--wmax", help="Last output abscissa"),
    wpoints: int = typer.Option(257, "--wpoints", help="Number of output abscissae"),
    panels: int | None = typer.Option(None, "--panels", help="Minimum quadrature panels"),
    order: int | None = typer.Option(None, "--order", help="Gauss points per panel"),
    L: float | None = typer.Option(None, "--L", help="Truncation half-width"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Output file; stdout if omitted"),
    fmt: Literal["csv", "json"] = typer.Option("csv", "--format", help="Output format"),
) -> None:
    """Quadratic-phase Dunkl translation of a signal by --at.

    Only a, d and mu enter the translation; a preset contributes its a and d
    and its postfactor is not applied. --at 0 on an input file writes its
    samples back unchanged.
    """
    with common.exit_on_error():
        params, _ = common.resolve_params(a, b, c, d, e, mu, preset_name, theta, tau, preset_args)
        require_translation_mu(params.mu)
        cfg = common.integration_config(L, panels, order)
        source = common.load_input(input_file, fn, params.mu)
        if isinstance(source, SampledSignal) and abs(at) < IDENTITY_EPS:
            # Identity on a file: the samples themselves, not their spline.
            result = source
        else:
            grid = common.output_grid(wmin, wmax, wpoints)
            result = translate(params, common.as_callable(source), at, grid, cfg)
        common.emit(result, output, fmt)


def cmd_convolve(
    a: float = typer.Option(0.0, "--a", help="Signal-side chirp rate"),
    b: float = typer.Option(1.0, "--b", help="Kernel scale, non-zero"),
    c: float = typer.Option(0.0, "--c", help="Transform-side chirp rate"),
    d: float = typer.Option(0.0, "--d", help="Signal-side linear phase"),
    e: float = typer.Option(0.0, "--e", help="Transform-side linear phase"),
    mu: float = typer.Option(0.0, "--mu", help="Multiplicity index, > -1/2"),
    preset_name: str | None = typer.Option(None, "--preset", help="Named preset; replaces --a..--e"),
    theta: float | None = typer.Option(None, "--theta", help="Angle for fractional presets"),
    tau: float | None = typer.Option(None, "--tau", help="Fresnel parameter"),
    preset_args: str | None = typer.Option(
        None, "--preset-args", help="Comma-separated arguments for linear-canonical (A,B,C,D) or qpft (a,b,c,d,e)"
    ),
    input_file: Path | None = typer.Option(None, "--input", help="First signal file"),
    fn: str | None = typer.Option(None, "--fn", help="First test function"),
    g_file: Path | None = typer.Option(None, "--g", help="Second signal file"),
    gfn: str | None = typer.Option(None, "--gfn", help="Second test function"),
    wmin: float = typer.Option(-8.0, "--wmin", help="First output abscissa"),
    wmax: float = typer.Option(8.0, "--wmax", help="Last output abscissa"),
    wpoints: int = typer.Option(257, "--wpoints", help="Number of output abscissae"),
    panels: int | None = typer.Option(None, "--panels", help="Minimum quadrature panels"),
    order: int | None = typer.Option(None, "--order", help="Gauss points per panel"),
    L: float | None = typer.Option(None, "--L", help="Truncation half-width"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Output file; stdout if omitted"),
    fmt: Literal["csv", "json"] = typer.Option("csv", "--format", help="Output format"),
) -> None:
    """Quadratic-phase Dunkl convolution of two signals.

    As with translate, a preset contributes its a and d; no postfactor is applied.
    """
    with common.exit_on_error():
        params, _ = common.resolve_params(a, b, c, d, e, mu, preset_name, theta, tau, preset_args)
        require_translation_mu(params.mu)
        cfg = common.integration_config(L, panels, order)
        grid = common.output_grid(wmin, wmax, wpoints)
        f = common.as_callable(common.load_input(input_file, fn, params.mu))
        g = common.as_callable(common.load_input(g_file, gfn, params.mu))
        common.emit(convolve(params, f, g, grid, cfg), output, fmt)
