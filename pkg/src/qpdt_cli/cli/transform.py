"""The transform command."""

from pathlib import Path
from typing import Literal

import numpy as np
import typer

from qpdt_cli.cli import common
from qpdt_cli.core.models import SampledSignal, build
from qpdt_cli.log import get_logger
from qpdt_cli.transform.qpdt import forward, inverse, transform_side_rule

logger = get_logger(__name__)


def cmd_transform(
    a: float = typer.Option(0.0, "--a", help="Signal-side chirp rate"),
    b: float = typer.Option(1.0, "--b", help="Kernel scale, non-zero"),
    c: float = typer.Option(0.0, "--c", help="Transform-side chirp rate"),
    d: float = typer.Option(0.0, "--d", help="Signal-side linear phase"),
    e: float = typer.Option(0.0, "--e", help="Transform-side linear phase"),
    mu: float = typer.Option(0.0, "--mu", help="Multiplicity index, >= -1/2"),
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
    inverse_flag: bool = typer.Option(False, "--inverse", help="Apply the inverse transform"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Output file; stdout if omitted"),
    fmt: Literal["csv", "json"] = typer.Option("csv", "--format", help="Output format"),
) -> None:
    """Apply the quadratic-phase Dunkl transform (or its inverse) to a signal.

    With --preset the output is multiplied by the preset's postfactor, so it
    is the named classical transform in its usual normalization; --inverse
    divides it back out before inverting.
    """
    with common.exit_on_error():
        params, postfactor = common.resolve_params(a, b, c, d, e, mu, preset_name, theta, tau, preset_args)
        cfg = common.integration_config(L, panels, order)
        grid = common.output_grid(wmin, wmax, wpoints)
        source = common.load_input(input_file, fn, params.mu)

        if inverse_flag:
            result = _inverse(params, postfactor, source, grid, cfg)
        else:
            result = forward(params, common.as_callable(source), grid, cfg)
            if postfactor != 1:
                result = build(SampledSignal, grid=result.grid, values=postfactor * result.values, mu=params.mu)
        logger.debug("transform: %d output samples, params %s", len(result), params.as_dict())
        common.emit(result, output, fmt)


def _inverse(params, postfactor, source, grid, cfg) -> SampledSignal:
    if isinstance(source, SampledSignal):
        F = build(SampledSignal, grid=source.grid, values=source.values / postfactor, mu=params.mu)
        return inverse(params, F, grid, cfg)
    # Named functions are sampled on the rule's own nodes, so no interpolation is involved.
    rule = transform_side_rule(params, cfg, outer_max=float(np.max(np.abs(grid))))
    values = np.asarray(source(rule.nodes), dtype=complex) / postfactor
    return inverse(params, SampledSignal.on_rule(rule, values, params.mu), grid, cfg, rule=rule)
