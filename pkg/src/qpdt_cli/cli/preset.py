"""The preset command."""

import json

import typer

from qpdt_cli.cli import common


def cmd_preset(
    name: str = typer.Option(..., "--name", help="Preset name, e.g. dunkl or fractional-dunkl"),
    mu: float = typer.Option(0.0, "--mu", help="Multiplicity index for the Dunkl-type presets"),
    theta: float | None = typer.Option(None, "--theta", help="Angle for fractional presets"),
    tau: float | None = typer.Option(None, "--tau", help="Fresnel parameter"),
    preset_args: str | None = typer.Option(
        None, "--preset-args", help="Comma-separated arguments for linear-canonical or qpft"
    ),
) -> None:
    """Print a preset's (a, b, c, d, e, mu) tuple and postfactor as JSON."""
    with common.exit_on_error():
        chosen = common.resolve_preset(name, mu, theta, tau, preset_args)
        typer.echo(json.dumps(chosen.as_json_dict()))
