"""Option parsing and error reporting shared by the command modules."""

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator

import numpy as np
import typer
from rich.console import Console

from qpdt_cli.config.settings import QPDTSettings
from qpdt_cli.core.exceptions import DomainError, ParameterValidationError, QPDTError
from qpdt_cli.core.models import IntegrationConfig, QpdtParams, SampledSignal, Signal, build
from qpdt_cli.io.signal_file import SignalFormat, format_csv, format_json, read_signal, write_signal
from qpdt_cli.transform.functions import parse
from qpdt_cli.transform.presets import Preset, preset

err_console = Console(stderr=True)

_THETA_PRESETS = {"fractional_dunkl", "fractional_fourier"}
_TAU_PRESETS = {"fresnel"}

_LABELS: dict[int, str] = {2: "Invalid Input", 3: "File Error", 4: "Numerical Error"}


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Print library errors to stderr and exit with the error's code."""
    try:
        yield
    except typer.Exit:
        raise
    except QPDTError as e:
        err_console.print(f"[bold red]{_LABELS.get(e.exit_code, 'Error')}:[/] {e}")
        raise typer.Exit(e.exit_code)
    except Exception as e:
        err_console.print(f"[bold red]Error:[/] {e}")
        raise typer.Exit(4)


def integration_config(
    L: float | None = None,
    panels: int | None = None,
    order: int | None = None,
) -> IntegrationConfig:
    """Settings from the environment with command-line overrides."""
    return IntegrationConfig.from_settings(QPDTSettings(), L=L, panels=panels, order=order)


def output_grid(wmin: float, wmax: float, wpoints: int) -> np.ndarray:
    if wpoints < 1 or not wmin <= wmax or (wpoints > 1 and wmin == wmax):
        raise DomainError(
            "output grid needs wmin < wmax and wpoints >= 1",
            details={"wmin": wmin, "wmax": wmax, "wpoints": wpoints},
        )
    return np.linspace(wmin, wmax, wpoints)


def parse_floats(text: str | None) -> list[float]:
    if not text:
        return []
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as e:
        raise ParameterValidationError(f"Expected comma-separated numbers, got '{text}'") from e


def resolve_preset(
    name: str,
    mu: float,
    theta: float | None,
    tau: float | None,
    preset_args: str | None,
) -> Preset:
    """Preset from --preset plus --theta, --tau or --preset-args."""
    key = name.strip().replace("-", "_")
    if key in _THETA_PRESETS:
        if theta is None:
            raise DomainError(f"preset '{name}' requires --theta")
        args = [theta]
    elif key in _TAU_PRESETS:
        if tau is None:
            raise DomainError(f"preset '{name}' requires --tau")
        args = [tau]
    else:
        args = parse_floats(preset_args)
    return preset(key, args, mu=mu)


def resolve_params(
    a: float,
    b: float,
    c: float,
    d: float,
    e: float,
    mu: float,
    preset_name: str | None = None,
    theta: float | None = None,
    tau: float | None = None,
    preset_args: str | None = None,
) -> tuple[QpdtParams, complex]:
    """Parameter tuple and postfactor; a named preset replaces the explicit flags."""
    if preset_name:
        chosen = resolve_preset(preset_name, mu, theta, tau, preset_args)
        return chosen.params, chosen.postfactor
    return build(QpdtParams, a=a, b=b, c=c, d=d, e=e, mu=mu), 1 + 0j


def load_input(input_file: Path | None, fn: str | None, mu: float) -> Signal | SampledSignal:
    """Either a named test function or a sampled file (returned as SampledSignal)."""
    if (input_file is None) == (fn is None):
        raise DomainError("exactly one of --input and --fn is required")
    if fn is not None:
        return parse(fn)
    return read_signal(input_file, mu=mu)


def as_callable(source: Signal | SampledSignal) -> Signal:
    """Sampled files are extended by a natural cubic spline that is zero outside the file's domain."""
    if isinstance(source, SampledSignal):
        return source.interpolant(outside="zero")
    return source


def emit(signal: SampledSignal, output: Path | None, fmt: SignalFormat | None) -> None:
    """Write to ``output`` or, without one, print to stdout."""
    if output is not None:
        write_signal(signal, output, fmt)
        return
    text = format_json(signal) if fmt == "json" else format_csv(signal)
    typer.echo(text, nl=False)
