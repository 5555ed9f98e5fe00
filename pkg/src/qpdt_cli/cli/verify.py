"""The verify command."""

from enum import Enum
from pathlib import Path

import typer
from rich.console import Console
from rich.table import Table

from qpdt_cli.analysis.suites import SUITE_NAMES, run_suite
from qpdt_cli.cli import common
from qpdt_cli.core.exceptions import SignalFileError
from qpdt_cli.core.models import VerificationReport

console = Console()

SuiteChoice = Enum("SuiteChoice", {name.replace("-", "_"): name for name in SUITE_NAMES}, type=str)


def _summary(report: VerificationReport) -> Table:
    table = Table(title=f"Suite {report.suite} (seed {report.seed})", show_lines=False)
    table.add_column("Case", style="cyan")
    table.add_column("Measured", justify="right")
    table.add_column("Bound", justify="right")
    table.add_column("Tol", justify="right", style="dim")
    table.add_column("Result", width=6)
    for case in report.cases:
        status = "[green]pass[/]" if case.passed else "[red]FAIL[/]"
        table.add_row(case.name, f"{case.measured:.3e}", f"{case.bound:.3e}", f"{case.tol:.0e}", status)
    return table


def _write_report(report: VerificationReport, path: Path) -> None:
    try:
        path.write_text(report.to_json())
    except OSError as e:
        raise SignalFileError(f"Cannot write report {path}", details={"reason": str(e)}) from e


def cmd_verify(
    suite: SuiteChoice = typer.Option(..., "--suite", help="Suite to run"),
    seed: int = typer.Option(42, "--seed", help="Seed for the case generator"),
    report_path: Path | None = typer.Option(None, "--report", help="Write the JSON report here"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Only print the aggregate line"),
) -> None:
    """Run a verification suite; exit 1 if any case fails.

    The report is written even when the suite fails.
    """
    with common.exit_on_error():
        report = run_suite(suite.value, seed=seed, cfg=common.integration_config())
        if report_path is not None:
            _write_report(report, report_path)
        if not quiet:
            console.print(_summary(report))
        colour = "green" if report.passed else "red"
        console.print(
            f"[bold {colour}]{report.aggregate}[/] {len(report.cases)} cases "
            f"in {report.runtime_seconds:.1f}s"
        )
        if not report.passed:
            raise typer.Exit(1)
