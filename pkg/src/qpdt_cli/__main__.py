"""qpdt-cli main entry point."""

import typer
from rich.console import Console

from qpdt_cli import __version__
from qpdt_cli.cli.ops import cmd_convolve, cmd_translate
from qpdt_cli.cli.preset import cmd_preset
from qpdt_cli.cli.transform import cmd_transform
from qpdt_cli.cli.verify import cmd_verify
from qpdt_cli.config.settings import QPDTSettings
from qpdt_cli.log import configure_logging

console = Console()
app = typer.Typer(help="qpdt-cli - Quadratic-phase Dunkl transforms and their verification")


@app.callback()
def root(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
) -> None:
    """Configure logging before any command runs."""
    configure_logging("DEBUG" if verbose else QPDTSettings().log_level)


@app.command()
def version() -> None:
    """Show version information."""
    console.print(f"[bold cyan]qpdt-cli[/bold cyan] [green]{__version__}[/green]")


# Register commands
app.command("transform")(cmd_transform)
app.command("translate")(cmd_translate)
app.command("convolve")(cmd_convolve)
app.command("verify")(cmd_verify)
app.command("preset")(cmd_preset)


def main() -> None:
    """Main entry point."""
    app()


if __name__ == "__main__":
    main()
