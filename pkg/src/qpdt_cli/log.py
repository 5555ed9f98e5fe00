"""Logger factory backed by a rich handler on standard error."""

import logging

from rich.console import Console
from rich.logging import RichHandler

ROOT_LOGGER = "qpdt_cli"


def get_logger(name: str) -> logging.Logger:
    """Return a logger inside the ``qpdt_cli`` namespace."""
    if name == ROOT_LOGGER or name.startswith(f"{ROOT_LOGGER}."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def configure_logging(level: str | int = "WARNING") -> logging.Logger:
    """Install a single RichHandler on the package logger.

    Calling this again only adjusts the level.
    """
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(level.upper() if isinstance(level, str) else level)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=False,
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
    return logger
