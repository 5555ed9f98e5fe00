"""Configuration management for qpdt-cli."""

from qpdt_cli.config.settings import QPDTSettings

__all__ = ["QPDTSettings"]
