"""Quadratic-phase Dunkl transform library and command-line toolkit."""

__version__ = "0.1.0"
