"""The quadratic-phase Dunkl transform, its kernels, test functions and presets."""

from qpdt_cli.transform.functions import TestFunction, parse
from qpdt_cli.transform.kernels import dunkl_kernel, power_ib, qpdt_kernel
from qpdt_cli.transform.presets import Preset, preset
from qpdt_cli.transform.qpdt import (
    dunkl_transform,
    forward,
    forward_via_dunkl,
    fourier_bessel,
    inverse,
    scaling_check,
    transform_side_rule,
)

__all__ = [
    "Preset",
    "TestFunction",
    "dunkl_kernel",
    "dunkl_transform",
    "forward",
    "forward_via_dunkl",
    "fourier_bessel",
    "inverse",
    "parse",
    "power_ib",
    "preset",
    "qpdt_kernel",
    "scaling_check",
    "transform_side_rule",
]
