"""Translation, convolution and weighted norms."""

from qpdt_cli.ops.convolution import convolve
from qpdt_cli.ops.norms import lp_norm
from qpdt_cli.ops.translation import (
    dunkl_translate,
    dunkl_translation_kernel,
    sigma,
    translate,
    triangle_kernel,
)

__all__ = [
    "convolve",
    "dunkl_translate",
    "dunkl_translation_kernel",
    "lp_norm",
    "sigma",
    "translate",
    "triangle_kernel",
]
