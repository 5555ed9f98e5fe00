"""Special functions, Gauss rules and weighted integration."""

from qpdt_cli.numerics.quadrature import (
    gauss_jacobi,
    gauss_legendre_composite,
    integrate_values,
    integrate_weighted,
    symmetric_rule,
)
from qpdt_cli.numerics.specfun import (
    W_MAX,
    c_mu,
    gamma_fn,
    normalized_bessel,
    normalized_bessel_array,
    normalized_bessel_series,
)

__all__ = [
    "W_MAX",
    "c_mu",
    "gamma_fn",
    "gauss_jacobi",
    "gauss_legendre_composite",
    "integrate_values",
    "integrate_weighted",
    "normalized_bessel",
    "normalized_bessel_array",
    "normalized_bessel_series",
    "symmetric_rule",
]
