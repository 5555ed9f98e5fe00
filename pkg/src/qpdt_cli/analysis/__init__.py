"""Theorem functionals and the seeded verification suites."""

from qpdt_cli.analysis.suites import SUITE_NAMES, SUITES, run_suite
from qpdt_cli.analysis.theorems import (
    HeisenbergResult,
    dunkl_operator_apply,
    heisenberg_ratio,
    linearity_residual,
    parseval_residual,
    plancherel_residual,
    riemann_lebesgue_slack,
    young_check,
    young_exponent,
)

__all__ = [
    "HeisenbergResult",
    "SUITES",
    "SUITE_NAMES",
    "dunkl_operator_apply",
    "heisenberg_ratio",
    "linearity_residual",
    "parseval_residual",
    "plancherel_residual",
    "riemann_lebesgue_slack",
    "run_suite",
    "young_check",
    "young_exponent",
]
