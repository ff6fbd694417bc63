"""Exact engine for budget-balanced truthful single-object mechanisms.

All rationals cross the native boundary as canonical strings ("num/den",
integers without "/1"); `as_fraction`/`as_fractions` convert to
`fractions.Fraction` for exact arithmetic on the Python side.
"""

from fractions import Fraction

from ._core import (
    allocate,
    check_residual_balance,
    check_satisfactory,
    convergence_table,
    dual_certificate,
    equal_share_rule,
    gl_rule,
    is_implementable,
    payments,
    r_optimal_rule,
    run_mechanism,
    select_ell,
    total_revenue,
    two_step_rule,
)

__all__ = [
    "allocate",
    "as_fraction",
    "as_fractions",
    "check_residual_balance",
    "check_satisfactory",
    "convergence_table",
    "dual_certificate",
    "equal_share_rule",
    "gl_rule",
    "is_implementable",
    "payments",
    "r_optimal_rule",
    "run_mechanism",
    "select_ell",
    "total_revenue",
    "two_step_rule",
]


def as_fraction(value: str) -> Fraction:
    """Parse one rational string into a Fraction."""
    return Fraction(value)


def as_fractions(values) -> list:
    """Parse a list of rational strings into Fractions."""
    return [Fraction(v) for v in values]
