"""Tournament score sequences: feasibility, realization and rational approximation.

Rationals come back as fractions.Fraction; inputs may be ints, Fractions or
strings such as "7/6" or "1.25". Vertex indices are 0-based.
"""

from ._moonforge import (
    BlowupTooLargeError,
    Error,
    InfeasibleError,
    InternalError,
    ParseError,
    ValidationError,
    approximate_realize,
    blowup_scores,
    check_exhaustive,
    check_fast,
    check_partition_inequalities,
    max_deficit_excluding_first,
    parse_scores,
    perturb,
    random_feasible,
    realize_backtrack,
    realize_integer,
    realize_rational,
    run_cli,
    simplest_rational_in,
)

__all__ = [
    "BlowupTooLargeError",
    "Error",
    "InfeasibleError",
    "InternalError",
    "ParseError",
    "ValidationError",
    "approximate_realize",
    "blowup_scores",
    "check_exhaustive",
    "check_fast",
    "check_partition_inequalities",
    "max_deficit_excluding_first",
    "parse_scores",
    "perturb",
    "random_feasible",
    "realize_backtrack",
    "realize_integer",
    "realize_rational",
    "run_cli",
    "simplest_rational_in",
]
