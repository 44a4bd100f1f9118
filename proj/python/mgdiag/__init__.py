"""Python bindings for the mgdiag library."""

from ._mgdiag import (
    ParseError,
    ResourceLimitError,
    a_inv_quotient_power,
    classify,
    dim_lc,
    dim_piece,
    f_regular_certificate,
    fedder_is_f_pure,
    figure,
    parse,
    rigidity_is_cm,
    rigidity_window,
    run,
)

__all__ = [
    "ParseError",
    "ResourceLimitError",
    "a_inv_quotient_power",
    "classify",
    "dim_lc",
    "dim_piece",
    "f_regular_certificate",
    "fedder_is_f_pure",
    "figure",
    "parse",
    "rigidity_is_cm",
    "rigidity_window",
    "run",
]
