"""Exact power series reversion, convolution recurrences and Riordan arrays."""

from .series import (
    LaurentSeries,
    PowerSeries,
    binomial_series,
    laurent_int_pow,
    ps_compose,
    ps_derivative,
    ps_inverse,
    ps_mul,
    ps_revert,
)

__version__ = "0.1.0"

__all__ = [
    "LaurentSeries",
    "PowerSeries",
    "binomial_series",
    "laurent_int_pow",
    "ps_compose",
    "ps_derivative",
    "ps_inverse",
    "ps_mul",
    "ps_revert",
]
