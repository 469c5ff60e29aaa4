"""Exact and numeric verification of identities for Ramanujan's elliptic functions."""

from .qseries import (
    QSeries,
    divisor_power_sum,
    eisenstein_series,
    lambert_series,
    ode_residuals,
    qs_arith,
    qs_compose,
    qs_qderiv,
)
from .report import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "QSeries",
    "VerificationReport",
    "divisor_power_sum",
    "eisenstein_series",
    "lambert_series",
    "ode_residuals",
    "qs_arith",
    "qs_compose",
    "qs_qderiv",
]
