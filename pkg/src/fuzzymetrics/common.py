"""Shared tolerance, error type and number formatting."""

from __future__ import annotations

# Absolute tolerance for real comparisons and point identity. All inputs are
# small decimal literals, so a single absolute tolerance is adequate.
TOL = 1e-9


class InputError(ValueError):
    """Invalid input to a library operation. The CLI maps this to exit code 2."""


def fmt(x: float) -> str:
    """Format a number with 9 significant digits, '.' decimal, no locale."""
    return f"{float(x):.9g}"
