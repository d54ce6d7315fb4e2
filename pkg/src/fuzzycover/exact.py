"""Exact decimal arithmetic on a fixed 10^-6 grid.

Membership degrees, thresholds and grades are stored as integers counting
micro-units (value * 10^6).  Sums of degrees stay integers, and every
threshold comparison reduces to integer arithmetic, so boundary cases
(P exactly equal to alpha, an overlap sum exactly equal to k) are decided
exactly rather than by floating-point luck.
"""

from __future__ import annotations

import re
from fractions import Fraction

MICRO = 10**6

_DECIMAL_RE = re.compile(r"^(-)?(\d+)(?:\.(\d{1,6}))?$")


class DecimalFormatError(ValueError):
    """A string is not an exact decimal with at most 6 fractional digits."""


def parse_scaled(text: str) -> int:
    """Parse a decimal string into micro-units. Raises DecimalFormatError."""
    if not isinstance(text, str):
        raise DecimalFormatError(
            f"expected a decimal string, got {type(text).__name__}: {text!r} "
            "(write numbers as JSON strings, e.g. \"0.75\")"
        )
    m = _DECIMAL_RE.match(text.strip())
    if m is None:
        raise DecimalFormatError(
            f"not a decimal with at most 6 fractional digits: {text!r}"
        )
    sign, whole, frac = m.groups()
    value = int(whole) * MICRO + int((frac or "").ljust(6, "0"))
    return -value if sign else value


def parse_degree(text: str) -> int:
    """Parse a membership degree in [0, 1] into micro-units."""
    value = parse_scaled(text)
    if not 0 <= value <= MICRO:
        raise DecimalFormatError(f"degree out of [0, 1]: {text!r}")
    return value


def format_scaled(value: int) -> str:
    """Canonical decimal string for a micro-unit value (no trailing zeros)."""
    sign = "-" if value < 0 else ""
    whole, frac = divmod(abs(value), MICRO)
    if frac == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:06d}".rstrip("0")


def ratio_cmp(num: int, den: int, threshold: int) -> int:
    """Sign of num/den - threshold/MICRO, by cross-multiplication (den > 0)."""
    lhs = num * MICRO
    rhs = threshold * den
    return (lhs > rhs) - (lhs < rhs)


def ratio_ge(num: int, den: int, threshold: int) -> bool:
    return num * MICRO >= threshold * den


def ratio_gt(num: int, den: int, threshold: int) -> bool:
    return num * MICRO > threshold * den


def ratio_lt(num: int, den: int, threshold: int) -> bool:
    return num * MICRO < threshold * den


def as_fraction(num: int, den: int) -> Fraction:
    """Exact rational num/den; micro scales cancel when both are micro-sums."""
    return Fraction(num, den)
