"""Deterministic JSON rendering of exact values.

Rationals are emitted as a truncated decimal string plus the exact
numerator/denominator pair (as strings, since either may exceed 64 bits).
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import SpectralBracket

DECIMAL_DIGITS = 12


def decimal_str(x: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    """Decimal rendering truncated toward zero after ``digits`` places."""
    sign = "-" if x < 0 else ""
    numerator, denominator = abs(x.numerator), x.denominator
    integer, remainder = divmod(numerator, denominator)
    if remainder == 0:
        return "%s%d" % (sign, integer)
    frac = remainder * 10**digits // denominator
    tail = str(frac).rjust(digits, "0").rstrip("0")
    return "%s%d.%s" % (sign, integer, tail)


def rational_json(x: Fraction | None) -> dict | None:
    if x is None:
        return None
    x = Fraction(x)
    return {"decimal": decimal_str(x), "num": str(x.numerator), "den": str(x.denominator)}


def rational_from_json(data: dict | None) -> Fraction | None:
    if data is None:
        return None
    return Fraction(int(data["num"]), int(data["den"]))


def bracket_json(b: SpectralBracket | None) -> dict | None:
    if b is None:
        return None
    return {
        "low": rational_json(b.low),
        "high": rational_json(b.high),
        "iterations": b.iterations,
    }


def bracket_from_json(data: dict | None) -> SpectralBracket | None:
    if data is None:
        return None
    return SpectralBracket(
        low=rational_from_json(data["low"]),
        high=rational_from_json(data["high"]),
        iterations=data["iterations"],
    )
