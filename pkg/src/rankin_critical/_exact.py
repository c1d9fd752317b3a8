"""Exact-fraction helpers shared by the JSON surface and the half-integer code."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import InputError


def to_fraction(value) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string into a Fraction.

    Floats are rejected: every quantity here is exact.
    """
    if isinstance(value, bool):
        raise InputError(f"not a rational number: {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not an exact fraction string: {value!r}") from exc
    raise InputError(f"not a rational number: {value!r}")


def frac_str(x) -> str:
    return str(Fraction(x))


def halve(doubled: int) -> Fraction:
    return Fraction(doubled, 2)


def double(x) -> int:
    """Return 2*x as an int; x must be a half-integer."""
    y = 2 * Fraction(x)
    if y.denominator != 1:
        raise ValueError(f"{x} is not a half-integer")
    return y.numerator
