"""Exact integers, rationals and the combinatorial primitives built on them.

Python's ``int`` is the arbitrary-precision integer and
``fractions.Fraction`` the rational: it is always reduced with a positive
denominator, so ``==`` on canonical forms is mathematical equality.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

__all__ = [
    "Fraction",
    "as_rat",
    "binomial",
    "factorial",
    "format_int",
    "format_rat",
    "parse_int",
    "parse_rat",
    "pochhammer",
]


def as_rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would silently import rounding error into
    exact computations.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational coefficient")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with C(n, k) = 0 when k < 0 or k > n.

    The zero convention is what truncates the double sums defining the
    two-variable polynomials, so it is part of the contract.
    """
    if n < 0:
        raise ValueError(f"binomial with negative upper index {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(x, n: int) -> Fraction:
    """Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1."""
    if n < 0:
        raise ValueError(f"pochhammer length must be nonnegative, got {n}")
    x = as_rat(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def parse_int(text: str) -> int:
    text = text.strip()
    if not text or not (text.lstrip("-").isdigit()):
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(text)


def format_int(value: int) -> str:
    return str(value)


def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` (or a plain integer / decimal literal) exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rat(value) -> str:
    """Canonical ``"p/q"`` text; the denominator is omitted when it is 1."""
    value = as_rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
