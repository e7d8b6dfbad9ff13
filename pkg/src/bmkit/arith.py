"""Exact integer and rational primitives.

All coefficients in this package are :class:`fractions.Fraction` values,
which are normalized to lowest terms on construction with the sign carried by
the numerator. Integers are plain Python ``int`` (arbitrary precision).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

HALF = Fraction(1, 2)


@lru_cache(maxsize=4096)
def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


@lru_cache(maxsize=65536)
def binomial(n: int, k: int) -> int:
    """Return ``n choose k``, or 0 when ``k`` lies outside ``[0, n]``."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rising_factorial(x: Fraction | int, n: int) -> Fraction:
    """Pochhammer symbol ``(x)_n = x (x+1) ... (x+n-1)``; ``(x)_0 = 1``."""
    if n < 0:
        raise ValueError(f"rising factorial requires n >= 0, got {n}")
    x = Fraction(x)
    result = Fraction(1)
    for t in range(n):
        result *= x + t
    return result


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def format_rational(q: Fraction | int) -> str:
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer, or a finite decimal such as ``"0.5"`` exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc
