"""Numerical check of the quartic integral closed form.

The integral over ``[0, inf)`` is folded onto ``[0, 1]`` with ``x -> 1/x``::

    int_0^inf dx / q(x)^(m+1) = int_0^1 (1 + x^(4m+2)) / q(x)^(m+1) dx,
    q(x) = x^4 + 2 a x^2 + 1,

and the folded integrand is integrated with adaptive Simpson.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from bmkit.core import p_eval_single

MAX_M = 20
MAX_DEPTH = 60
MAX_EVALS = 2_000_000


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach its tolerance."""


@dataclass(frozen=True)
class IntegralCheck:
    m: int
    a: float
    numeric: float
    closed_form: float
    abs_err: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.abs_err <= self.tol


def adaptive_simpson(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    max_depth: int = MAX_DEPTH,
    max_evals: int = MAX_EVALS,
) -> float:
    """Integrate ``f`` over ``[lo, hi]`` to absolute tolerance ``tol``.

    Uses the usual ``|S2 - S1| <= 15 tol`` acceptance test with Richardson
    correction. Raises :class:`QuadratureError` if an interval would need to be
    split beyond ``max_depth`` levels or ``f`` would be called more than
    ``max_evals`` times.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    f_lo, f_hi = f(lo), f(hi)
    mid = 0.5 * (lo + hi)
    f_mid = f(mid)
    whole = (hi - lo) * (f_lo + 4 * f_mid + f_hi) / 6
    total = 0.0
    # explicit stack: (lo, hi, f_lo, f_mid, f_hi, whole, tol, depth)
    stack = [(lo, hi, f_lo, f_mid, f_hi, whole, tol, 0)]
    evals = 3
    while stack:
        evals += 2
        if evals > max_evals:
            raise QuadratureError(f"adaptive Simpson exceeded {max_evals} evaluations")
        a, b, fa, fm, fb, s, eps, depth = stack.pop()
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) * (fa + 4 * flm + fm) / 6
        right = (b - m) * (fm + 4 * frm + fb) / 6
        delta = left + right - s
        if abs(delta) <= 15 * eps:
            total += left + right + delta / 15
            continue
        if depth >= max_depth:
            raise QuadratureError(
                f"adaptive Simpson did not converge on [{a}, {b}] at depth {depth}"
            )
        stack.append((a, m, fa, flm, fm, left, eps / 2, depth + 1))
        stack.append((m, b, fm, frm, fb, right, eps / 2, depth + 1))
    return total


def folded_integrand(m: int, a: float) -> Callable[[float], float]:
    p = m + 1
    top = 4 * m + 2

    def f(x: float) -> float:
        x2 = x * x
        return (1.0 + x**top) / (x2 * x2 + 2.0 * a * x2 + 1.0) ** p

    return f


def closed_form(m: int, a: Fraction | float) -> float:
    """``pi P_m(a) / (2^(m+3/2) (a+1)^(m+1/2))`` with ``P_m(a)`` computed exactly."""
    a_exact = Fraction(a)
    if a_exact <= -1:
        raise ValueError(f"closed form needs a > -1, got {a}")
    p = float(p_eval_single(m, a_exact))
    return math.pi * p / (2.0 ** (m + 1.5) * float(a_exact + 1) ** (m + 0.5))


def integral_check(m: int, a: Fraction | float, tol: float = 1e-8) -> IntegralCheck:
    """Compare adaptive quadrature of the quartic integral with its closed form.

    The quadrature runs at ``tol / 10``.
    """
    if m < 0 or m > MAX_M:
        raise ValueError(f"integral check supports 0 <= m <= {MAX_M}, got {m}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    a_exact = Fraction(a)
    if a_exact <= -1:
        raise ValueError(f"integral needs a > -1, got {a}")
    af = float(a_exact)
    numeric = adaptive_simpson(folded_integrand(m, af), 0.0, 1.0, tol / 10)
    exact = closed_form(m, a_exact)
    return IntegralCheck(m, af, numeric, exact, abs(numeric - exact), tol)
