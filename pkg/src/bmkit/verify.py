"""Verification sweeps over ``m`` for the coefficient formulas and inequalities."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from bmkit import core
from bmkit.arith import binomial, format_rational
from bmkit.report import CheckResult, compare

EVAL_POINTS: tuple[Fraction, ...] = tuple(
    Fraction(x) for x in (-2, -1, 0, Fraction(1, 2), 1, 3)
)


def check_formulas(m: int) -> list[CheckResult]:
    """All coefficient routes and all evaluation routes agree exactly."""
    d = core.d_coeffs(m)
    expanded = core.d_coeffs_by_expansion(m)
    recurred = core.d_coeffs_by_recurrence(m)
    D_from_d = core.big_d_from_d(m, d)
    D_sum = core.big_d_single_sum(m)
    out = []
    for i in range(m + 1):
        out.append(compare("d-expansion", m, i, expanded[i], d[i]))
        out.append(compare("d-recurrence-table", m, i, recurred[i], d[i]))
        out.append(compare("D-single-sum", m, i, D_sum[i], D_from_d[i]))
    out.append(compare("d-top", m, m, d[m], Fraction(binomial(2 * m, m), 2**m)))
    for a in EVAL_POINTS:
        single = core.p_eval_single(m, a)
        tag = f"@a={format_rational(a)}"
        out.append(compare("P-double" + tag, m, None, core.p_eval_double(m, a), single))
        out.append(compare("P-horner" + tag, m, None, core.horner(d.values, a), single))
    return out


def check_recurrences(m: int) -> list[CheckResult]:
    out = [
        compare("d-recurrence", m, i, core.recurrence_residual_d(m, i), 0)
        for i in range(1, m + 1)
    ]
    out.extend(
        compare("D-recurrence", m, i, core.check_recurrence_D(m, i), 0) for i in range(1, m)
    )
    return out


def check_log_concavity(m: int) -> list[CheckResult]:
    return [
        compare("log-concavity", m, i, margin, 0, relation=">=")
        for i, margin in core.check_log_concavity(m)
    ]


def check_unimodality(m: int) -> list[CheckResult]:
    return [compare("unimodality", m, None, core.check_unimodality(m), True)]


def check_a1(m: int) -> list[CheckResult]:
    lhs, rhs = core.identity_a1(m)
    return [
        compare("a1-identity", m, None, lhs, rhs),
        compare("a1-P(1)", m, None, lhs, core.p_eval_single(m, 1)),
    ]


def check_section4(m: int) -> list[CheckResult]:
    out = []
    for i in range(1, m):
        lhs, rhs = core.ineq_section4(m, i)
        out.append(compare("section4", m, i, lhs, rhs, relation="<"))
    return out


CHECKS: dict[str, Callable[[int], list[CheckResult]]] = {
    "formulas": check_formulas,
    "recurrence": check_recurrences,
    "logconcavity": check_log_concavity,
    "unimodality": check_unimodality,
    "a1": check_a1,
    "section4": check_section4,
}


def sweep(ms: Iterable[int], checks: Sequence[str] = tuple(CHECKS)) -> list[CheckResult]:
    """Run the selected checks for each ``m`` in ascending order.

    Checks run in the fixed order of :data:`CHECKS` whatever order they are
    requested in.
    """
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
    selected = [name for name in CHECKS if name in checks]
    results: list[CheckResult] = []
    for m in sorted(ms):
        for name in selected:
            results.extend(CHECKS[name](m))
    return results
