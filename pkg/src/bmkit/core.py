"""Boros-Moll polynomials and their coefficients.

``P_m(a)`` is evaluated by the double-sum and single-sum formulas, its
coefficients ``d_i(m)`` by the closed form, by polynomial expansion of the
single sum and by the three-term recurrence in ``i``. The rescaled
coefficients ``D_i(m)`` are produced both from ``d_i(m)`` and from their own
rising-factorial sum. The remaining functions check recurrences, log-concavity,
unimodality and the ``a = 1`` identity on exact values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Sequence

from bmkit.arith import (
    HALF,
    binomial,
    factorial,
    format_rational,
    is_power_of_two,
    parse_rational,
    rising_factorial,
)

Kind = Literal["d", "D"]


class KindMismatchError(ValueError):
    """A table of the wrong kind was passed."""


class IndexRangeError(ValueError):
    """An index ``i`` outside the range where a check is defined."""


@dataclass(frozen=True)
class CoefficientTable:
    """The coefficients ``c_0(m), ..., c_m(m)`` of one kind for a single ``m``."""

    m: int
    kind: Kind
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError(f"m must be nonnegative, got {self.m}")
        if self.kind not in ("d", "D"):
            raise ValueError(f"unknown table kind {self.kind!r}")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if len(self.values) != self.m + 1:
            raise ValueError(
                f"table for m={self.m} needs {self.m + 1} values, got {len(self.values)}"
            )
        for i, v in enumerate(self.values):
            if v <= 0:
                raise ValueError(f"coefficient {i} of m={self.m} is not positive: {v}")
            if not is_power_of_two(v.denominator):
                raise ValueError(f"coefficient {i} of m={self.m} is not dyadic: {v}")

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def to_tsv(self) -> str:
        return "".join(f"{i}\t{format_rational(v)}\n" for i, v in enumerate(self.values))

    def to_json(self) -> str:
        return json.dumps(
            {"m": self.m, "kind": self.kind, "values": [format_rational(v) for v in self.values]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> CoefficientTable:
        obj = json.loads(text)
        return cls(obj["m"], obj["kind"], tuple(parse_rational(s) for s in obj["values"]))


def _check_m(m: int) -> None:
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")


@lru_cache(maxsize=512)
def _d_closed_form(m: int) -> tuple[Fraction, ...]:
    scale = Fraction(1, 4**m)
    values = []
    for i in range(m + 1):
        total = sum(
            2**k * binomial(2 * m - 2 * k, m - k) * binomial(m + k, k) * binomial(k, i)
            for k in range(i, m + 1)
        )
        values.append(scale * total)
    return tuple(values)


def d_coeffs(m: int) -> CoefficientTable:
    """Coefficients of ``a^i`` in ``P_m(a)`` from the closed-form single sum over ``k``."""
    _check_m(m)
    return CoefficientTable(m, "d", _d_closed_form(m))


def d_coeffs_by_expansion(m: int) -> CoefficientTable:
    """Coefficients obtained by expanding ``sum_k c_k (a+1)^k`` as a polynomial.

    Powers of ``a + 1`` are built by repeated multiplication, so no binomial in
    ``i`` is used; this is an independent route to :func:`d_coeffs`.
    """
    _check_m(m)
    coeffs = [Fraction(0)] * (m + 1)
    power = [1]  # coefficients of (a+1)^k, lowest degree first
    for k in range(m + 1):
        weight = Fraction(2**k * binomial(2 * m - 2 * k, m - k) * binomial(m + k, k), 4**m)
        for i, c in enumerate(power):
            coeffs[i] += weight * c
        power = [x + y for x, y in zip(power + [0], [0] + power)]
    return CoefficientTable(m, "d", tuple(coeffs))


def d_coeffs_by_recurrence(m: int) -> CoefficientTable:
    """Coefficients from ``i(i+1) d_{i+1} = i(2m+1) d_i - (m-i+1)(m+i) d_{i-1}``.

    ``d_0`` and ``d_1`` are seeded from the closed form.
    """
    _check_m(m)
    seeds = _d_closed_form(m)
    values = list(seeds[: min(2, m + 1)])
    for i in range(1, m):
        nxt = (i * (2 * m + 1) * values[i] - (m - i + 1) * (m + i) * values[i - 1]) / (i * (i + 1))
        values.append(nxt)
    return CoefficientTable(m, "d", tuple(values))


def recurrence_residual_d(m: int, i: int) -> Fraction:
    """Residual of the ``d``-recurrence at ``i``, with ``d_{m+1}(m) = 0``.

    Defined for ``1 <= i <= m``.
    """
    if not 1 <= i <= m:
        raise IndexRangeError(f"d-recurrence needs 1 <= i <= m, got m={m}, i={i}")
    d = _d_closed_form(m)
    d_next = d[i + 1] if i + 1 <= m else Fraction(0)
    return i * (i + 1) * d_next - i * (2 * m + 1) * d[i] + (m - i + 1) * (m + i) * d[i - 1]


def horner(values: Sequence[Fraction], a: Fraction | int) -> Fraction:
    """Evaluate ``sum_i values[i] a^i``."""
    a = Fraction(a)
    acc = Fraction(0)
    for c in reversed(values):
        acc = acc * a + c
    return acc


def p_eval_double(m: int, a: Fraction | int) -> Fraction:
    """``P_m(a)`` from the double sum over ``j`` and ``k``."""
    _check_m(m)
    a = Fraction(a)
    total = Fraction(0)
    for j in range(m + 1):
        head = binomial(2 * m + 1, 2 * j) * (a + 1) ** j
        for k in range(m - j + 1):
            term = binomial(m - j, k) * binomial(2 * k + 2 * j, k + j) * (a - 1) ** k
            total += head * term / 8 ** (k + j)
    return total


def p_eval_single(m: int, a: Fraction | int) -> Fraction:
    """``P_m(a)`` from the single sum in powers of ``a + 1``."""
    _check_m(m)
    a = Fraction(a)
    total = sum(
        2**k * binomial(2 * m - 2 * k, m - k) * binomial(m + k, k) * (a + 1) ** k
        for k in range(m + 1)
    )
    return Fraction(total, 1) / 4**m


def big_d_multiplier(m: int, i: int) -> int:
    """Integer factor ``C(2m, m-i) m! i! (m-i)! 2^i`` turning ``d_i(m)`` into ``D_i(m)``."""
    return binomial(2 * m, m - i) * factorial(m) * factorial(i) * factorial(m - i) * 2**i


def big_d_from_d(m: int, d: CoefficientTable) -> CoefficientTable:
    if d.kind != "d":
        raise KindMismatchError(f"expected a 'd' table, got kind {d.kind!r}")
    if d.m != m:
        raise ValueError(f"table is for m={d.m}, not m={m}")
    return CoefficientTable(m, "D", tuple(big_d_multiplier(m, i) * v for i, v in enumerate(d)))


@lru_cache(maxsize=512)
def _big_d_sum(m: int) -> tuple[Fraction, ...]:
    values = []
    for i in range(m + 1):
        n = m - i
        inner = sum(
            binomial(n, j) * HALF**j * rising_factorial(HALF, n - j) * factorial(m + i + j)
            for j in range(n + 1)
        )
        values.append(binomial(2 * m, n) * inner)
    return tuple(values)


def big_d_single_sum(m: int) -> CoefficientTable:
    """``D_i(m)`` from its sum over white-element counts ``j`` with ``(1/2)_{m-i-j}``."""
    _check_m(m)
    return CoefficientTable(m, "D", _big_d_sum(m))


def big_d(m: int) -> CoefficientTable:
    return big_d_from_d(m, d_coeffs(m))


def check_recurrence_D(m: int, i: int) -> Fraction:
    """Residual of ``(m+i+1) D_{i+1}/2 + 2(m-i+1) D_{i-1} - (2m+1) D_i``; zero when the recurrence holds."""
    if m < 2 or not 1 <= i <= m - 1:
        raise IndexRangeError(f"D-recurrence needs m >= 2 and 1 <= i <= m-1, got m={m}, i={i}")
    D = big_d(m)
    return (
        HALF * (m + i + 1) * D[i + 1]
        + 2 * (m - i + 1) * D[i - 1]
        - (2 * m + 1) * D[i]
    )


def check_log_concavity(m: int) -> list[tuple[int, Fraction]]:
    """Return ``(i, d_i^2 - d_{i-1} d_{i+1})`` for each interior ``i``; empty for ``m < 2``."""
    _check_m(m)
    d = d_coeffs(m)
    return [(i, d[i] ** 2 - d[i - 1] * d[i + 1]) for i in range(1, m)]


def ineq_section4(m: int, i: int) -> tuple[Fraction, Fraction]:
    """Both sides of ``(m+i+1) D_{i+1} (m-i+1) D_{i-1} < (m+i)(m-i+1) D_i^2``."""
    if m < 2 or not 1 <= i <= m - 1:
        raise IndexRangeError(f"inequality needs m >= 2 and 1 <= i <= m-1, got m={m}, i={i}")
    D = big_d(m)
    lhs = (m + i + 1) * D[i + 1] * (m - i + 1) * D[i - 1]
    rhs = (m + i) * (m - i + 1) * D[i] ** 2
    return lhs, rhs


def is_unimodal(values: Sequence[Fraction]) -> bool:
    """True iff the sequence is nondecreasing up to some peak and nonincreasing after it."""
    n = len(values)
    p = 0
    while p + 1 < n and values[p] <= values[p + 1]:
        p += 1
    return all(values[t] >= values[t + 1] for t in range(p, n - 1))


def check_unimodality(m: int) -> bool:
    _check_m(m)
    return is_unimodal(d_coeffs(m).values)


def identity_a1(m: int) -> tuple[Fraction, Fraction]:
    """Both sides of the binomial identity that evaluates ``P_m(1)``."""
    _check_m(m)
    lhs = sum(Fraction(binomial(2 * k, k) * binomial(2 * m - k, m), 4**k) for k in range(m + 1))
    rhs = sum(Fraction(binomial(2 * k, k) * binomial(2 * m + 1, 2 * k), 4**k) for k in range(m + 1))
    return Fraction(lhs), Fraction(rhs)
