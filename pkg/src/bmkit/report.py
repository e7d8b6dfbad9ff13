"""Check results shared by the verification sweeps and the enumeration oracle."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from bmkit.arith import format_rational

Value = Union[Fraction, int, bool, str]

_RELATIONS = {
    "=": lambda x, y: x == y,
    ">=": lambda x, y: x >= y,
    ">": lambda x, y: x > y,
    "<": lambda x, y: x < y,
}

TSV_COLUMNS = ("check", "m", "i", "observed", "relation", "expected", "pass", "witness")


def _fmt(v: Value) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    return str(v)


@dataclass(frozen=True)
class CheckResult:
    """One verified instance: ``observed <relation> expected``."""

    check: str
    m: int
    i: Optional[int]
    observed: str
    relation: str
    expected: str
    passed: bool
    witness: str = ""

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "m": self.m,
            "i": self.i,
            "observed": self.observed,
            "relation": self.relation,
            "expected": self.expected,
            "pass": self.passed,
            "witness": self.witness,
        }

    def to_tsv(self) -> str:
        row = self.to_dict()
        row["i"] = "" if self.i is None else self.i
        row["pass"] = "true" if self.passed else "false"
        return "\t".join(str(row[c]) for c in TSV_COLUMNS)


def compare(
    check: str,
    m: int,
    i: Optional[int],
    observed: Value,
    expected: Value,
    relation: str = "=",
    witness: str = "",
) -> CheckResult:
    """Build a :class:`CheckResult`, adding a default witness when the check fails."""
    ok = bool(_RELATIONS[relation](observed, expected))
    obs, exp = _fmt(observed), _fmt(expected)
    if not ok and not witness:
        witness = f"m={m} i={'' if i is None else i} expected {relation} {exp}, observed {obs}"
    return CheckResult(check, m, i, obs, relation, exp, ok, "" if ok else witness)


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(r.passed for r in results)


def to_json(results: Iterable[CheckResult]) -> str:
    return json.dumps([r.to_dict() for r in results], separators=(",", ":"))


def to_tsv(results: Iterable[CheckResult]) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    lines.extend(r.to_tsv() for r in results)
    return "\n".join(lines) + "\n"
