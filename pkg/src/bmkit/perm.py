"""Partially 2-colored permutations.

A structure on ``[2m]`` is a line permutation of ``A | B`` (``A`` white,
``B`` black) together with a permutation of ``C`` written as cycles, with at
most one underlined (marked) element.

Cycles are kept canonical: each rotated so its minimum comes first and the
cycles sorted by minimum. A marked cycle is instead rotated so that the marked
element comes first; it still sorts by its minimum.

Text form, one line: ``*2,*12,8,_*9|(6,10)(_3,4)``. Black elements carry
``*``, the marked element carries a leading ``_``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Optional

Family = Literal["A", "B", "C", "D"]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class StructureError(ValueError):
    """A structure violates its invariants or a map's precondition."""


@dataclass(frozen=True)
class Composition:
    m: int
    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]

    def __post_init__(self) -> None:
        if self.A & self.B or self.A & self.C or self.B & self.C:
            raise StructureError("composition blocks are not disjoint")
        if self.A | self.B | self.C != frozenset(range(1, 2 * self.m + 1)):
            raise StructureError(f"composition does not cover [1..{2 * self.m}]")


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    i: int
    m: int

    def __str__(self) -> str:
        return f"{self.family}_{self.i}({self.m})"


def canonical_cycles(
    cycles: Iterable[Iterable[int]], mark: Optional[int] = None
) -> tuple[tuple[int, ...], ...]:
    """Rotate and sort cycles into canonical order; the marked cycle leads with ``mark``."""
    out = []
    for cyc in cycles:
        cyc = tuple(cyc)
        if not cyc:
            raise StructureError("empty cycle")
        lead = mark if mark is not None and mark in cyc else min(cyc)
        k = cyc.index(lead)
        out.append(cyc[k:] + cyc[:k])
    out.sort(key=min)
    return tuple(out)


@dataclass(frozen=True)
class PartiallyColoredPermutation:
    """An immutable structure ``(line | cycles)`` with an optional marked element.

    ``mark`` is the marked element itself (elements of ``[2m]`` are distinct,
    so this identifies the line position or cycle entry). The constructor does
    not canonicalize; use :meth:`build` for untrusted input.
    """

    m: int
    line: tuple[int, ...]
    black: frozenset[int]
    cycles: tuple[tuple[int, ...], ...] = ()
    mark: Optional[int] = None

    @classmethod
    def build(
        cls,
        m: int,
        line: Iterable[int],
        black: Iterable[int],
        cycles: Iterable[Iterable[int]] = (),
        mark: Optional[int] = None,
    ) -> PartiallyColoredPermutation:
        p = cls(m, tuple(line), frozenset(black), canonical_cycles(cycles, mark), mark)
        p.validate()
        return p

    # --- derived sets -------------------------------------------------------

    @property
    def whites(self) -> tuple[int, ...]:
        return tuple(e for e in self.line if e not in self.black)

    @property
    def cycle_elements(self) -> frozenset[int]:
        return frozenset(e for cyc in self.cycles for e in cyc)

    @property
    def composition(self) -> Composition:
        return Composition(
            self.m, frozenset(self.whites), self.black, self.cycle_elements
        )

    @property
    def n_white(self) -> int:
        return len(self.line) - len(self.black)

    @property
    def i(self) -> int:
        """Index ``i`` with ``|B| = m + i``."""
        return len(self.black) - self.m

    @property
    def mark_kind(self) -> Optional[Literal["white", "black", "cycle"]]:
        if self.mark is None:
            return None
        if self.mark in self.black:
            return "black"
        if self.mark in self.line:
            return "white"
        return "cycle"

    @property
    def marked_cycle(self) -> Optional[tuple[int, ...]]:
        if self.mark_kind != "cycle":
            return None
        for cyc in self.cycles:
            if cyc[0] == self.mark:
                return cyc
        raise StructureError(f"marked element {self.mark} does not lead its cycle")

    @property
    def tag(self) -> FamilyTag:
        family: Family = {None: "D", "white": "A", "black": "B", "cycle": "C"}[self.mark_kind]
        return FamilyTag(family, self.i, self.m)

    def weight(self) -> Fraction:
        """``(1/2)`` per white element and per cycle; the mark does not contribute."""
        return Fraction(1, 2 ** (self.n_white + len(self.cycles)))

    def with_mark(self, mark: Optional[int]) -> PartiallyColoredPermutation:
        """Same structure with ``mark`` moved (cycles re-rotated accordingly)."""
        cycles = self.cycles
        if self.mark_kind == "cycle" or (mark is not None and mark not in self.line):
            cycles = canonical_cycles(cycles, mark)
        return PartiallyColoredPermutation(self.m, self.line, self.black, cycles, mark)

    # --- invariants ---------------------------------------------------------

    def problems(self) -> list[str]:
        """Return a list of invariant violations (empty when well formed)."""
        errs = []
        if self.m < 1:
            errs.append(f"m must be positive, got {self.m}")
        line_set = set(self.line)
        if len(line_set) != len(self.line):
            errs.append("line repeats an element")
        if not self.black <= line_set:
            errs.append("black elements missing from the line")
        flat = [e for cyc in self.cycles for e in cyc]
        if len(set(flat)) != len(flat):
            errs.append("cycles repeat an element")
        if any(not cyc for cyc in self.cycles):
            errs.append("empty cycle")
        if line_set & set(flat):
            errs.append("element both in line and in cycles")
        if line_set | set(flat) != set(range(1, 2 * self.m + 1)):
            errs.append(f"elements do not cover [1..{2 * self.m}]")
        if self.cycles and all(self.cycles) and canonical_cycles(self.cycles, self.mark) != self.cycles:
            errs.append("cycles are not in canonical form")
        if self.mark is not None and self.mark not in line_set and self.mark not in set(flat):
            errs.append(f"mark {self.mark} is not an element")
        return errs

    def validate(self) -> None:
        errs = self.problems()
        if errs:
            raise StructureError(f"{self.to_text()}: " + "; ".join(errs))

    # --- text form ----------------------------------------------------------

    def _fmt(self, e: int) -> str:
        s = f"*{e}" if e in self.black else str(e)
        return "_" + s if e == self.mark else s

    def to_text(self) -> str:
        line = ",".join(self._fmt(e) for e in self.line)
        cycles = "".join(
            "(" + ",".join(("_" if e == self.mark else "") + str(e) for e in cyc) + ")"
            for cyc in self.cycles
        )
        return f"{line}|{cycles}"

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def from_text(cls, text: str, m: Optional[int] = None) -> PartiallyColoredPermutation:
        """Parse the one-line text form; ``m`` defaults to half the element count."""
        if text.count("|") != 1:
            raise StructureError(f"expected exactly one '|' in {text!r}")
        left, right = text.strip().split("|")
        line, black, mark = [], [], None
        for tok in filter(None, (t.strip() for t in left.split(","))):
            if tok.startswith("_"):
                if mark is not None:
                    raise StructureError("more than one mark")
                tok = tok[1:]
                mark = int(tok.lstrip("*"))
            e = int(tok.lstrip("*"))
            if tok.startswith("*"):
                black.append(e)
            line.append(e)
        cycles = []
        if _CYCLE_RE.sub("", right).strip():
            raise StructureError(f"malformed cycle list {right!r}")
        for body in _CYCLE_RE.findall(right):
            cyc = []
            for tok in filter(None, (t.strip() for t in body.split(","))):
                if tok.startswith("_"):
                    if mark is not None:
                        raise StructureError("more than one mark")
                    tok = tok[1:]
                    mark = int(tok)
                cyc.append(int(tok))
            cycles.append(cyc)
        n = len(line) + sum(len(c) for c in cycles)
        if m is None:
            if n % 2:
                raise StructureError(f"odd number of elements ({n}) in {text!r}")
            m = n // 2
        return cls.build(m, line, black, cycles, mark)
