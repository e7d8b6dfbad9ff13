"""Exhaustive enumeration of the weighted families and the maps between them.

For fixed ``m`` and ``i`` the families are

* ``D_i(m)``: structures with ``m + i`` black elements and no mark,
* ``A_i(m)``, ``B_i(m)``, ``C_i(m)``: the same with one white, black or
  cycle element marked.

:func:`recolor` turns the marked black element white (``B_{i+1} -> A_i``).
:func:`delta` moves the head of the marked cycle, and a growing run of its
successors, onto the end of the line (``C_{i-1} -> C_i | D_i``).
:func:`verify_model` checks every weight identity and bijection by brute force.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator, Optional

from bmkit.arith import HALF, binomial, factorial
from bmkit.core import big_d_single_sum
from bmkit.perm import (
    Family,
    FamilyTag,
    PartiallyColoredPermutation as PCP,
    StructureError,
    canonical_cycles,
)
from bmkit.report import CheckResult, compare

DEFAULT_MAX_M = 4
MAX_M_ENV = "BMKIT_ORACLE_MAX_M"

FAMILIES: tuple[Family, ...] = ("A", "B", "C", "D")


class EnumerationBoundError(ValueError):
    """``m`` exceeds the enumeration bound."""


def enumeration_bound() -> int:
    """Largest ``m`` the oracle will enumerate; ``$BMKIT_ORACLE_MAX_M`` may raise it."""
    raw = os.environ.get(MAX_M_ENV)
    if raw is None:
        return DEFAULT_MAX_M
    try:
        return int(raw)
    except ValueError as exc:
        raise EnumerationBoundError(f"{MAX_M_ENV} must be an integer, got {raw!r}") from exc


def _check_args(m: int, i: int, max_m: Optional[int]) -> None:
    bound = enumeration_bound() if max_m is None else max_m
    if not 1 <= m <= bound:
        raise EnumerationBoundError(
            f"enumeration supports 1 <= m <= {bound}, got m={m} (set {MAX_M_ENV} to raise it)"
        )
    if not 0 <= i <= m:
        raise ValueError(f"family index needs 0 <= i <= m, got m={m}, i={i}")


def cycle_structures(elements: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """All permutations of ``elements`` as canonical cycle lists.

    Generated from the one-line permutations in lexicographic order.
    """
    out = []
    for image in permutations(elements):
        sigma = dict(zip(elements, image))
        seen: set[int] = set()
        cycles = []
        for start in elements:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            e = sigma[start]
            while e != start:
                cyc.append(e)
                seen.add(e)
                e = sigma[e]
            cycles.append(tuple(cyc))
        out.append(canonical_cycles(cycles))
    return out


def _enumerate_unmarked(m: int, i: int) -> Iterator[PCP]:
    ground = tuple(range(1, 2 * m + 1))
    for B in combinations(ground, m + i):
        black = frozenset(B)
        rest = tuple(e for e in ground if e not in black)
        for j in range(len(rest) + 1):
            for A in combinations(rest, j):
                white = set(A)
                C = tuple(e for e in rest if e not in white)
                sigmas = cycle_structures(C)
                for line in permutations(sorted(black | white)):
                    for cycles in sigmas:
                        yield PCP(m, line, black, cycles)


def _marks(p: PCP, family: Family) -> Iterator[PCP]:
    if family == "A":
        for e in p.line:
            if e not in p.black:
                yield PCP(m=p.m, line=p.line, black=p.black, cycles=p.cycles, mark=e)
    elif family == "B":
        for e in p.line:
            if e in p.black:
                yield PCP(m=p.m, line=p.line, black=p.black, cycles=p.cycles, mark=e)
    else:
        for e in sorted(p.cycle_elements):
            yield PCP(p.m, p.line, p.black, canonical_cycles(p.cycles, e), e)


def enumerate_family(
    m: int, i: int, family: Family, max_m: Optional[int] = None
) -> Iterator[PCP]:
    """Yield every member of ``family``\\ ``_i(m)`` exactly once, in a fixed order.

    Marked families are produced by decorating each unmarked structure with
    every legal mark, in line order (``A``, ``B``) or element order (``C``).
    """
    _check_args(m, i, max_m)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family == "D":
        yield from _enumerate_unmarked(m, i)
        return
    for p in _enumerate_unmarked(m, i):
        yield from _marks(p, family)


def family_weight(m: int, i: int, family: Family, max_m: Optional[int] = None) -> Fraction:
    return sum((p.weight() for p in enumerate_family(m, i, family, max_m)), Fraction(0))


def unweighted_count(m: int, i: int) -> int:
    """``|D_i(m)|`` from the counting formula with every weight set to 1."""
    n = m - i
    return binomial(2 * m, n) * sum(
        binomial(n, j) * factorial(m + i + j) * factorial(n - j) for j in range(n + 1)
    )


# --- maps -------------------------------------------------------------------


def weight(p: PCP) -> Fraction:
    return p.weight()


def recolor(p: PCP) -> PCP:
    """Turn the marked black element white: ``B_{i+1}(m) -> A_i(m)``."""
    if p.mark_kind != "black":
        raise StructureError(f"recolor needs a marked black element: {p}")
    return PCP(p.m, p.line, p.black - {p.mark}, p.cycles, p.mark)


def recolor_inverse(p: PCP) -> PCP:
    """Turn the marked white element black: ``A_i(m) -> B_{i+1}(m)``."""
    if p.mark_kind != "white":
        raise StructureError(f"recolor_inverse needs a marked white element: {p}")
    return PCP(p.m, p.line, p.black | {p.mark}, p.cycles, p.mark)


@dataclass(frozen=True)
class DeltaImage:
    """The ordered images ``Delta_1, ..., Delta_k`` of one ``C_{i-1}`` structure."""

    source: PCP
    images: tuple[PCP, ...]

    @property
    def tags(self) -> tuple[FamilyTag, ...]:
        return tuple(q.tag for q in self.images)

    @property
    def k(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[PCP]:
        return iter(self.images)

    def __len__(self) -> int:
        return len(self.images)


def delta(p: PCP) -> DeltaImage:
    """Images of a structure whose marked cycle is ``(i_1 i_2 ... i_k)``, ``i_1`` marked.

    ``Delta_j`` appends ``i_1`` (black) and ``i_2..i_j`` (white) to the line.
    For ``j < k`` the rest of the cycle stays, marked at ``i_{j+1}``; ``Delta_k``
    drops the cycle and carries no mark.
    """
    c0 = p.marked_cycle
    if c0 is None:
        raise StructureError(f"delta needs a marked cycle element: {p}")
    others = tuple(c for c in p.cycles if c is not c0)
    black = p.black | {c0[0]}
    k = len(c0)
    images = []
    for j in range(1, k + 1):
        line = p.line + c0[:j]
        if j < k:
            rest = c0[j:]
            cycles = canonical_cycles(others + (rest,), rest[0])
            images.append(PCP(p.m, line, black, cycles, rest[0]))
        else:
            images.append(PCP(p.m, line, black, others, None))
    return DeltaImage(p, tuple(images))


def delta_inverse(q: PCP) -> PCP:
    """Recover the ``C_{i-1}`` preimage of a ``C_i`` or ``D_i`` structure.

    The last black element of the line and the white run after it become the
    head of the marked cycle, the black element carrying the mark.
    """
    if q.mark_kind in ("white", "black"):
        raise StructureError(f"delta_inverse needs an unmarked or cycle-marked structure: {q}")
    pos = next((t for t in range(len(q.line) - 1, -1, -1) if q.line[t] in q.black), None)
    if pos is None:
        raise StructureError(f"delta_inverse needs a black element in the line: {q}")
    head = q.line[pos:]
    b = head[0]
    if q.mark is None:
        cycles = q.cycles + (head,)
    else:
        marked = q.marked_cycle
        cycles = tuple(c for c in q.cycles if c is not marked) + (head + marked,)
    return PCP(q.m, q.line[:pos], q.black - {b}, canonical_cycles(cycles, b), b)


# --- verification -----------------------------------------------------------


@dataclass
class _FamilyStats:
    count: int = 0
    weight: Fraction = Fraction(0)
    bad: Optional[str] = None


def _scan(m: int, i: int, family: Family, max_m: Optional[int]) -> _FamilyStats:
    stats = _FamilyStats()
    expected = FamilyTag(family, i, m)
    exponents: Counter[int] = Counter()
    for p in enumerate_family(m, i, family, max_m):
        stats.count += 1
        exponents[p.n_white + len(p.cycles)] += 1
        if stats.bad is None:
            errs = p.problems()
            if p.tag != expected:
                errs.append(f"classified as {p.tag}, expected {expected}")
            if errs:
                stats.bad = f"{p}: " + "; ".join(errs)
    stats.weight = sum((Fraction(c, 2**e) for e, c in exponents.items()), Fraction(0))
    return stats


def _check_recolor(m: int, i: int, max_m: Optional[int]) -> tuple[int, int, str]:
    """Return (#good forward maps, #good backward maps, first witness)."""
    target = FamilyTag("A", i, m)
    source = FamilyTag("B", i + 1, m)
    good_fwd = good_bwd = 0
    witness = ""
    for p in enumerate_family(m, i + 1, "B", max_m):
        q = recolor(p)
        if (
            q.tag == target
            and not q.problems()
            and recolor_inverse(q) == p
            and q.weight() == p.weight() / 2
        ):
            good_fwd += 1
        elif not witness:
            witness = f"recolor({p}) = {q}"
    for q in enumerate_family(m, i, "A", max_m):
        p = recolor_inverse(q)
        if p.tag == source and not p.problems() and recolor(p) == q:
            good_bwd += 1
        elif not witness:
            witness = f"recolor_inverse({q}) = {p}"
    return good_fwd, good_bwd, witness


def _check_delta(m: int, i: int, max_m: Optional[int]) -> tuple[int, int, int, int, str]:
    """Return (#sources with correct weight factors, #images, #images whose inverse
    is their source, #targets reached back through an inverse, first witness)."""
    allowed = {FamilyTag("C", i, m), FamilyTag("D", i, m)}
    good_factor = n_images = good_inverse = 0
    witness = ""
    for p in enumerate_family(m, i - 1, "C", max_m):
        img = delta(p)
        k = img.k
        w = p.weight()
        factors = [HALF ** (j - 1) for j in range(1, k)] + [HALF ** (k - 2)]
        if [q.weight() for q in img] == [f * w for f in factors] and k == len(p.marked_cycle):
            good_factor += 1
        elif not witness:
            witness = f"weights of delta({p}) = {[str(q.weight()) for q in img]}"
        if len(set(img.images)) != k and not witness:
            witness = f"delta({p}) repeats an image"
        for q in img:
            n_images += 1
            if q.tag in allowed and not q.problems() and delta_inverse(q) == p:
                good_inverse += 1
            elif not witness:
                witness = f"delta({p}) contains {q} ({q.tag})"
    reached = 0
    for family in ("C", "D"):
        for q in enumerate_family(m, i, family, max_m):
            p = delta_inverse(q)
            if p.tag == FamilyTag("C", i - 1, m) and not p.problems() and q in delta(p).images:
                reached += 1
            elif not witness:
                witness = f"delta_inverse({q}) = {p} does not map back"
    return good_factor, n_images, good_inverse, reached, witness


def verify_model(m: int, max_m: Optional[int] = None) -> list[CheckResult]:
    """Exhaustively verify the combinatorial model for one ``m``.

    Checks, for every admissible ``i``: family weights against ``D_i(m)``;
    the recoloring bijection; the delta partition and its weight factors; the
    strict inequality ``w(A_i) < w(B_i)`` and the product identities that reduce
    log-concavity to it.
    """
    _check_args(m, 0, max_m)
    D = big_d_single_sum(m)
    stats = {(f, i): _scan(m, i, f, max_m) for i in range(m + 1) for f in FAMILIES}
    w = {key: s.weight for key, s in stats.items()}
    n = {key: s.count for key, s in stats.items()}
    results: list[CheckResult] = []

    for i in range(m + 1):
        bad = next((stats[(f, i)].bad for f in FAMILIES if stats[(f, i)].bad), "")
        results.append(
            compare("structures-valid", m, i, bad == "", True, witness=bad)
        )
        results.append(compare("count-D", m, i, n[("D", i)], unweighted_count(m, i)))
        results.append(compare("weight-D", m, i, w[("D", i)], D[i]))
        results.append(compare("weight-B", m, i, w[("B", i)], (m + i) * D[i]))
        results.append(
            compare("weight-A+C", m, i, w[("A", i)] + w[("C", i)], (m - i) * D[i])
        )

    for i in range(m):
        fwd, bwd, witness = _check_recolor(m, i, max_m)
        total = n[("B", i + 1)]
        results.append(
            compare("recolor-bijection", m, i, fwd, n[("A", i)], witness=witness)
        )
        results.append(compare("recolor-inverse", m, i, bwd, total, witness=witness))
        results.append(compare("recolor-weight", m, i, w[("B", i + 1)] / 2, w[("A", i)]))

    for i in range(1, m + 1):
        good_factor, n_images, good_inverse, reached, witness = _check_delta(m, i, max_m)
        targets = n[("C", i)] + n[("D", i)]
        results.append(
            compare("delta-weight-factors", m, i, good_factor, n[("C", i - 1)], witness=witness)
        )
        results.append(compare("delta-image-count", m, i, n_images, targets, witness=witness))
        results.append(
            compare("delta-partition", m, i, min(good_inverse, reached), targets, witness=witness)
        )
        results.append(
            compare("delta-weight", m, i, 2 * w[("C", i - 1)], w[("C", i)] + w[("D", i)])
        )

    for i in range(1, m):
        results.append(compare("A<B", m, i, w[("A", i)], w[("B", i)], relation="<"))
        results.append(
            compare(
                "product-BA",
                m,
                i,
                w[("B", i + 1)] * w[("A", i - 1)],
                w[("B", i)] * w[("A", i)],
            )
        )
        lhs = w[("B", i + 1)] * (w[("A", i - 1)] + w[("C", i - 1)])
        rhs = w[("B", i)] * (w[("A", i)] + w[("C", i)] + w[("D", i)])
        results.append(compare("log-concavity-chain", m, i, lhs, rhs, relation="<"))
    return results
