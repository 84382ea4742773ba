"""Brute-force enumeration of all semigroups of one genus.

Deliberately naive and independent of the tree: every ``g``-subset of
``{1, ..., 2g - 1}`` is tried as a gap set, and type and leaf status are
decided straight from their definitions on plain Python sets.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .semigroup import SemigroupError

ORACLE_MAX_GENUS = 10


class GenusTooLargeForOracle(SemigroupError):
    pass


def _is_closed(gaps: frozenset[int]) -> bool:
    top = max(gaps)
    members = [x for x in range(1, top + 1) if x not in gaps]
    return not any(x + y in gaps for x in members for y in members)


def _type(gaps: frozenset[int]) -> int:
    # x is pseudo-Frobenius iff no positive element s puts x + s back among the gaps
    top = max(gaps)
    positive = [s for s in range(1, top + 1) if s not in gaps]
    return sum(1 for x in gaps if all(x + s not in gaps for s in positive))


def _is_leaf(gaps: frozenset[int]) -> bool:
    top = max(gaps)
    m = min(x for x in range(1, top + 2) if x not in gaps)

    def member(x):
        return x >= 0 and x not in gaps

    for x in range(top + 1, top + m + 1):
        if not any(member(s) and member(x - s) for s in range(1, x)):
            return False
    return True


@dataclass
class OracleResult:
    genus: int
    semigroups: list[frozenset[int]] = field(repr=False)
    by_type: dict[int, int]
    leaves_by_type: dict[int, int]

    def row(self) -> list[int]:
        return [self.by_type.get(t, 0) for t in range(1, self.genus + 1)]

    def leaf_row(self) -> list[int]:
        return [self.leaves_by_type.get(t, 0) for t in range(1, self.genus + 1)]


def enumerate_brute(genus: int) -> OracleResult:
    if genus > ORACLE_MAX_GENUS:
        raise GenusTooLargeForOracle(f"oracle is limited to genus <= {ORACLE_MAX_GENUS}")
    if genus < 1:
        raise ValueError("genus must be positive")
    found = []
    by_type: Counter[int] = Counter()
    leaves: Counter[int] = Counter()
    for candidate in combinations(range(1, 2 * genus), genus):
        gaps = frozenset(candidate)
        if not _is_closed(gaps):
            continue
        found.append(gaps)
        t = _type(gaps)
        by_type[t] += 1
        if _is_leaf(gaps):
            leaves[t] += 1
    return OracleResult(genus, found, dict(by_type), dict(leaves))
