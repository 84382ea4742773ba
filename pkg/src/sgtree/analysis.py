"""Finite-range verdicts on count tables: unimodality, monotonicity, diagonals, leaves."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Mapping, NamedTuple, Sequence

from .tree import CountTable, iter_semigroups

HOLDS, VIOLATED, VACUOUS = "holds", "violated", "vacuous"

# largest leaf type per genus as published alongside the leaf conjecture
PUBLISHED_LEAF_TYPE_MAXIMA = {
    7: 3, 8: 3, 9: 3, 10: 4, 11: 5, 12: 5, 13: 5, 14: 6, 15: 7, 16: 7, 17: 7, 18: 8,
    19: 9, 20: 9, 21: 9, 22: 10, 23: 11, 24: 11, 25: 11, 26: 12, 27: 13, 28: 13,
    29: 13, 30: 14,
}


@dataclass(frozen=True)
class Witness:
    g: int
    t: int | None
    lhs: int | str
    rhs: int | str


@dataclass
class ConjectureReport:
    name: str
    scope: dict
    witnesses: list[Witness] = field(default_factory=list)
    checked: int = 0
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if self.witnesses:
            return VIOLATED
        return HOLDS if self.checked else VACUOUS

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "scope": self.scope,
            "verdict": self.verdict,
            "witnesses": [asdict(w) for w in self.witnesses],
            "details": self.details,
        }

    def summary(self) -> str:
        s = self.scope
        line = f"{self.name}: {self.verdict} (g {s['g_min']}..{s['g_max']}, {self.checked} checks)"
        for w in self.witnesses:
            line += f"\n  witness g={w.g} t={w.t}: {w.lhs} vs {w.rhs}"
        return line


def _scope(g_min, g_max, t_min=None, t_max=None) -> dict:
    return {"g_min": g_min, "g_max": g_max, "t_min": t_min, "t_max": t_max}


def is_unimodal(seq: Sequence[int]) -> tuple[bool, int | None]:
    """Whether ``seq`` rises weakly then falls weakly, with the least peak index."""
    if not seq:
        raise ValueError("empty sequence")
    top = 0
    while top + 1 < len(seq) and seq[top] <= seq[top + 1]:
        top += 1
    if any(seq[k] < seq[k + 1] for k in range(top, len(seq) - 1)):
        return False, None
    while top > 0 and seq[top - 1] == seq[top]:
        top -= 1
    return True, top


def check_row_unimodality(table: CountTable, name: str = "row-unimodality") -> ConjectureReport:
    """Unimodality of every row ``t -> table(g, t)``; peaks reported as types."""
    report = ConjectureReport(name, _scope(1, table.genus_max, 1, table.genus_max))
    peaks = {}
    for g in range(1, table.genus_max + 1):
        row = table.row(g)
        ok, peak = is_unimodal(row)
        report.checked += 1
        if ok:
            peaks[g] = peak + 1
            continue
        top = 0
        while row[top] <= row[top + 1]:
            top += 1
        rise = next(k for k in range(top, len(row) - 1) if row[k] < row[k + 1])
        report.witnesses.append(Witness(g, rise + 2, row[rise], row[rise + 1]))
    report.details["peaks"] = peaks
    return report


def check_column_monotonicity(table: CountTable, types: Sequence[int] | None = None,
                              name: str = "column-monotonicity") -> ConjectureReport:
    """Strict growth ``table(g, t) < table(g + 1, t)`` for ``t < g < genus_max``.

    The pair starting on the diagonal is left out: ``n(t, t) = n(t + 1, t) = 1``.
    Witnesses carry ``g`` of the pair ``(g, g + 1)``.
    """
    G = table.genus_max
    if types is None:
        types = range(2, G + 1)
    types = list(types)
    report = ConjectureReport(name, _scope(1, G, min(types, default=None), max(types, default=None)))
    for t in types:
        for g in range(t + 1, G):
            lhs, rhs = table.at(g, t), table.at(g + 1, t)
            report.checked += 1
            if not lhs < rhs:
                report.witnesses.append(Witness(g, t, lhs, rhs))
    return report


def observed_onset(table: CountTable, ell: int) -> int | None:
    """Smallest genus from which ``table(g, g - ell)`` stays at its last value."""
    G = table.genus_max
    if G <= ell:
        return None
    last = table.at(G, G - ell)
    g = G
    while g - 1 > ell and table.at(g - 1, g - 1 - ell) == last:
        g -= 1
    return g


def stabilizer_report(table: CountTable, vset_sizes: Mapping[int, int]) -> ConjectureReport:
    """``n(g, g - ell) == |V(ell)|`` for ``3 ell - 1 <= g <= genus_max``."""
    G = table.genus_max
    ells = sorted(e for e in vset_sizes if e >= 1 and 3 * e - 1 <= G)
    report = ConjectureReport("stabilizer", _scope(min((3 * e - 1 for e in ells), default=G), G))
    details = {}
    for ell in ells:
        size = vset_sizes[ell]
        for g in range(3 * ell - 1, G + 1):
            report.checked += 1
            n = table.at(g, g - ell)
            if n != size:
                report.witnesses.append(Witness(g, g - ell, n, size))
        onset = observed_onset(table, ell)
        details[ell] = {
            "value": size,
            "threshold": 3 * ell - 1,
            "onset": onset,
            "early": onset is not None and onset < 3 * ell - 1,
        }
    report.details["diagonals"] = details
    return report


def leaf_type_bound(genus: int) -> int:
    q, r = divmod(genus, 4)
    return {0: 2 * q - 1, 1: 2 * q - 1, 2: 2 * q, 3: 2 * q + 1}[r]


def max_leaf_types(leaf_table: CountTable) -> dict[int, int | None]:
    out = {}
    for g in range(1, leaf_table.genus_max + 1):
        nonzero = [t for t in range(1, g + 1) if leaf_table.at(g, t)]
        out[g] = max(nonzero) if nonzero else None
    return out


def leaf_type_bound_report(leaf_table: CountTable) -> ConjectureReport:
    """Leaf types against the conjectured bound and the published per-genus maxima."""
    G = leaf_table.genus_max
    report = ConjectureReport("leaf-type-bound", _scope(2, G))
    maxima = max_leaf_types(leaf_table)
    for g in range(2, G + 1):
        top = maxima[g]
        if top is None:
            continue
        report.checked += 1
        if top > leaf_type_bound(g):
            report.witnesses.append(Witness(g, top, top, leaf_type_bound(g)))
        published = PUBLISHED_LEAF_TYPE_MAXIMA.get(g)
        if published is not None and published != top:
            report.witnesses.append(Witness(g, top, top, f"published {published}"))
    report.details["max_leaf_type"] = {g: maxima[g] for g in range(2, G + 1)}
    report.details["bound"] = {g: leaf_type_bound(g) for g in range(2, G + 1)}
    return report


class RatioRow(NamedTuple):
    g: int
    leaves: int
    total: int
    ratio: Decimal


def ratio_series(table: CountTable, leaf_table: CountTable) -> list[RatioRow]:
    rows = []
    for g in range(1, min(table.genus_max, leaf_table.genus_max) + 1):
        leaves, total = leaf_table.row_sum(g), table.row_sum(g)
        ratio = (Decimal(leaves) / Decimal(total)).quantize(Decimal("0.0001"), ROUND_HALF_UP)
        rows.append(RatioRow(g, leaves, total, ratio))
    return rows


def ratio_trend_report(rows: Sequence[RatioRow], g_min: int) -> ConjectureReport:
    """Whether the rounded leaf ratio never decreases from ``g_min`` on."""
    rows = [r for r in rows if r.g >= g_min]
    report = ConjectureReport("leaf-ratio-trend", _scope(g_min, rows[-1].g if rows else g_min))
    for a, b in zip(rows, rows[1:]):
        report.checked += 1
        if b.ratio < a.ratio:
            report.witnesses.append(Witness(a.g, None, str(a.ratio), str(b.ratio)))
    return report


def bras_amoros_check(n_series: Sequence[int]) -> tuple[ConjectureReport, ConjectureReport]:
    """Strong form ``n(g-2) + n(g-1) <= n(g)`` and weak form ``n(g) < n(g+1)``.

    ``n_series[0]`` is ``n(1)``.
    """
    n = {g: c for g, c in enumerate(n_series, start=1)}
    G = len(n_series)
    strong = ConjectureReport("bras-amoros", _scope(3, G))
    for g in range(3, G + 1):
        strong.checked += 1
        if n[g - 2] + n[g - 1] > n[g]:
            strong.witnesses.append(Witness(g, None, n[g - 2] + n[g - 1], n[g]))
    weak = ConjectureReport("bras-amoros-weak", _scope(1, G))
    for g in range(1, G):
        weak.checked += 1
        if not n[g] < n[g + 1]:
            weak.witnesses.append(Witness(g, None, n[g], n[g + 1]))
    return strong, weak


def shift_bijection_report(genus_max: int) -> ConjectureReport:
    """Exhaustive check that shifting by one maps ``L(g, t)`` onto ``L(g+1, t+1)``.

    Covers every ``1 <= t <= g <= genus_max`` with ``3t >= 2g - 1``; also
    checks that ``Gaps \\ PF`` is unchanged by the shift.
    """
    from .gapvectors import shift_down, shift_up

    by_class: dict[tuple[int, int], set] = {}
    for s in iter_semigroups(genus_max + 1):
        if s.genus:
            by_class.setdefault((s.genus, s.type), set()).add(s)
    report = ConjectureReport("shift-bijection", _scope(1, genus_max))
    for g in range(1, genus_max + 1):
        for t in range(1, g + 1):
            if 3 * t < 2 * g - 1:
                continue
            source = by_class.get((g, t), set())
            target = by_class.get((g + 1, t + 1), set())
            image = set()
            for s in source:
                report.checked += 1
                up = shift_up(s)
                image.add(up)
                kept = set(s.gaps) - set(s.pseudo_frobenius.elements)
                if (up.genus, up.type) != (g + 1, t + 1) or shift_down(up) != s or \
                        kept != set(up.gaps) - set(up.pseudo_frobenius.elements):
                    report.witnesses.append(Witness(g, t, repr(s), repr(up)))
            if image != target:
                report.witnesses.append(Witness(g, t, len(image), len(target)))
    return report
