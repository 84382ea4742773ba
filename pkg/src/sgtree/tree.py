"""Walking the semigroup tree and tabulating it by genus and type."""
from __future__ import annotations

import os
from collections.abc import Callable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numba
import numpy as np

from . import _kernel
from .semigroup import NATURALS, NumericalSemigroup

MAX_GENUS = _kernel.MAX_GENUS
STATISTICS = frozenset({"counts", "leaf_counts", "descendant_profiles"})


def children(s: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Children of ``s``, ordered by the removed generator."""
    return [s.without(x) for x in s.effective_generators]


def is_leaf(s: NumericalSemigroup) -> bool:
    return not s.effective_generators


def descendant_type_profile(s: NumericalSemigroup) -> tuple[int, ...]:
    """``v[i-1]`` is the number of children of type ``i``, for ``i <= g + 1``."""
    profile = [0] * (s.genus + 1)
    for c in children(s):
        profile[c.type - 1] += 1
    return tuple(profile)


@dataclass(frozen=True)
class ExplorationConfig:
    genus_max: int
    parallel_split_depth: int = 0
    collect: frozenset[str] = STATISTICS
    threads: int | None = None

    def __post_init__(self):
        if not 1 <= self.genus_max <= MAX_GENUS:
            raise ValueError(f"genus_max must lie in [1, {MAX_GENUS}]")
        if not 0 <= self.parallel_split_depth < self.genus_max:
            raise ValueError("parallel_split_depth must lie in [0, genus_max)")
        unknown = set(self.collect) - STATISTICS
        if unknown:
            raise ValueError(f"unknown statistics: {sorted(unknown)}")
        if self.threads is not None and self.threads < 1:
            raise ValueError("threads must be positive")


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("SGTREE_THREADS", "0")) or numba.config.NUMBA_NUM_THREADS
    return max(1, min(threads, numba.config.NUMBA_NUM_THREADS))


Visitor = Callable[[NumericalSemigroup, int], object]


def _visit_subtree(root: NumericalSemigroup, genus_max: int, visitor: Visitor) -> None:
    stack = [root]
    while stack:
        s = stack.pop()
        visitor(s, s.genus)
        if s.genus < genus_max:
            stack.extend(reversed(children(s)))


def explore(config: ExplorationConfig, visitor: Visitor) -> None:
    """Call ``visitor(s, genus)`` once for every semigroup up to the genus bound.

    With a positive split depth and more than one thread the subtrees below
    that genus are handed to a thread pool, so the visitor must tolerate
    concurrent calls.  A visitor exception aborts the walk and propagates.
    """
    split = config.parallel_split_depth
    workers = config.threads or 1
    if split == 0 or workers == 1:
        _visit_subtree(NATURALS, config.genus_max, visitor)
        return
    frontier = []
    stack = [NATURALS]
    while stack:
        s = stack.pop()
        if s.genus == split:
            frontier.append(s)
            continue
        visitor(s, s.genus)
        stack.extend(reversed(children(s)))
    with ThreadPoolExecutor(workers) as pool:
        futures = [pool.submit(_visit_subtree, s, config.genus_max, visitor) for s in frontier]
        for f in futures:
            f.result()


def iter_semigroups(genus_max: int) -> Iterator[NumericalSemigroup]:
    """Depth-first, children in canonical order, root included."""
    stack = [NATURALS]
    while stack:
        s = stack.pop()
        yield s
        if s.genus < genus_max:
            stack.extend(reversed(children(s)))


def semigroups_of_genus(genus: int) -> list[NumericalSemigroup]:
    return [s for s in iter_semigroups(genus) if s.genus == genus]


class CountTable:
    """Counts indexed by ``(genus, type)`` with ``1 <= type <= genus <= genus_max``."""

    def __init__(self, genus_max: int, data=None):
        self.genus_max = genus_max
        shape = (genus_max + 1, genus_max + 1)
        if data is None:
            data = np.zeros(shape, dtype=np.uint64)
        data = np.asarray(data)
        self.data = np.zeros(shape, dtype=np.uint64)
        rows, cols = min(data.shape[0], shape[0]), min(data.shape[1], shape[1])
        self.data[:rows, :cols] = data[:rows, :cols]
        # genus 0 and type 0 carry no entries
        self.data[0, :] = 0
        self.data[:, 0] = 0
        self.data[np.triu_indices(genus_max + 1, 1)] = 0

    @classmethod
    def from_rows(cls, rows: dict[int, list[int]] | list[list[int]]) -> CountTable:
        if not isinstance(rows, dict):
            rows = {g: row for g, row in enumerate(rows, start=1)}
        table = cls(max(rows))
        for g, row in rows.items():
            if len(row) > g:
                raise ValueError(f"row {g} has more than {g} entries")
            table.data[g, 1 : len(row) + 1] = row
        return table

    def at(self, genus: int, type_: int) -> int:
        if 1 <= type_ <= genus <= self.genus_max:
            return int(self.data[genus, type_])
        return 0

    def row(self, genus: int) -> list[int]:
        return [int(c) for c in self.data[genus, 1 : genus + 1]]

    def column(self, type_: int) -> list[int]:
        """Entries ``(g, type_)`` for ``g = type_ .. genus_max``."""
        return [int(c) for c in self.data[type_:, type_]]

    def row_sum(self, genus: int) -> int:
        return int(self.data[genus].sum())

    def totals(self) -> list[int]:
        return [self.row_sum(g) for g in range(1, self.genus_max + 1)]

    def items(self) -> Iterator[tuple[int, int, int]]:
        for g in range(1, self.genus_max + 1):
            for t in range(1, g + 1):
                yield g, t, int(self.data[g, t])

    def __add__(self, other: CountTable) -> CountTable:
        if other.genus_max != self.genus_max:
            raise ValueError("tables have different genus bounds")
        return CountTable(self.genus_max, self.data + other.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CountTable)
            and other.genus_max == self.genus_max
            and np.array_equal(self.data, other.data)
        )

    def __le__(self, other: CountTable) -> bool:
        return self.genus_max == other.genus_max and bool(np.all(self.data <= other.data))

    def __repr__(self) -> str:
        return f"CountTable(genus_max={self.genus_max}, total={int(self.data.sum())})"

    def to_csv(self) -> str:
        lines = ["genus,type,count"]
        lines += [f"{g},{t},{c}" for g, t, c in self.items()]
        return "\n".join(lines) + "\n"

    def to_matrix(self) -> str:
        return "".join(",".join(map(str, self.row(g))) + "\n" for g in range(1, self.genus_max + 1))

    def to_dict(self) -> dict:
        return {str(g): self.row(g) for g in range(1, self.genus_max + 1)}


@dataclass
class TreeStatistics:
    """Everything one walk accumulates.

    ``profiles[g, t, i]`` is the number of children of type ``i`` summed
    over semigroups of genus ``g < genus_max`` and type ``t``.
    """

    genus_max: int
    counts: CountTable | None
    leaves: CountTable | None
    profiles: np.ndarray | None = field(repr=False, default=None)


def _empty_buffers(genus_max: int, workers: int | None = None):
    shape = (genus_max + 1, genus_max + 2)
    pshape = (genus_max + 1, genus_max + 2, genus_max + 3)
    if workers is not None:
        shape, pshape = (workers, *shape), (workers, *pshape)
    return np.zeros(shape, np.int64), np.zeros(shape, np.int64), np.zeros(pshape, np.int64)


def _no_frontier(genus_max: int):
    length = _kernel.table_length(genus_max)
    return (
        np.empty((0, length), np.uint8),
        np.empty((0, 3), np.int64),
        np.empty((0, genus_max + 2), np.int64),
    )


def _run_kernel(genus_max: int, split: int, threads: int):
    dec, frob, mult, pf, t = _kernel.root_state(genus_max)
    counts, leaves, profiles = _empty_buffers(genus_max)
    if split == 0:
        _kernel.walk(dec, frob, mult, pf, t, 0, genus_max, counts, leaves, profiles,
                     *_no_frontier(genus_max))
        return counts, leaves, profiles

    # serial prefix down to the split genus, storing its nodes
    c, l, p = _empty_buffers(split)
    probe = _kernel.root_state(split)
    _kernel.walk(*probe, 0, split, c, l, p, *_no_frontier(split))
    size = int(c[split].sum())
    frontier_dec = np.zeros((size, dec.shape[0]), np.uint8)
    frontier_scalars = np.zeros((size, 3), np.int64)
    frontier_pf = np.zeros((size, genus_max + 2), np.int64)
    stored = _kernel.walk(dec, frob, mult, pf, t, 0, split, counts, leaves, profiles,
                          frontier_dec, frontier_scalars, frontier_pf)
    assert stored == size

    previous = numba.get_num_threads()
    numba.set_num_threads(threads)
    try:
        wc, wl, wp = _empty_buffers(genus_max, numba.config.NUMBA_NUM_THREADS)
        _kernel.walk_frontier(frontier_dec, frontier_scalars, frontier_pf, split, genus_max,
                              wc, wl, wp)
    finally:
        numba.set_num_threads(previous)
    return counts + wc.sum(axis=0), leaves + wl.sum(axis=0), profiles + wp.sum(axis=0)


def tabulate(config: ExplorationConfig) -> TreeStatistics:
    """Walk the tree once with the compiled kernel and gather the requested tables."""
    g = config.genus_max
    counts, leaves, profiles = _run_kernel(g, config.parallel_split_depth,
                                           resolve_threads(config.threads))
    collect = config.collect
    return TreeStatistics(
        genus_max=g,
        counts=CountTable(g, counts) if "counts" in collect else None,
        leaves=CountTable(g, leaves) if "leaf_counts" in collect else None,
        profiles=profiles[:g, : g + 1, : g + 1] if "descendant_profiles" in collect else None,
    )


def count_table(genus_max: int, *, split_depth: int = 0, threads: int | None = None) -> CountTable:
    """``n(g, t)`` for every ``1 <= t <= g <= genus_max``."""
    config = ExplorationConfig(genus_max, split_depth, frozenset({"counts"}), threads)
    return tabulate(config).counts


def leaf_table(genus_max: int, *, split_depth: int = 0, threads: int | None = None) -> CountTable:
    """``l(g, t)``: like :func:`count_table` but only leaves are counted."""
    config = ExplorationConfig(genus_max, split_depth, frozenset({"leaf_counts"}), threads)
    return tabulate(config).leaves


def family_profile(genus: int, type_: int) -> tuple[int, ...]:
    """Children of every semigroup of the given genus and type, tallied by type.

    Entry ``i - 1`` counts children of type ``i`` for ``i = 1 .. genus + 1``.
    """
    if not 1 <= type_ <= genus:
        raise ValueError("need 1 <= type <= genus")
    stats = tabulate(ExplorationConfig(genus + 1, collect=frozenset({"descendant_profiles"})))
    return tuple(int(c) for c in stats.profiles[genus, type_, 1 : genus + 2])


def _label(s: NumericalSemigroup) -> str:
    gens = ",".join(map(str, s.minimal_generators))
    return f"⟨{gens}⟩ [g={s.genus},t={s.type}]"


def to_dot(genus_max: int, order: str = "generator") -> str:
    """DOT digraph of the tree down to ``genus_max``.

    ``order="generator"`` lists each level in canonical depth-first order;
    ``order="type"`` sorts each level by type, then by generator tuple.
    """
    if order not in ("generator", "type"):
        raise ValueError("order must be 'generator' or 'type'")
    levels: dict[int, list[NumericalSemigroup]] = {}
    for s in iter_semigroups(genus_max):
        levels.setdefault(s.genus, []).append(s)
    if order == "type":
        for nodes in levels.values():
            nodes.sort(key=lambda s: (s.type, s.minimal_generators))

    lines = ["digraph T {", "  node [shape=box];"]
    for g in sorted(levels):
        ids = " ".join(f"n{s.gapmask:x};" for s in levels[g])
        lines.append(f"  {{ rank=same; {ids} }}")
        for s in levels[g]:
            lines.append(f'  n{s.gapmask:x} [label="{_label(s)}"];')
    for g in sorted(levels):
        if g == genus_max:
            continue
        for s in levels[g]:
            for c in children(s):
                lines.append(f"  n{s.gapmask:x} -> n{c.gapmask:x};")
    lines.append("}")
    return "\n".join(lines) + "\n"
