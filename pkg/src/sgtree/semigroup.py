"""Numerical semigroups stored canonically by their gap set.

A semigroup is an immutable value wrapping one integer used as a bit table:
bit ``x`` is set iff ``x`` is a gap.  Every invariant (Frobenius number,
genus, multiplicity, minimal generators, pseudo-Frobenius numbers) is
derived from that table and cached on first use.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Iterable, Iterator, NamedTuple


class SemigroupError(ValueError):
    pass


class EmptyGeneratorSet(SemigroupError):
    pass


class NonCoprimeGenerators(SemigroupError):
    pass


class RootHasNoParent(SemigroupError):
    pass


class NotASemigroup(SemigroupError):
    """The complement of a candidate gap set is not additively closed.

    ``witness`` is a pair ``(x, y)`` of non-gaps whose sum is a gap.
    """

    def __init__(self, witness: tuple[int, int]):
        x, y = witness
        super().__init__(f"{x} and {y} are not gaps but {x + y} is")
        self.witness = witness


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class PseudoFrobeniusSet(NamedTuple):
    elements: tuple[int, ...]

    @property
    def type(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup, compared and hashed by its gap set.

    Build instances with :func:`from_generators` or :func:`from_gap_set`;
    the bare constructor trusts ``gapmask`` to describe a semigroup.
    """

    gapmask: int

    def __contains__(self, x: int) -> bool:
        return x >= 0 and not (self.gapmask >> x) & 1

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.gapmask))

    @property
    def frobenius(self) -> int:
        return self.gapmask.bit_length() - 1

    @property
    def genus(self) -> int:
        return self.gapmask.bit_count()

    @cached_property
    def multiplicity(self) -> int:
        x = 1
        while (self.gapmask >> x) & 1:
            x += 1
        return x

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        if self.genus == 0:
            return (1,)
        m = self.multiplicity
        top = self.frobenius + m
        window = (1 << (top + 1)) - 1
        positive = window & ~self.gapmask & ~1
        sums = 0
        for s in iter_bits(positive):
            if 2 * s > top:
                break
            sums |= positive << s
        return tuple(iter_bits(positive & ~sums))

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    @cached_property
    def pseudo_frobenius(self) -> PseudoFrobeniusSet:
        if self.genus == 0:
            return PseudoFrobeniusSet((-1,))
        blocked = 0
        for a in self.minimal_generators:
            blocked |= self.gapmask >> a
        return PseudoFrobeniusSet(tuple(iter_bits(self.gapmask & ~blocked)))

    @property
    def type(self) -> int:
        return self.pseudo_frobenius.type

    @property
    def effective_generators(self) -> tuple[int, ...]:
        """Minimal generators above the Frobenius number."""
        f = self.frobenius
        return tuple(a for a in self.minimal_generators if a > f)

    def without(self, generator: int) -> NumericalSemigroup:
        """Remove a minimal generator; the result is again a semigroup."""
        if generator not in self.minimal_generators:
            raise ValueError(f"{generator} is not a minimal generator")
        return NumericalSemigroup(self.gapmask | (1 << generator))

    def to_dict(self) -> dict:
        return {
            "gens": list(self.minimal_generators),
            "gaps": list(self.gaps),
            "F": self.frobenius,
            "g": self.genus,
            "t": self.type,
            "m": self.multiplicity,
        }

    def __str__(self) -> str:
        d = self.to_dict()
        gens = ",".join(map(str, d["gens"]))
        gaps = ",".join(map(str, d["gaps"]))
        return f"gens=[{gens}] gaps=[{gaps}] F={d['F']} g={d['g']} t={d['t']} m={d['m']}"

    def __repr__(self) -> str:
        return f"<{', '.join(map(str, self.minimal_generators))}>"


NATURALS = NumericalSemigroup(0)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    gens = sorted(set(gens))
    if not gens:
        raise EmptyGeneratorSet("at least one generator is required")
    if gens[0] <= 0:
        raise ValueError("generators must be positive")
    if reduce(gcd, gens) != 1:
        raise NonCoprimeGenerators(f"gcd{tuple(gens)} != 1")
    bound = gens[0] * gens[-1]
    member = bytearray(bound + 1)
    member[0] = 1
    for x in range(1, bound + 1):
        member[x] = any(a <= x and member[x - a] for a in gens)
    gapmask = 0
    for x in range(bound + 1):
        if not member[x]:
            gapmask |= 1 << x
    return NumericalSemigroup(gapmask)


def from_gap_set(gaps: Iterable[int]) -> NumericalSemigroup:
    """Semigroup with exactly the given gaps; raises :class:`NotASemigroup`."""
    gapmask = 0
    for x in gaps:
        if x <= 0:
            raise ValueError("gaps must be positive integers")
        gapmask |= 1 << x
    f = gapmask.bit_length() - 1
    members = [x for x in range(1, f + 1) if not (gapmask >> x) & 1]
    for i, x in enumerate(members):
        for y in members[i:]:
            if x + y > f:
                break
            if (gapmask >> (x + y)) & 1:
                raise NotASemigroup((x, y))
    return NumericalSemigroup(gapmask)


def minimal_generators(s: NumericalSemigroup) -> tuple[int, ...]:
    return s.minimal_generators


def pseudo_frobenius(s: NumericalSemigroup) -> PseudoFrobeniusSet:
    return s.pseudo_frobenius


def type_of(s: NumericalSemigroup) -> int:
    return s.type


def parent(s: NumericalSemigroup) -> NumericalSemigroup:
    """Adjoin the Frobenius number."""
    if s.genus == 0:
        raise RootHasNoParent("N_0 is the root of the tree")
    return NumericalSemigroup(s.gapmask & ~(1 << s.frobenius))


class MaxTypeCheck(NamedTuple):
    type_is_genus: bool
    multiplicity_is_frobenius_plus_one: bool
    frobenius_below_multiplicity: bool
    is_interval: bool


def max_type_check(s: NumericalSemigroup) -> MaxTypeCheck:
    """Evaluate the four characterisations of maximal type separately.

    The last one asks whether ``s = <c, c+1, ..., 2c-1>``; it inspects the
    generators only, so it shares no computation with the other three.
    """
    m = s.multiplicity
    return MaxTypeCheck(
        s.type == s.genus,
        m == s.frobenius + 1,
        s.frobenius < m,
        s.minimal_generators == tuple(range(m, 2 * m)),
    )
