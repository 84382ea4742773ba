"""Gap vectors, cotype, and the stable vectors behind the constant diagonals.

For a semigroup of genus ``g`` and type ``t = g - ell`` every gap lies in
``1 .. g + ell`` and ``1 .. g - ell`` are all gaps, so the semigroup is fixed
by which of the ``2 * ell`` integers ``g - ell + 1 .. g + ell`` are gaps.
That 0/1 vector is its gap vector.

Vector sets are returned in descending lexicographic order of their bit
strings (``1001`` before ``0110`` before ``0101``).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np
from numba import njit

from .semigroup import NumericalSemigroup, SemigroupError, from_gap_set

MAX_ELL = 16


class GenusTooSmall(SemigroupError):
    pass


class HypothesisViolated(SemigroupError):
    pass


class UnsupportedEll(SemigroupError):
    pass


@dataclass(frozen=True, order=True)
class GapVector:
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) % 2 or any(b not in (0, 1) for b in self.bits):
            raise ValueError("a gap vector is an even-length 0/1 sequence")

    @classmethod
    def from_string(cls, text: str) -> GapVector:
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_ones(cls, ell: int, positions) -> GapVector:
        """Vector of length ``2 * ell`` with 1s at the given 1-based positions."""
        bits = [0] * (2 * ell)
        for p in positions:
            bits[p - 1] = 1
        return cls(tuple(bits))

    @property
    def ell(self) -> int:
        return len(self.bits) // 2

    @property
    def is_balanced(self) -> bool:
        return sum(self.bits) == self.ell

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __len__(self) -> int:
        return len(self.bits)


def difference_set(v: GapVector) -> frozenset[int]:
    """``{j - i : i < j, v_i = 0, v_j = 1}``."""
    ones = 0
    for k, b in enumerate(v.bits):
        ones |= b << k
    diffs = 0
    for k, b in enumerate(v.bits):
        if not b:
            diffs |= ones >> k
    return frozenset(k for k in range(1, len(v.bits)) if (diffs >> k) & 1)


def cotype(v: GapVector) -> int:
    if not v.is_balanced:
        raise ValueError(f"{v} is not balanced")
    return len(difference_set(v))


def gap_vector(s: NumericalSemigroup) -> GapVector:
    g = s.genus
    if g == 0:
        raise ValueError("N_0 has no gap vector")
    ell = g - s.type
    return GapVector(tuple(int(g - ell + i not in s) for i in range(1, 2 * ell + 1)))


def gap_set_of(genus: int, v: GapVector) -> frozenset[int]:
    ell = v.ell
    if genus <= ell:
        raise GenusTooSmall(f"genus {genus} must exceed ell = {ell}")
    base = genus - ell
    return frozenset(range(1, base + 1)) | {base + i for i, b in enumerate(v.bits, 1) if b}


def semigroup_from_vector(genus: int, v: GapVector) -> NumericalSemigroup:
    """The semigroup with gaps ``gap_set_of(genus, v)``.

    Always succeeds when ``genus >= 3 * ell - 1``; below that the complement
    may fail to be closed and :class:`NotASemigroup` is raised.
    """
    return from_gap_set(gap_set_of(genus, v))


def gaps_minus_pf_predicted(genus: int, v: GapVector) -> frozenset[int]:
    if genus < 3 * v.ell - 1:
        raise HypothesisViolated(f"need genus >= {3 * v.ell - 1}")
    return difference_set(v)


def _sorted(vectors) -> list[GapVector]:
    return sorted(vectors, reverse=True)


def balanced_vectors(ell: int) -> list[GapVector]:
    n = 2 * ell
    return _sorted(GapVector.from_ones(ell, [p + 1 for p in ones])
                   for ones in combinations(range(n), ell))


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _stable_masks(ell):
    # bit k of a mask is position k + 1 of the vector; Gosper's hack walks
    # every mask with exactly ell bits set
    n = 2 * ell
    full = (np.int64(1) << n) - 1
    out = np.empty(1024, np.int64)
    found = 0
    v = (np.int64(1) << ell) - 1
    while v <= full:
        diffs = np.int64(0)
        for k in range(n):
            if not (v >> k) & 1:
                diffs |= v >> k
        if _popcount(diffs) == ell:
            if found == out.shape[0]:
                grown = np.empty(2 * found, np.int64)
                grown[:found] = out
                out = grown
            out[found] = v
            found += 1
        low = v & -v
        ripple = v + low
        v = (((ripple ^ v) >> 2) // low) | ripple
    return out[:found]


def stable_vectors(ell: int) -> list[GapVector]:
    """All balanced vectors of length ``2 * ell`` whose cotype is ``ell``."""
    if ell < 0 or ell > MAX_ELL:
        raise ValueError(f"ell must lie in [0, {MAX_ELL}]")
    if ell == 0:
        return [GapVector(())]
    masks = _stable_masks(ell)
    return _sorted(
        GapVector(tuple(int((int(m) >> k) & 1) for k in range(2 * ell))) for m in masks
    )


def shift_up(s: NumericalSemigroup) -> NumericalSemigroup:
    """``{0} U {x + 1 : x != 0 in s}``, genus and type both one higher."""
    g, t = s.genus, s.type
    if g == 0 or 3 * t < 2 * g - 1:
        raise HypothesisViolated(f"shift_up needs genus >= 1 and 3t >= 2g - 1 (g={g}, t={t})")
    return from_gap_set([1] + [x + 1 for x in s.gaps])


def shift_down(s: NumericalSemigroup) -> NumericalSemigroup:
    """Inverse of :func:`shift_up`."""
    g, t = s.genus - 1, s.type - 1
    if t < 1 or g < t or 3 * t < 2 * g - 1:
        raise HypothesisViolated(
            f"shift_down needs a source of genus g+1, type t+1 with g >= t >= 1 and 3t >= 2g - 1 "
            f"(g={g}, t={t})"
        )
    return from_gap_set([x - 1 for x in s.gaps if x > 1])


_CATALOG = {
    0: [""],
    1: ["01"],
    2: ["1001", "0110", "0101"],
    3: ["110001", "101001", "100110", "011100", "011010", "011001", "010101"],
}


def catalog_small_ell(ell: int) -> list[GapVector]:
    """Stable vectors for ``ell <= 3``, listed by hand."""
    if ell not in _CATALOG:
        raise UnsupportedEll(f"no hand-made catalog for ell = {ell}")
    return [GapVector.from_string(s) for s in _CATALOG[ell]]


def family_members(ell: int) -> dict[str, list[GapVector]]:
    """The explicit families of stable vectors, keyed ``i.a``, ``i.b``, ..., ``v``.

    Each family fixes where the 1s are and lists the parameters for which the
    vector is stable; the vectors are produced from that description and not
    by filtering on cotype.
    """
    L = ell
    fam: dict[str, list[GapVector]] = {k: [] for k in ("i.a", "i.b", "ii", "iii", "iv", "v")}
    if L < 1:
        return fam

    # unique zero among the first L entries, at i; the remaining 1 at L + m
    for i in range(1, L + 1):
        for m in range(1, L + 1):
            ones = [k for k in range(1, L + 1) if k != i] + [L + m]
            if i == 1:
                fam["i.a"].append(GapVector.from_ones(L, ones))
            elif m == L:
                fam["i.b"].append(GapVector.from_ones(L, ones))

    # 1s at 1..L-2 and at L+m, L+n with 0 <= m < n <= L
    if L >= 2:
        for m in range(0, L + 1):
            for n in range(m + 1, L + 1):
                a = n == L - 1 and 2 * m >= L - 2 and m <= L - 2
                b = n == L and 2 * m <= L - 2
                if a or b:
                    fam["ii"].append(GapVector.from_ones(L, list(range(1, L - 1)) + [L + m, L + n]))

    fam["iii"].append(GapVector.from_ones(L, range(2, 2 * L + 1, 2)))

    # 1s at 2..L-2, at L and at L+m, L+n with 1 <= m < n <= L
    if L >= 5:
        for m in range(1, L + 1):
            for n in range(m + 1, L + 1):
                a = n <= L - 2 and L - 3 not in (m, n)
                b = m == 1 and n == L - 1
                c = L >= 6 and m == 2 and n == L
                if a or b or c:
                    fam["iv"].append(GapVector.from_ones(L, list(range(2, L - 1)) + [L, L + m, L + n]))

    # 1s at 2..L-1 and at L+m, L+n with 1 <= m < n <= L
    if L >= 3:
        for m in range(1, L + 1):
            for n in range(m + 1, L + 1):
                if 2 <= m < n <= L - 2 or (m == 1 and n != L - 1):
                    fam["v"].append(GapVector.from_ones(L, list(range(2, L)) + [L + m, L + n]))
    return fam


def family_vectors(ell: int) -> list[GapVector]:
    """Union of :func:`family_members`, duplicates removed."""
    if ell < 1:
        raise ValueError("ell must be positive")
    seen = {v for vs in family_members(ell).values() for v in vs}
    return _sorted(seen)


def family_count_formula(ell: int) -> int:
    """Size of the family union counted term by term, one overlap removed."""
    c = comb(ell - 3, 2)
    return ell + (ell - 1) + (ell - 1 + (ell % 2 == 0)) + 1 + (c + 2) + (c + ell - 2) - 1


def stable_lower_bound(ell: int) -> int:
    if ell < 6:
        raise ValueError("the bound is stated for ell >= 6")
    return ell * ell - 3 * ell + 10
