"""Compiled depth-first walker over the semigroup tree.

A node is carried as a decomposition table ``dec`` where ``dec[i]`` is the
number of pairs ``a <= b`` of semigroup elements with ``a + b == i``.  An
integer ``i > 0`` is an element iff ``dec[i] > 0`` and a minimal generator
iff ``dec[i] == 1``.  Removing a generator ``x`` only decrements entries
``i >= x`` whose complement ``i - x`` was an element, so children are built
in ``O(L)`` without rescanning pairs.

Pseudo-Frobenius sets are propagated from parent to child: for the child
``S \\ {x}`` they are ``{x}`` plus the parent's pseudo-Frobenius numbers
``p`` with ``x - p`` a gap of the parent.  Both shortcuts are checked
against the from-scratch computations in :mod:`sgtree.semigroup`.
"""
from __future__ import annotations

import numba
import numpy as np
from numba import njit, prange

MAX_GENUS = 50


def table_length(genus_max: int) -> int:
    # every descendant within the bound has F + m <= 3 * genus_max
    return 3 * genus_max + 3


def root_state(genus_max: int):
    """Decomposition table, F, m, PF list and type of the root N_0."""
    length = table_length(genus_max)
    dec = np.array([i // 2 + 1 for i in range(length)], dtype=np.uint8)
    pf = np.full(genus_max + 2, 0, dtype=np.int64)
    pf[0] = -1
    return dec, -1, 1, pf, 1


def decomposition_table(member, length: int) -> np.ndarray:
    """Pair counts for an arbitrary membership predicate (slow reference)."""
    dec = np.zeros(length, dtype=np.uint8)
    for i in range(length):
        for a in range(i // 2 + 1):
            if member(a) and member(i - a):
                dec[i] += 1
    return dec


@njit(cache=True)
def _generator_bound(frob, mult):
    # minimal generators lie in [m, F + m]; the root N_0 is the exception
    return frob + mult if frob >= 0 else 1


@njit(cache=True)
def _has_effective_generator(dec, frob, mult):
    for y in range(max(frob + 1, 1), _generator_bound(frob, mult) + 1):
        if dec[y] == 1:
            return True
    return False


@njit(cache=True)
def _leaf_after_removal(dec, x, mult):
    # is S \ {x} a leaf, judged from the parent's table without copying it
    child_mult = mult + 1 if x == mult else mult
    for y in range(x + 1, x + child_mult + 1):
        d = np.int64(dec[y])
        if dec[y - x] > 0:
            d -= 1
        if d == 1:
            return False
    return True


@njit(cache=True)
def _child_pf(pf_parent, t_parent, dec_parent, x, pf_out):
    pf_out[0] = x
    t = 1
    for k in range(t_parent):
        p = pf_parent[k]
        if dec_parent[x - p] == 0:
            pf_out[t] = p
            t += 1
    return t


@njit(cache=True)
def walk(dec0, frob0, mult0, pf0, t0, g0, genus_max, counts, leaves, profiles,
         frontier_dec, frontier_scalars, frontier_pf):
    """Walk the subtree rooted at the given node down to ``genus_max``.

    Each node of genus ``g`` and type ``t`` adds one to ``counts[g, t]`` and,
    when it has no effective generator, to ``leaves[g, t]``.  For every
    parent of genus below ``genus_max`` and each child of type ``i`` the
    entry ``profiles[g, t, i]`` is incremented.

    When ``frontier_dec`` has rows, nodes of genus ``genus_max`` are not
    counted but stored in the frontier buffers instead; the return value is
    then the number of stored nodes.
    """
    length = dec0.shape[0]
    collect = frontier_dec.shape[0] > 0
    depth_count = genus_max - g0 + 1
    dec = np.empty((depth_count, length), dtype=np.uint8)
    frob = np.empty(depth_count, dtype=np.int64)
    mult = np.empty(depth_count, dtype=np.int64)
    typ = np.empty(depth_count, dtype=np.int64)
    pf = np.zeros((depth_count, genus_max + 2), dtype=np.int64)
    cursor = np.empty(depth_count, dtype=np.int64)
    child_pf = np.zeros(genus_max + 2, dtype=np.int64)
    stored = 0

    dec[0, :] = dec0
    frob[0] = frob0
    mult[0] = mult0
    typ[0] = t0
    pf[0, :t0] = pf0[:t0]

    if g0 == genus_max and collect:
        frontier_dec[0, :] = dec0
        frontier_scalars[0, 0] = frob0
        frontier_scalars[0, 1] = mult0
        frontier_scalars[0, 2] = t0
        frontier_pf[0, :t0] = pf0[:t0]
        return 1

    counts[g0, t0] += 1
    if not _has_effective_generator(dec0, frob0, mult0):
        leaves[g0, t0] += 1
        return 0
    if g0 == genus_max:
        return 0

    cursor[0] = max(frob0 + 1, 1)
    d = 0
    while d >= 0:
        g = g0 + d
        f = frob[d]
        m = mult[d]
        x = cursor[d]
        bound = _generator_bound(f, m)
        # next effective generator
        while x <= bound and dec[d, x] != 1:
            x += 1
        if x > bound:
            d -= 1
            continue
        cursor[d] = x + 1

        tc = _child_pf(pf[d], typ[d], dec[d], x, child_pf)
        profiles[g, typ[d], tc] += 1
        mc = m + 1 if x == m else m

        if g + 1 == genus_max:
            if collect:
                frontier_dec[stored, :] = dec[d]
                for i in range(x, length):
                    if dec[d, i - x] > 0:
                        frontier_dec[stored, i] -= 1
                frontier_scalars[stored, 0] = x
                frontier_scalars[stored, 1] = mc
                frontier_scalars[stored, 2] = tc
                frontier_pf[stored, :tc] = child_pf[:tc]
                stored += 1
                continue
            counts[g + 1, tc] += 1
            if _leaf_after_removal(dec[d], x, m):
                leaves[g + 1, tc] += 1
            continue

        # materialise the child one level down
        e = d + 1
        dec[e, :] = dec[d]
        for i in range(x, length):
            if dec[d, i - x] > 0:
                dec[e, i] -= 1
        frob[e] = x
        mult[e] = mc
        typ[e] = tc
        pf[e, :tc] = child_pf[:tc]
        counts[g + 1, tc] += 1
        if not _has_effective_generator(dec[e], x, mc):
            leaves[g + 1, tc] += 1
            continue
        cursor[e] = x + 1
        d = e
    return stored


@njit(parallel=True, cache=True)
def walk_frontier(frontier_dec, frontier_scalars, frontier_pf, g0, genus_max,
                  counts, leaves, profiles):
    """Walk every frontier subtree, one private table set per worker thread."""
    n = frontier_dec.shape[0]
    length = frontier_dec.shape[1]
    empty_dec = np.empty((0, length), dtype=np.uint8)
    empty_scalars = np.empty((0, 3), dtype=np.int64)
    empty_pf = np.empty((0, genus_max + 2), dtype=np.int64)
    for k in prange(n):
        w = numba.get_thread_id()
        walk(frontier_dec[k], frontier_scalars[k, 0], frontier_scalars[k, 1],
             frontier_pf[k], frontier_scalars[k, 2], g0, genus_max,
             counts[w], leaves[w], profiles[w],
             empty_dec, empty_scalars, empty_pf)
