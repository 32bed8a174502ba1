"""Exhaustive dominating-set enumeration.

This is the ground truth that every closed form and recurrence is checked
against.  A set S dominates a target T when the union of the closed
neighbourhoods N[v], v in S, covers T.  Covers are built for all subsets of a
block of up to 2**20 candidates at once with numpy (``cover[S | bit i] =
cover[S] | N[i]``); larger candidate lists loop over the high bits in Python.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError
from .graph import MAX_VERTICES, Graph, members
from .polynomial import Polynomial

DEFAULT_MAX_N = 24
_BLOCK_BITS = 20


def oracle_max_n() -> int:
    """Soft size bound, overridable through ``DOMIPOLY_MAX_N``."""
    raw = os.environ.get("DOMIPOLY_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise CapacityError(f"DOMIPOLY_MAX_N={raw!r} is not an integer") from None
    return min(value, MAX_VERTICES)


def check_oracle_size(n: int) -> None:
    limit = oracle_max_n()
    if n > limit:
        raise CapacityError(
            f"exhaustive enumeration on {n} vertices exceeds the bound {limit} "
            f"(raise DOMIPOLY_MAX_N, hard limit {MAX_VERTICES})"
        )


def _block_tables(masks: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    size = 1 << len(masks)
    cover = np.zeros(size, dtype=np.uint64)
    pop = np.zeros(size, dtype=np.int64)
    for i, m in enumerate(masks):
        h = 1 << i
        np.bitwise_or(cover[:h], np.uint64(m), out=cover[h:2 * h])
        np.add(pop[:h], 1, out=pop[h:2 * h])
    return cover, pop


def count_covering_subsets(masks: Sequence[int], target: int) -> list[int]:
    """Entry i counts the i-element subsets of ``masks`` whose union covers ``target``."""
    c = len(masks)
    counts = np.zeros(c + 1, dtype=np.int64)
    if c == 0:
        counts[0] = 1 if target == 0 else 0
        return counts.tolist()
    low_n = min(c, _BLOCK_BITS)
    low, high = masks[:low_n], masks[low_n:]
    cover, pop = _block_tables(low)
    low_reach = 0
    for m in low:
        low_reach |= m
    t = np.uint64(target)
    for hs in range(1 << len(high)):
        hc = 0
        for j in members(hs):
            hc |= high[j]
        if (hc | low_reach) & target != target:
            continue
        hit = (np.bitwise_or(cover, np.uint64(hc)) & t) == t
        tally = np.bincount(pop[hit], minlength=low_n + 1)
        shift = hs.bit_count()
        counts[shift:shift + low_n + 1] += tally
    return [int(v) for v in counts]


def domination_counts(g: Graph) -> list[int]:
    """d(G, i) for i = 0..n."""
    check_oracle_size(g.n)
    return count_covering_subsets(g.closed_masks(), g.full_mask)


def domination_polynomial(g: Graph) -> Polynomial:
    """D(G, x) by enumeration of all 2**n vertex subsets.

    The graph on zero vertices gets the constant 1: the empty set dominates
    it.  That convention is the one under which the vertex-expansion
    identity holds when G - N[u] is empty.
    """
    return Polynomial(domination_counts(g))


def domination_number(g: Graph) -> int:
    return domination_polynomial(g).min_degree()


def restricted_count_pu(g: Graph, u: int) -> Polynomial:
    """Size-generating polynomial of dominating sets of G - u that avoid N(u).

    Candidates are the vertices outside N[u]; they must cover every vertex
    except u.  Adjacency inside G - u is adjacency in G, so no relabelling
    is needed.
    """
    nu = g.closed_mask(u)
    check_oracle_size(g.n)
    cands = [v for v in range(g.n) if not nu >> v & 1]
    masks = [g.closed_mask(v) for v in cands]
    return Polynomial(count_covering_subsets(masks, g.full_mask & ~(1 << u)))


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    cover = 0
    for v in s:
        cover |= g.closed_mask(v)
    return cover == g.full_mask


def dominating_sets(g: Graph, size: int | None = None) -> list[frozenset[int]]:
    """List the dominating sets themselves (small graphs only)."""
    check_oracle_size(g.n)
    closed = g.closed_masks()
    out = []
    for s in range(1 << g.n):
        if size is not None and s.bit_count() != size:
            continue
        cover = 0
        for v in members(s):
            cover |= closed[v]
        if cover == g.full_mask:
            out.append(frozenset(members(s)))
    return out


__all__ = [
    "DEFAULT_MAX_N",
    "check_oracle_size",
    "count_covering_subsets",
    "domination_counts",
    "domination_number",
    "domination_polynomial",
    "dominating_sets",
    "is_dominating",
    "oracle_max_n",
    "restricted_count_pu",
]
