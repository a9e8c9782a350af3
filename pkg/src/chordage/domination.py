"""Exact domination number via branch and bound on bitmask covers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import LimitExceeded
from .graph import Graph, bits

GAMMA_VERTEX_LIMIT = 32


@dataclass(frozen=True)
class DominationResult:
    gamma: int
    witness: frozenset[int]


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    covered = 0
    for v in s:
        covered |= g.closed_neighborhood(v)
    return covered == g.full_mask()


def _closed_masks(adj: list[int] | tuple[int, ...]) -> list[int]:
    return [a | (1 << v) for v, a in enumerate(adj)]


def _greedy_cover(cn: list[int], universe: int) -> int:
    """Greedy dominating-set mask covering ``universe``; upper bound seed."""
    chosen = 0
    covered = 0
    while covered & universe != universe:
        best_v = -1
        best_gain = -1
        for v in bits(universe):
            gain = (cn[v] & universe & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
        chosen |= 1 << best_v
        covered |= cn[best_v]
    return chosen


def _disjoint_lb(cn: list[int], undominated: int) -> int:
    """Count of undominated vertices with pairwise disjoint closed
    neighborhoods; each needs its own dominator."""
    taken = 0
    count = 0
    for v in bits(undominated):
        if not cn[v] & taken:
            count += 1
            taken |= cn[v]
    return count


def _min_cover(cn: list[int], universe: int) -> tuple[int, int]:
    """(size, witness mask) of a minimum set of closed neighborhoods from
    vertices inside ``universe`` covering ``universe``."""
    best_mask = _greedy_cover(cn, universe)
    best_size = best_mask.bit_count()

    def recurse(covered: int, chosen: int, size: int) -> None:
        nonlocal best_mask, best_size
        undominated = universe & ~covered
        if not undominated:
            if size < best_size:
                best_size = size
                best_mask = chosen
            return
        if size + _disjoint_lb(cn, undominated) >= best_size:
            return
        # branch on the undominated vertex with the fewest dominators
        target = -1
        fewest = 1 << 62
        for v in bits(undominated):
            c = (cn[v] & universe).bit_count()
            if c < fewest:
                fewest = c
                target = v
        for u in bits(cn[target] & universe):
            recurse(covered | cn[u], chosen | (1 << u), size + 1)

    recurse(0, 0, 0)
    return best_size, best_mask


def gamma(g: Graph, limit: int = GAMMA_VERTEX_LIMIT) -> DominationResult:
    """Exact domination number with a witness.

    Solves each connected component independently; isolated vertices are
    forced into every dominating set.
    """
    if g.n > limit:
        raise LimitExceeded("gamma vertex count", g.n, limit)
    cn = _closed_masks(g.adj)
    total = 0
    witness = 0
    remaining = g.full_mask()
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        size, mask = _min_cover(cn, comp)
        total += size
        witness |= mask
        remaining &= ~comp
    return DominationResult(total, frozenset(bits(witness)))


def has_dominating_set_of_size(g: Graph, k: int) -> bool:
    """Decision form: does a dominating set of size <= k exist?"""
    return _exists_cover(_closed_masks(g.adj), g.full_mask(), k)


def _exists_cover(cn: list[int], universe: int, budget: int) -> bool:
    # quick greedy acceptance
    greedy = _greedy_cover(cn, universe)
    if greedy.bit_count() <= budget:
        return True

    def recurse(covered: int, budget: int) -> bool:
        undominated = universe & ~covered
        if not undominated:
            return True
        if budget <= 0 or _disjoint_lb(cn, undominated) > budget:
            return False
        target = -1
        fewest = 1 << 62
        for v in bits(undominated):
            c = (cn[v] & universe).bit_count()
            if c < fewest:
                fewest = c
                target = v
        for u in bits(cn[target] & universe):
            if recurse(covered | cn[u], budget - 1):
                return True
        return False

    return recurse(0, budget)


def gamma_after_removal_exceeds(adj: list[int], removed, gamma0: int) -> bool:
    """Whether gamma(G - removed) > gamma0, on raw adjacency masks."""
    adj2 = list(adj)
    for u, v in removed:
        adj2[u] &= ~(1 << v)
        adj2[v] &= ~(1 << u)
    cn = _closed_masks(adj2)
    return not _exists_cover(cn, (1 << len(adj2)) - 1, gamma0)


def all_min_dominating_sets(
    g: Graph, limit: int = GAMMA_VERTEX_LIMIT
) -> list[frozenset[int]]:
    """Every dominating set of size gamma(G), in lexicographic order."""
    result = gamma(g, limit=limit)
    out = []
    for combo in combinations(range(g.n), result.gamma):
        covered = 0
        for v in combo:
            covered |= g.adj[v] | (1 << v)
        if covered == g.full_mask():
            out.append(frozenset(combo))
    return out
