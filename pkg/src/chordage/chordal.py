"""Chordality recognition, elimination orderings, and clique machinery."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError, LimitExceeded, NotChordalError
from .graph import Graph, bits, is_clique, mask_of

ALL_CLIQUES_LIMIT = 24


@dataclass(frozen=True)
class HoleWitness:
    """An induced cycle of length >= 4, listed in cyclic order."""

    cycle: tuple[int, ...]


def maximum_cardinality_search(g: Graph) -> list[int]:
    """MCS elimination ordering: a PEO iff the graph is chordal.

    Ties are broken by smallest vertex id so the ordering is deterministic.
    """
    n = g.n
    weight = [0] * n
    visited = 0
    visit_order = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited >> v & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        visit_order.append(best)
        visited |= 1 << best
        for u in bits(g.adj[best] & ~visited):
            weight[u] += 1
    visit_order.reverse()
    return visit_order


def peo_violation(g: Graph, order: list[int]) -> tuple[int, int, int] | None:
    """First (v, x, y) where x, y are later neighbors of v and xy is a non-edge."""
    later = g.full_mask()
    for v in order:
        later &= ~(1 << v)
        ln = g.adj[v] & later
        for x in bits(ln):
            missing = ln & ~g.adj[x] & ~(1 << x)
            if missing:
                y = (missing & -missing).bit_length() - 1
                return (v, x, y)
    return None


def is_perfect_elimination_ordering(g: Graph, order: list[int]) -> bool:
    if sorted(order) != list(range(g.n)):
        raise GraphError("ordering is not a permutation of the vertex set")
    return peo_violation(g, order) is None


def _shortest_path_avoiding(g: Graph, src: int, dst: int, forbidden: int) -> list[int] | None:
    """Shortest src-dst path in G minus the ``forbidden`` vertices, or None."""
    if forbidden >> src & 1 or forbidden >> dst & 1:
        return None
    prev = {src: -1}
    frontier = [src]
    seen = (1 << src) | forbidden
    while frontier:
        nxt = []
        for w in frontier:
            for u in bits(g.adj[w] & ~seen):
                seen |= 1 << u
                prev[u] = w
                nxt.append(u)
                if u == dst:
                    path = [dst]
                    while path[-1] != src:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return path
        frontier = nxt
    return None


def _check_hole(g: Graph, cycle: list[int]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i, u in enumerate(cycle):
        for j in range(i + 1, k):
            v = cycle[j]
            adjacent = bool(g.adj[u] >> v & 1)
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True


def _find_hole(g: Graph) -> HoleWitness | None:
    """Extract an induced cycle of length >= 4, if any.

    For every vertex v with two non-adjacent neighbors x, y, a shortest
    x-y path avoiding N[v] \\ {x, y} closes a hole through v; if a hole
    exists at all, some such triple succeeds.
    """
    for v in range(g.n):
        nb = list(bits(g.adj[v]))
        for i, x in enumerate(nb):
            for y in nb[i + 1 :]:
                if g.adj[x] >> y & 1:
                    continue
                forbidden = (g.closed_neighborhood(v)) & ~(1 << x) & ~(1 << y)
                path = _shortest_path_avoiding(g, x, y, forbidden)
                if path is None:
                    continue
                cycle = [v] + path
                if _check_hole(g, cycle):
                    return HoleWitness(tuple(cycle))
    return None


def is_chordal(g: Graph) -> tuple[bool, HoleWitness | None]:
    """Chordality via MCS + PEO check; a verified hole witness on failure."""
    order = maximum_cardinality_search(g)
    if peo_violation(g, order) is None:
        return True, None
    hole = _find_hole(g)
    if hole is None or not _check_hole(g, list(hole.cycle)):
        raise AssertionError("PEO check failed but no hole could be extracted")
    return False, hole


def _max_clique_bnb(g: Graph) -> int:
    """Exact clique number by branch and bound on candidate masks."""
    best = 0

    def expand(cur_size: int, cand: int) -> None:
        nonlocal best
        if cur_size + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, cur_size)
            return
        while cand:
            if cur_size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            expand(cur_size + 1, cand & g.adj[v])

    expand(0, g.full_mask())
    return best


def _lex_smallest_clique(g: Graph, size: int) -> frozenset[int]:
    """Lexicographically smallest (as sorted vertex list) clique of ``size``."""

    def grow(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == size:
            return chosen
        for v in bits(cand):
            nxt = cand & g.adj[v] & ~((1 << (v + 1)) - 1)
            if len(chosen) + 1 + nxt.bit_count() < size:
                continue
            got = grow(chosen + [v], nxt)
            if got is not None:
                return got
        return None

    found = grow([], g.full_mask())
    assert found is not None
    return frozenset(found)


def max_clique(g: Graph) -> tuple[int, frozenset[int]]:
    """Exact clique number with a verified maximum clique.

    Uses the PEO route on chordal graphs and exact branch and bound
    otherwise; ties go to the lexicographically smallest vertex set.
    """
    if g.n == 0:
        return 0, frozenset()
    order = maximum_cardinality_search(g)
    if peo_violation(g, order) is None:
        later = g.full_mask()
        omega = 0
        for v in order:
            later &= ~(1 << v)
            omega = max(omega, 1 + (g.adj[v] & later).bit_count())
    else:
        omega = _max_clique_bnb(g)
    witness = _lex_smallest_clique(g, omega)
    assert is_clique(g, witness)
    return omega, witness


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques of a chordal graph, via a PEO.

    Rejects non-chordal inputs; use the branch-and-bound clique routine
    for those.
    """
    order = maximum_cardinality_search(g)
    if peo_violation(g, order) is not None:
        raise NotChordalError(
            "maximal_cliques requires a chordal graph; "
            "use the exact fallback (max_clique) for non-chordal inputs"
        )
    later = g.full_mask()
    candidates = []
    for v in order:
        later &= ~(1 << v)
        candidates.append((1 << v) | (g.adj[v] & later))
    maximal = [
        c for c in candidates if not any(d != c and c & ~d == 0 for d in candidates)
    ]
    out = sorted({frozenset(bits(c)) for c in maximal}, key=sorted)
    return out


def all_cliques(g: Graph, limit: int = ALL_CLIQUES_LIMIT):
    """Every non-empty clique of a chordal graph, exactly once.

    Deterministic order: by (size, sorted vertex list). Enumerates subsets
    of the maximal cliques and deduplicates; the vertex limit is a hard
    precondition.
    """
    if g.n > limit:
        raise LimitExceeded("all_cliques vertex count", g.n, limit)
    seen: set[frozenset[int]] = set()
    for mc in maximal_cliques(g):
        members = sorted(mc)
        for sub in range(1, 1 << len(members)):
            seen.add(frozenset(members[i] for i in bits(sub)))
    yield from sorted(seen, key=lambda s: (len(s), sorted(s)))


def induced_cycles(g: Graph, min_length: int = 3):
    """Brute-force scan over vertex subsets that induce a cycle.

    A subset induces a cycle iff every member has exactly two neighbors
    inside it and the induced subgraph is connected. Desk scale only.
    """
    if g.n > 20:
        raise LimitExceeded("induced-cycle scan vertex count", g.n, 20)
    for mask in range(1, 1 << g.n):
        if mask.bit_count() < min_length:
            continue
        ok = True
        for v in bits(mask):
            if (g.adj[v] & mask).bit_count() != 2:
                ok = False
                break
        if not ok:
            continue
        # connected 2-regular induced subgraph == single cycle
        start = (mask & -mask).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w] & mask
            frontier = nxt & ~seen
            seen |= frontier
        if seen == mask:
            yield sorted(bits(mask))


def longest_induced_cycle(g: Graph) -> int:
    """Length of the longest induced cycle; 0 when the graph is a forest."""
    return max((len(c) for c in induced_cycles(g)), default=0)


def has_hole_bruteforce(g: Graph) -> bool:
    """Independent chordality oracle: any induced cycle of length >= 4?"""
    return any(True for _ in induced_cycles(g, min_length=4))
