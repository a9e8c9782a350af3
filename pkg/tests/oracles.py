"""Independent brute-force oracles for the test suite.

These deliberately avoid the package's solver paths: plain adjacency-set
scans over itertools enumerations.
"""

from itertools import combinations

from chordage import Graph, build_graph, remove_edges


def adjacency_sets(g: Graph) -> list[set[int]]:
    return [set(g.neighbors(v)) for v in range(g.n)]


def naive_gamma(g: Graph) -> int:
    """Minimum dominating set size by subset scan in ascending size."""
    adj = adjacency_sets(g)
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            covered = set(combo)
            for v in combo:
                covered |= adj[v]
            if len(covered) == g.n:
                return k
    raise AssertionError("unreachable: V always dominates")


def naive_bondage(g: Graph) -> int | None:
    """Exhaustive edge-subset scan; None when gamma cannot increase."""
    edges = g.edges()
    if not edges:
        return None
    base = naive_gamma(g)
    for k in range(1, len(edges) + 1):
        for combo in combinations(edges, k):
            if naive_gamma(remove_edges(g, combo)) > base:
                return k
    return None


def induces_cycle(g: Graph, sub: tuple[int, ...]) -> bool:
    inside = set(sub)
    adj = adjacency_sets(g)
    if any(len(adj[v] & inside) != 2 for v in sub):
        return False
    # walk the 2-regular induced subgraph from sub[0]
    seen = {sub[0]}
    frontier = {sub[0]}
    while frontier:
        frontier = {u for v in frontier for u in adj[v] & inside} - seen
        seen |= frontier
    return seen == inside


def brute_has_hole(g: Graph) -> bool:
    for size in range(4, g.n + 1):
        for sub in combinations(range(g.n), size):
            if induces_cycle(g, sub):
                return True
    return False


def brute_all_cliques(g: Graph) -> set[frozenset[int]]:
    adj = adjacency_sets(g)
    out = set()
    for size in range(1, g.n + 1):
        for sub in combinations(range(g.n), size):
            if all(v in adj[u] for u, v in combinations(sub, 2)):
                out.add(frozenset(sub))
    return out


def brute_maximal_cliques(g: Graph) -> set[frozenset[int]]:
    cliques = brute_all_cliques(g)
    return {c for c in cliques if not any(c < d for d in cliques)}


def brute_max_clique_size(g: Graph) -> int:
    return max((len(c) for c in brute_all_cliques(g)), default=0)


def brute_is_diamond_free(g: Graph) -> bool:
    """No induced K_4 minus one edge on any 4 vertices."""
    adj = adjacency_sets(g)
    for sub in combinations(range(g.n), 4):
        edges = sum(1 for u, v in combinations(sub, 2) if v in adj[u])
        if edges == 5:
            return False
    return True


def random_graph(n: int, p: float, rng) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return build_graph(n, edges)
