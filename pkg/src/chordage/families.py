"""Deterministic and seeded-random graph family generators.

Random generators use an explicit splitmix64 stream (constants below) so
that a given (parameters, seed) pair yields the same graph on every
platform, independent of any language runtime RNG.
"""

from __future__ import annotations

import heapq

from .errors import GraphError
from .graph import Edge, Graph, bits, build_graph

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64: 64-bit state, golden-ratio increment, two xor-multiply
    finalizer rounds."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError(f"randrange bound must be positive, got {n}")
        threshold = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < threshold:
                return r % n

    def bernoulli(self, p: float) -> bool:
        return self.next_u64() < int(p * (1 << 64))

    def binomial(self, m: int, p: float) -> int:
        return sum(self.bernoulli(p) for _ in range(m))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path requires n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle requires n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def clique(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"clique requires n >= 1, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """Center 0 joined to leaves 1..n-1."""
    if n < 1:
        raise GraphError(f"star requires n >= 1, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def corona(g1: Graph, g2: Graph) -> Graph:
    """One copy of g2 per vertex of g1, each joined to its vertex.

    Labeling: g1's vertices first, then the copies in vertex order; copy i
    occupies n1 + i*n2 .. n1 + (i+1)*n2 - 1.
    """
    if g1.n == 0 or g2.n == 0:
        raise GraphError("corona requires non-empty operands")
    n1, n2 = g1.n, g2.n
    edges: list[Edge] = list(g1.edges())
    for i in range(n1):
        base = n1 + i * n2
        edges.extend((base + u, base + v) for u, v in g2.edges())
        edges.extend((i, base + u) for u in range(n2))
    return build_graph(n1 * (1 + n2), edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Row-major labeling: (u, v) -> u * |V(h)| + v."""
    if g.n == 0 or h.n == 0:
        raise GraphError("cartesian product requires non-empty operands")
    edges: list[Edge] = []
    for u in range(g.n):
        edges.extend((u * h.n + a, u * h.n + b) for a, b in h.edges())
    for a, b in g.edges():
        edges.extend((a * h.n + v, b * h.n + v) for v in range(h.n))
    return build_graph(g.n * h.n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree by decoding a random parent sequence
    (Pruefer code)."""
    if n < 1:
        raise GraphError(f"random_tree requires n >= 1, got {n}")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = SplitMix64(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in code:
        degree[v] += 1
    edges: list[Edge] = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return build_graph(n, edges)


def random_chordal(n: int, density: float, seed: int) -> Graph:
    """Connected chordal graph grown in reverse elimination order.

    Each new vertex attaches to a non-empty clique of the current graph:
    the target clique size is 1 + Binomial(t-1, density) after t vertices,
    truncated by a random greedy descent (grow a clique from a random
    start vertex through random common neighbors). Density 0 gives a tree,
    density 1 the complete graph.
    """
    if n < 1:
        raise GraphError(f"random_chordal requires n >= 1, got {n}")
    if not 0.0 <= density <= 1.0:
        raise GraphError(f"density must be in [0, 1], got {density}")
    rng = SplitMix64(seed)
    adj = [0] * n
    for t in range(1, n):
        target = 1 + rng.binomial(t - 1, density)
        start = rng.randrange(t)
        clique_mask = 1 << start
        cand = adj[start] & ((1 << t) - 1)
        while clique_mask.bit_count() < target and cand:
            members = list(bits(cand))
            pick = members[rng.randrange(len(members))]
            clique_mask |= 1 << pick
            cand &= adj[pick]
        for v in bits(clique_mask):
            adj[t] |= 1 << v
            adj[v] |= 1 << t
    return Graph(n, tuple(adj))


def random_block_graph(n: int, seed: int) -> Graph:
    """Connected tree of cliques sharing single cut vertices (block sizes
    2..4, capped by the remaining vertex budget)."""
    if n < 1:
        raise GraphError(f"random_block_graph requires n >= 1, got {n}")
    rng = SplitMix64(seed)
    adj = [0] * n
    cur = 1
    while cur < n:
        attach = rng.randrange(cur)
        extra = 1 + rng.randrange(min(3, n - cur))
        block = [attach] + list(range(cur, cur + extra))
        for i, u in enumerate(block):
            for v in block[i + 1 :]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        cur += extra
    return Graph(n, tuple(adj))
