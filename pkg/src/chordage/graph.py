"""Immutable simple undirected graphs over dense 0-based vertex ids.

Adjacency is stored as one integer bitmask per vertex, which keeps
neighborhood intersections (needed by the degree-based bondage bounds)
constant time at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

Edge = tuple[int, int]

INFINITY = math.inf

from .errors import GraphError


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph; symmetric, irreflexive adjacency."""

    n: int
    adj: tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        """Bitmask of N[v]."""
        self._check_vertex(v)
        return self.adj[v] | (1 << v)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        """Canonical edge list: (u, v) with u < v, ascending lexicographic."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(rest):
                out.append((u, v))
        return out

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a graph from an edge list, deduplicating and symmetrizing.

    Rejects out-of-range endpoints and self-loops, naming the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) not allowed in a simple graph")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def remove_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Return G - A as a new graph; ``g`` is unmodified.

    Every pair in ``edges`` must be a current edge of ``g``.
    """
    adj = list(g.adj)
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) is not present in the graph")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def distance(g: Graph, u: int, v: int) -> int | float:
    """BFS shortest-path length; ``math.inf`` when u and v are disconnected."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return 0
    seen = 1 << u
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        nxt &= ~seen
        if nxt >> v & 1:
            return d
        seen |= nxt
        frontier = nxt
    return INFINITY


def component_mask(g: Graph, start: int) -> int:
    """Bitmask of the connected component containing ``start``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by minimum element."""
    remaining = g.full_mask()
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = component_mask(g, start)
        comps.append(list(bits(comp)))
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return component_mask(g, 0) == g.full_mask()


@dataclass(frozen=True)
class InducedSubgraph:
    """G[s] together with the index maps in both directions."""

    graph: Graph
    to_parent: tuple[int, ...]  # sub index -> parent vertex id

    @property
    def to_sub(self) -> dict[int, int]:
        return {p: i for i, p in enumerate(self.to_parent)}


def induced_subgraph(g: Graph, s: Iterable[int]) -> InducedSubgraph:
    """Subgraph induced by vertex set ``s``, relabeled to 0..|s|-1."""
    verts = sorted(set(s))
    for v in verts:
        g._check_vertex(v)
    index = {p: i for i, p in enumerate(verts)}
    edges = []
    for i, p in enumerate(verts):
        for q in bits(g.adj[p]):
            if q > p and q in index:
                edges.append((i, index[q]))
    return InducedSubgraph(build_graph(len(verts), edges), tuple(verts))


def degree_stats(g: Graph) -> tuple[int, int, list[int]]:
    """(delta, Delta, per-vertex degree list); (0, 0, []) for the empty graph."""
    degs = [g.adj[v].bit_count() for v in range(g.n)]
    if not degs:
        return 0, 0, []
    return min(degs), max(degs), degs


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    if m >> g.n:
        raise GraphError("vertex set contains an out-of-range vertex")
    for v in bits(m):
        if g.adj[v] & m:
            return False
    return True


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    if m >> g.n:
        raise GraphError("vertex set contains an out-of-range vertex")
    for v in bits(m):
        if (m & ~(1 << v)) & ~g.adj[v]:
            return False
    return True


def is_complete(g: Graph) -> bool:
    """Whether the whole graph is a clique."""
    return g.m == g.n * (g.n - 1) // 2
