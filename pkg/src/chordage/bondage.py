"""Exact bondage number with degree-based and clique-based upper bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .chordal import is_chordal, max_clique
from .errors import BondageUndefined, LimitExceeded, NotChordalError, NotConnectedError
from .graph import Edge, Graph, is_complete, is_connected
from .domination import gamma, gamma_after_removal_exceeds

BONDAGE_VERTEX_LIMIT = 16
BONDAGE_EDGE_LIMIT = 30


def fink_bound(g: Graph) -> tuple[int, Edge] | None:
    """min d(u)+d(v)-1 over vertex pairs at distance <= 2, with one
    attaining pair; None when no pair qualifies."""
    best = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not (g.adj[u] >> v & 1 or g.adj[u] & g.adj[v]):
                continue
            value = g.degree(u) + g.degree(v) - 1
            if best is None or value < best[0]:
                best = (value, (u, v))
    return best


def hartnell_rall_bound(g: Graph) -> tuple[int, Edge] | None:
    """min d(u)+d(v)-1-|N(u) ∩ N(v)| over edges, with one attaining edge;
    None for an edgeless graph."""
    best = None
    for u, v in g.edges():
        value = g.degree(u) + g.degree(v) - 1 - (g.adj[u] & g.adj[v]).bit_count()
        if best is None or value < best[0]:
            best = (value, (u, v))
    return best


def chordal_upper_bound(g: Graph) -> int:
    """ceil(omega/2) when the graph is one clique (exact bondage value),
    otherwise omega as an upper bound. Connected chordal inputs only."""
    if not is_connected(g):
        raise NotConnectedError("chordal bondage bound requires a connected graph")
    chordal, hole = is_chordal(g)
    if not chordal:
        raise NotChordalError(
            f"chordal bondage bound does not apply: hole {list(hole.cycle)}", hole=hole
        )
    omega, _ = max_clique(g)
    if is_complete(g):
        return math.ceil(omega / 2)
    return omega


def clique_bondage_witness(n: int) -> list[Edge]:
    """Edge set of size ceil(n/2) whose removal lifts gamma(K_n) to 2.

    Even n: a perfect matching. Odd n: a near-perfect matching plus one
    edge at the unmatched vertex.
    """
    if n < 2:
        raise ValueError(f"clique order must be >= 2, got {n}")
    edges = [(i, i + 1) for i in range(0, n - 1, 2)]
    if n % 2:
        edges.append((0, n - 1))
    return edges


@dataclass(frozen=True)
class UpperBoundReport:
    fink: tuple[int, Edge] | None
    hartnell_rall: tuple[int, Edge] | None
    chordal: int | None
    overall: int | None
    overall_source: str | None

    def as_dict(self) -> dict:
        out: dict = {}
        if self.fink is not None:
            out["fink"] = {"bound": self.fink[0], "pair": list(self.fink[1])}
        if self.hartnell_rall is not None:
            out["hartnell_rall"] = {
                "bound": self.hartnell_rall[0],
                "edge": list(self.hartnell_rall[1]),
            }
        if self.chordal is not None:
            out["chordal"] = self.chordal
        if self.overall is not None:
            out["overall"] = self.overall
            out["overall_source"] = self.overall_source
        return out


def upper_bound_report(g: Graph) -> UpperBoundReport:
    """All applicable bondage upper bounds; inapplicable ones are absent."""
    fink = fink_bound(g)
    hr = hartnell_rall_bound(g)
    chordal_b: int | None = None
    if is_connected(g) and g.n >= 1:
        ok, _ = is_chordal(g)
        if ok:
            chordal_b = chordal_upper_bound(g)
    candidates = []
    if fink is not None:
        candidates.append((fink[0], "fink"))
    if hr is not None:
        candidates.append((hr[0], "hartnell_rall"))
    if chordal_b is not None:
        candidates.append((chordal_b, "chordal"))
    if not candidates:
        return UpperBoundReport(fink, hr, chordal_b, None, None)
    overall, source = min(candidates)
    return UpperBoundReport(fink, hr, chordal_b, overall, source)


@dataclass(frozen=True)
class BondageResult:
    b: int
    witness: tuple[Edge, ...]
    bounds: UpperBoundReport
    gamma_before: int


def bondage(
    g: Graph,
    limit_n: int = BONDAGE_VERTEX_LIMIT,
    limit_m: int = BONDAGE_EDGE_LIMIT,
) -> BondageResult:
    """Exact bondage number by edge-subset search in ascending size.

    The search is capped by the minimum applicable upper bound, visits
    subsets of each size in lexicographic order over the canonical edge
    list, and returns on the first subset whose removal increases gamma,
    so the reported witness is the lexicographically least one.
    """
    edges = g.edges()
    if not edges:
        raise BondageUndefined("the domination number of an edgeless graph cannot increase")
    if g.n > limit_n:
        raise LimitExceeded("bondage vertex count", g.n, limit_n)
    if len(edges) > limit_m:
        raise LimitExceeded("bondage edge count", len(edges), limit_m)
    gamma0 = gamma(g).gamma
    bounds = upper_bound_report(g)
    cap = bounds.overall if bounds.overall is not None else len(edges)
    cap = min(cap, len(edges))
    adj = list(g.adj)
    for k in range(1, cap + 1):
        for combo in combinations(edges, k):
            if gamma_after_removal_exceeds(adj, combo, gamma0):
                return BondageResult(k, combo, bounds, gamma0)
    raise AssertionError(
        f"no edge subset of size <= {cap} increased gamma; upper bound violated"
    )
