"""Seeded theorem-verification sweeps shared by the CLI and the test suite.

Each suite produces one InstanceResult per instance; a violation carries
enough detail to serialize a diagnostic bundle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bondage import bondage, clique_bondage_witness
from .certify import (
    DirectWitness,
    certificate_bound,
    certificate_verifies,
    check_claim1,
    check_claims_2_3,
    extract_certificate,
    minimize_psi,
    partition_distance,
)
from .chordal import all_cliques, is_chordal, longest_induced_cycle, max_clique
from .domination import gamma
from .families import (
    SplitMix64,
    cartesian_product,
    clique,
    corona,
    path,
    random_block_graph,
    random_chordal,
    random_tree,
)
from .graph import Graph, degree_stats, is_complete, remove_edges

SUITE_NAMES = (
    "chordal-bound",
    "tree-bound",
    "block-bound",
    "claims",
    "certificates",
    "clique-exact",
    "tightness",
    "quadrangulated",
)


@dataclass
class InstanceResult:
    index: int
    description: str
    passed: bool
    detail: dict = field(default_factory=dict)
    graph: Graph | None = None


def chordal_corpus(
    count: int,
    n_range: tuple[int, int],
    seed: int,
    max_edges: int = 30,
    max_density: float = 0.4,
) -> list[tuple[Graph, dict]]:
    """Seeded connected chordal non-clique graphs within an edge budget.

    Oversized or complete samples are rejected and redrawn from the same
    stream, so the corpus is fully determined by (count, n_range, seed).
    """
    lo, hi = n_range
    rng = SplitMix64(seed)
    out = []
    while len(out) < count:
        n = lo + rng.randrange(hi - lo + 1)
        density = (rng.randrange(1000) / 999.0) * max_density
        g = random_chordal(n, density, rng.next_u64())
        if g.m > max_edges or is_complete(g):
            continue
        out.append((g, {"n": n, "density": round(density, 4)}))
    return out


def suite_clique_exact(orders=range(2, 9)) -> list[InstanceResult]:
    """b(K_n) = ceil(n/2) exactly, and the matching-based witness checks."""
    results = []
    for idx, n in enumerate(orders):
        g = clique(n)
        expected = math.ceil(n / 2)
        res = bondage(g)
        witness_edges = clique_bondage_witness(n)
        g2 = remove_edges(g, witness_edges)
        witness_ok = (
            len(witness_edges) == expected and gamma(g2).gamma == gamma(g).gamma + 1
        )
        passed = res.b == expected and witness_ok
        results.append(
            InstanceResult(
                idx,
                f"K_{n}",
                passed,
                {"b": res.b, "expected": expected, "witness_ok": witness_ok},
                g,
            )
        )
    return results


def suite_tightness(orders=range(2, 6)) -> list[InstanceResult]:
    """The pendant-clique family attains the clique-number bound exactly."""
    results = []
    for idx, n in enumerate(orders):
        g = corona(clique(n), clique(1))
        gam = gamma(g).gamma
        res = bondage(g)
        passed = gam == n and res.b == n
        results.append(
            InstanceResult(
                idx,
                f"corona(K_{n}, K_1)",
                passed,
                {"gamma": gam, "b": res.b, "expected": n},
                g,
            )
        )
    return results


def suite_quadrangulated(ks=(2, 3)) -> list[InstanceResult]:
    """Pendant ladders: gamma = 2k, b = 3 = omega + 1, longest induced
    cycle 4."""
    results = []
    for idx, k in enumerate(ks):
        g = corona(cartesian_product(path(2), path(k)), clique(1))
        gam = gamma(g).gamma
        res = bondage(g)
        omega, _ = max_clique(g)
        lic = longest_induced_cycle(g)
        passed = gam == 2 * k and res.b == 3 and omega == 2 and lic == 4
        results.append(
            InstanceResult(
                idx,
                f"corona(P_2 x P_{k}, K_1)",
                passed,
                {"gamma": gam, "b": res.b, "omega": omega, "longest_induced_cycle": lic},
                g,
            )
        )
    return results


def suite_tree_bound(
    count: int = 300, n_range: tuple[int, int] = (2, 14), seed: int = 0
) -> list[InstanceResult]:
    """Random trees have bondage number 1 or 2."""
    lo, hi = n_range
    rng = SplitMix64(seed)
    results = []
    for idx in range(count):
        n = lo + rng.randrange(hi - lo + 1)
        g = random_tree(n, rng.next_u64())
        res = bondage(g)
        passed = res.b in (1, 2)
        results.append(
            InstanceResult(idx, f"random tree n={n}", passed, {"b": res.b}, g)
        )
    return results


def suite_block_bound(
    count: int = 200, n_range: tuple[int, int] = (2, 12), seed: int = 0
) -> list[InstanceResult]:
    """Random block graphs satisfy b <= Delta."""
    lo, hi = n_range
    rng = SplitMix64(seed)
    results = []
    for idx in range(count):
        n = lo + rng.randrange(hi - lo + 1)
        g = random_block_graph(n, rng.next_u64())
        res = bondage(g)
        _, delta_max, _ = degree_stats(g)
        passed = res.b <= delta_max
        results.append(
            InstanceResult(
                idx,
                f"random block graph n={n}",
                passed,
                {"b": res.b, "delta_max": delta_max},
                g,
            )
        )
    return results


def suite_chordal_bound(
    count: int = 500,
    n_range: tuple[int, int] = (4, 13),
    seed: int = 0,
    max_edges: int = 30,
) -> list[InstanceResult]:
    """Random connected chordal non-cliques satisfy b <= omega <= Delta."""
    results = []
    for idx, (g, meta) in enumerate(chordal_corpus(count, n_range, seed, max_edges)):
        res = bondage(g)
        omega, _ = max_clique(g)
        _, delta_max, _ = degree_stats(g)
        passed = res.b <= omega <= delta_max
        results.append(
            InstanceResult(
                idx,
                f"random chordal n={meta['n']} d={meta['density']}",
                passed,
                {"b": res.b, "omega": omega, "delta_max": delta_max},
                g,
            )
        )
    return results


def suite_claims(
    count: int = 200, n_range: tuple[int, int] = (4, 12), seed: int = 0
) -> list[InstanceResult]:
    """Layer-neighborhood cliques for every base clique, and the apex and
    independence claims on every psi-minimal witness."""
    results = []
    for idx, (g, meta) in enumerate(chordal_corpus(count, n_range, seed)):
        detail: dict = {}
        passed = True
        for k in all_cliques(g):
            ok, violation = check_claim1(g, partition_distance(g, k))
            if not ok:
                passed = False
                detail["claim1"] = {"K": sorted(k), **violation}
                break
        if passed and not is_complete(g):
            sw = minimize_psi(g)
            if sw is not None:
                report = check_claims_2_3(g, sw)
                if not report.ok:
                    passed = False
                    detail["claims_2_3_5"] = list(report.violations)
                detail["psi"] = sw.psi
        results.append(
            InstanceResult(
                idx, f"random chordal n={meta['n']}", passed, detail, g
            )
        )
    return results


def suite_certificates(
    count: int = 500,
    n_range: tuple[int, int] = (4, 13),
    seed: int = 0,
    max_edges: int = 30,
) -> list[InstanceResult]:
    """End-to-end certificate extraction on the chordal-bound corpus."""
    results = []
    for idx, (g, meta) in enumerate(chordal_corpus(count, n_range, seed, max_edges)):
        cert = extract_certificate(g)
        omega, _ = max_clique(g)
        ok = certificate_verifies(g, cert) and certificate_bound(cert) <= omega
        detail = {
            "certificate": type(cert).__name__,
            "bound": certificate_bound(cert),
            "omega": omega,
        }
        if isinstance(cert, DirectWitness):
            detail["edges"] = [list(e) for e in cert.edges]
        results.append(
            InstanceResult(idx, f"random chordal n={meta['n']}", ok, detail, g)
        )
    return results


_SUITE_DEFAULTS = {
    "tree-bound": (300, (2, 14)),
    "block-bound": (200, (2, 12)),
    "chordal-bound": (500, (4, 13)),
    "claims": (200, (4, 12)),
    "certificates": (500, (4, 13)),
}


def run_suite(
    name: str,
    count: int | None = None,
    n_range: tuple[int, int] | None = None,
    seed: int = 0,
) -> list[InstanceResult]:
    if name == "clique-exact":
        return suite_clique_exact()
    if name == "tightness":
        return suite_tightness()
    if name == "quadrangulated":
        return suite_quadrangulated()
    if name in _SUITE_DEFAULTS:
        default_count, default_range = _SUITE_DEFAULTS[name]
        count = default_count if count is None else count
        n_range = default_range if n_range is None else n_range
        fn = {
            "tree-bound": suite_tree_bound,
            "block-bound": suite_block_bound,
            "chordal-bound": suite_chordal_bound,
            "claims": suite_claims,
            "certificates": suite_certificates,
        }[name]
        return fn(count, n_range, seed)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
