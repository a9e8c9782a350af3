import random

import pytest

from chordage import (
    LimitExceeded,
    all_min_dominating_sets,
    gamma,
    is_dominating,
    remove_edges,
)
from chordage.domination import has_dominating_set_of_size
from chordage.families import cartesian_product, clique, corona, path

from oracles import naive_gamma, random_graph


def test_is_dominating_examples():
    assert is_dominating(clique(5), [0])
    assert not is_dominating(path(4), [1])
    assert is_dominating(path(4), [1, 2])


def test_gamma_clique():
    for n in range(1, 7):
        assert gamma(clique(n)).gamma == 1


def test_gamma_corona():
    for n in range(2, 6):
        assert gamma(corona(clique(n), clique(1))).gamma == n


def test_gamma_pendant_ladder():
    for k in (2, 3):
        g = corona(cartesian_product(path(2), path(k)), clique(1))
        assert gamma(g).gamma == 2 * k


def test_gamma_path():
    assert gamma(path(4)).gamma == 2


def test_gamma_witness_dominates():
    rng = random.Random(3)
    for _ in range(100):
        g = random_graph(rng.randint(1, 10), rng.random(), rng)
        result = gamma(g)
        assert is_dominating(g, result.witness)
        assert len(result.witness) == result.gamma


def test_gamma_matches_naive():
    rng = random.Random(4)
    for _ in range(200):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        assert gamma(g).gamma == naive_gamma(g)


def test_gamma_isolated_vertices_forced():
    from chordage import build_graph

    g = build_graph(4, [(0, 1)])
    result = gamma(g)
    assert {2, 3} <= result.witness


def test_gamma_limit():
    from chordage import build_graph

    with pytest.raises(LimitExceeded):
        gamma(build_graph(40, []), limit=32)


def test_gamma_monotone_under_edge_removal():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng.randint(2, 8), 0.5, rng)
        base = gamma(g).gamma
        edges = g.edges()
        if not edges:
            continue
        removed = rng.sample(edges, rng.randint(1, len(edges)))
        assert gamma(remove_edges(g, removed)).gamma >= base


def test_single_edge_removal_increments_by_at_most_one():
    # classical fact the bondage definition leans on; checked empirically
    rng = random.Random(6)
    for _ in range(60):
        g = random_graph(rng.randint(2, 8), 0.5, rng)
        base = gamma(g).gamma
        for e in g.edges():
            assert gamma(remove_edges(g, [e])).gamma <= base + 1


def test_decision_form_agrees():
    rng = random.Random(7)
    for _ in range(60):
        g = random_graph(rng.randint(1, 9), rng.random(), rng)
        value = gamma(g).gamma
        assert has_dominating_set_of_size(g, value)
        if value > 1:
            assert not has_dominating_set_of_size(g, value - 1)


def test_all_min_dominating_sets_examples():
    assert all_min_dominating_sets(clique(3)) == [
        frozenset({0}),
        frozenset({1}),
        frozenset({2}),
    ]
    assert all_min_dominating_sets(path(3)) == [frozenset({1})]
    # frozen from the exhaustive subset scan over P_4
    assert all_min_dominating_sets(path(4)) == [
        frozenset({0, 2}),
        frozenset({0, 3}),
        frozenset({1, 2}),
        frozenset({1, 3}),
    ]
