import random

import pytest

from chordage import (
    LimitExceeded,
    NotChordalError,
    all_cliques,
    is_chordal,
    longest_induced_cycle,
    max_clique,
    maximal_cliques,
    maximum_cardinality_search,
)
from chordage.chordal import _max_clique_bnb, is_perfect_elimination_ordering
from chordage.families import cartesian_product, clique, corona, cycle, path, random_chordal

from oracles import brute_has_hole, brute_max_clique_size, brute_maximal_cliques, brute_all_cliques, random_graph


def test_mcs_on_clique_is_peo():
    g = clique(4)
    assert is_perfect_elimination_ordering(g, maximum_cardinality_search(g))


def test_mcs_on_tree_is_peo():
    g = path(6)
    assert is_perfect_elimination_ordering(g, maximum_cardinality_search(g))


def test_mcs_on_c4_fails_peo():
    g = cycle(4)
    assert not is_perfect_elimination_ordering(g, maximum_cardinality_search(g))


def test_c4_hole_witness():
    ok, hole = is_chordal(cycle(4))
    assert not ok
    assert len(hole.cycle) == 4


def test_diamond_is_chordal():
    g = clique(4)
    from chordage import remove_edges

    assert is_chordal(remove_edges(g, [(0, 1)]))[0]


def test_grid_not_chordal():
    # brute-force oracle agrees: P_2 x P_3 contains an induced C_4
    g = cartesian_product(path(2), path(3))
    assert brute_has_hole(g)
    ok, hole = is_chordal(g)
    assert not ok
    assert len(hole.cycle) >= 4


def test_is_chordal_matches_bruteforce():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 9)
        g = random_graph(n, rng.random(), rng)
        assert is_chordal(g)[0] == (not brute_has_hole(g))


def test_hole_witness_is_induced_cycle():
    rng = random.Random(8)
    checked = 0
    for _ in range(200):
        g = random_graph(rng.randint(4, 9), rng.random(), rng)
        ok, hole = is_chordal(g)
        if ok:
            continue
        checked += 1
        cyc = hole.cycle
        k = len(cyc)
        assert k >= 4
        for i in range(k):
            for j in range(i + 1, k):
                adjacent = g.has_edge(cyc[i], cyc[j])
                consecutive = j - i == 1 or (i == 0 and j == k - 1)
                assert adjacent == consecutive
    assert checked > 20


def test_max_clique_corona():
    for n in range(2, 6):
        g = corona(clique(n), clique(1))
        assert max_clique(g)[0] == n


def test_max_clique_path():
    assert max_clique(path(5))[0] == 2


def test_max_clique_quadrangulated_family():
    for k in (2, 3):
        g = corona(cartesian_product(path(2), path(k)), clique(1))
        assert max_clique(g)[0] == 2


def test_max_clique_agrees_with_bnb_on_random_chordal():
    for seed in range(40):
        g = random_chordal(12, 0.4, seed)
        omega, witness = max_clique(g)
        assert omega == _max_clique_bnb(g)
        assert len(witness) == omega


def test_max_clique_nonchordal_fallback():
    assert max_clique(cycle(5))[0] == 2
    g = cartesian_product(path(2), path(3))
    assert max_clique(g)[0] == brute_max_clique_size(g)


def test_maximal_cliques_examples():
    assert maximal_cliques(clique(4)) == [frozenset({0, 1, 2, 3})]
    assert maximal_cliques(path(4)) == [
        frozenset({0, 1}),
        frozenset({1, 2}),
        frozenset({2, 3}),
    ]
    assert len(maximal_cliques(corona(clique(3), clique(1)))) == 4


def test_maximal_cliques_rejects_nonchordal():
    with pytest.raises(NotChordalError, match="fallback"):
        maximal_cliques(cycle(4))


def test_maximal_cliques_match_bruteforce():
    for seed in range(30):
        g = random_chordal(9, 0.45, seed)
        assert set(maximal_cliques(g)) == brute_maximal_cliques(g)


def test_all_cliques_counts():
    assert len(list(all_cliques(clique(3)))) == 7
    assert [sorted(c) for c in all_cliques(path(3))] == [[0], [1], [2], [0, 1], [1, 2]]
    assert len(list(all_cliques(corona(clique(3), clique(1))))) == 13


def test_all_cliques_match_bruteforce():
    for seed in range(20):
        g = random_chordal(8, 0.5, seed)
        assert set(all_cliques(g)) == brute_all_cliques(g)


def test_all_cliques_limit():
    with pytest.raises(LimitExceeded, match="24"):
        list(all_cliques(random_chordal(25, 0.1, 0)))


def test_longest_induced_cycle():
    assert longest_induced_cycle(path(5)) == 0
    assert longest_induced_cycle(cycle(6)) == 6
    assert longest_induced_cycle(clique(4)) == 3
    g = corona(cartesian_product(path(2), path(3)), clique(1))
    assert longest_induced_cycle(g) == 4
