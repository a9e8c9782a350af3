import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordage import (
    GraphError,
    build_graph,
    connected_components,
    degree_stats,
    distance,
    induced_subgraph,
    is_independent_set,
    remove_edges,
)
from chordage.families import clique, cycle, path, star


def graphs(max_n=12):
    """Hypothesis strategy: a random simple graph as (n, edge bitmask)."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=max_n))
        all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        chosen = draw(st.sets(st.sampled_from(all_edges))) if all_edges else set()
        return build_graph(n, chosen)

    return build()


def test_build_path():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.m == 3


def test_build_isolated():
    g = build_graph(3, [])
    assert g.m == 0
    assert connected_components(g) == [[0], [1], [2]]


def test_build_rejects_self_loop():
    with pytest.raises(GraphError, match=r"\(0, 0\)"):
        build_graph(2, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(GraphError, match=r"\(0, 5\)"):
        build_graph(3, [(0, 5)])


def test_build_deduplicates():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_remove_edges_k3_to_p3():
    g = remove_edges(clique(3), [(0, 1)])
    assert g.edges() == [(0, 2), (1, 2)]


def test_remove_edges_identity():
    g = path(4)
    assert remove_edges(g, []) == g


def test_remove_edges_disconnects_c4():
    g = remove_edges(cycle(4), [(0, 1), (2, 3)])
    assert len(connected_components(g)) == 2


def test_remove_edges_missing_edge():
    with pytest.raises(GraphError, match=r"\(0, 2\)"):
        remove_edges(path(4), [(0, 2)])


def test_remove_edges_leaves_original_untouched():
    g = clique(3)
    remove_edges(g, [(0, 1)])
    assert g.m == 3


def test_distance_path():
    g = path(4)
    assert distance(g, 0, 3) == 3
    assert distance(g, 2, 2) == 0
    assert distance(g, 0, 1) == 1


def test_distance_disconnected():
    g = build_graph(4, [(0, 1), (2, 3)])
    assert distance(g, 0, 2) == math.inf


def test_connected_components_sorted():
    g = build_graph(5, [(3, 4), (0, 2)])
    assert connected_components(g) == [[0, 2], [1], [3, 4]]


def test_induced_subgraph_k4():
    sub = induced_subgraph(clique(4), [1, 2, 3])
    assert sub.graph.m == 3
    assert sub.to_parent == (1, 2, 3)
    assert sub.to_sub == {1: 0, 2: 1, 3: 2}


def test_induced_subgraph_nonadjacent():
    sub = induced_subgraph(path(4), [0, 2])
    assert sub.graph.m == 0


def test_induced_subgraph_empty():
    sub = induced_subgraph(path(4), [])
    assert sub.graph.n == 0


def test_degree_stats():
    assert degree_stats(clique(4))[:2] == (3, 3)
    assert degree_stats(star(4))[:2] == (1, 3)
    assert degree_stats(path(4))[:2] == (1, 2)
    assert degree_stats(build_graph(0, [])) == (0, 0, [])


def test_independent_set():
    g = path(4)
    assert is_independent_set(g, [0, 2])
    assert not is_independent_set(g, [0, 1])
    assert is_independent_set(g, [])


@given(graphs())
def test_adjacency_symmetric_irreflexive(g):
    for v in range(g.n):
        assert not g.adj[v] >> v & 1
        for u in g.neighbors(v):
            assert g.adj[u] >> v & 1


@given(graphs())
def test_induced_on_full_vertex_set_is_identity(g):
    sub = induced_subgraph(g, range(g.n))
    assert sub.graph == g


@settings(max_examples=40)
@given(graphs(max_n=8), st.data())
def test_triangle_inequality(g, data):
    if g.n < 3:
        return
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    w = data.draw(st.integers(0, g.n - 1))
    assert distance(g, u, w) <= distance(g, u, v) + distance(g, v, w)
