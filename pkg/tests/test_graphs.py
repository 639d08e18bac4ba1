import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oridom.graphs import (
    Orientation,
    build_digraph,
    build_graph,
    complete,
    cycle,
    delete_edge,
    empty,
    family,
    induced_subgraph,
    multipartite,
    path,
    underlying_graph,
)


def test_build_k3():
    G = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert G.n == 3 and G.m == 3
    assert G.edges == ((0, 1), (0, 2), (1, 2))


def test_build_k1():
    G = build_graph(1, [])
    assert G.n == 1 and G.m == 0


def test_build_rejects_duplicate_edge():
    with pytest.raises(ValueError, match="duplicate edge"):
        build_graph(4, [(0, 1), (0, 1)])
    with pytest.raises(ValueError, match="duplicate edge"):
        build_graph(4, [(0, 1), (1, 0)])


def test_build_rejects_self_loop():
    with pytest.raises(ValueError, match="self-loop"):
        build_graph(3, [(1, 1)])


def test_build_rejects_out_of_range():
    with pytest.raises(ValueError, match="out of range"):
        build_graph(3, [(0, 3)])


def test_build_rejects_empty_vertex_set():
    with pytest.raises(ValueError):
        build_graph(0, [])


def test_canonical_edge_order():
    G = build_graph(4, [(3, 2), (1, 0), (2, 0)])
    assert G.edges == ((0, 1), (0, 2), (2, 3))


def test_families():
    assert path(4).m == 3
    assert complete(9).m == 36
    assert cycle(5).m == 5
    assert empty(3).m == 0
    with pytest.raises(ValueError):
        cycle(2)


def test_multipartite_k222():
    G = multipartite(2, 2, 2)
    assert G.n == 6 and G.m == 12
    assert G.parts == ((0, 1), (2, 3), (4, 5))
    for part in G.parts:
        for u in part:
            for v in part:
                if u != v:
                    assert not G.has_edge(u, v)


def test_multipartite_autosorts_with_warning():
    with pytest.warns(UserWarning, match="not ascending"):
        G = multipartite(2, 1)
    assert G.parts == ((0,), (1, 2))


def test_family_descriptors():
    assert family("path:4").edges == path(4).edges
    assert family("multi:1,2,2").edges == multipartite(1, 2, 2).edges
    with pytest.raises(ValueError, match="unknown family"):
        family("wheel:5")
    with pytest.raises(ValueError):
        family("path")


def test_digraph_validation():
    D = build_digraph(3, [(0, 1), (1, 0), (1, 2)])
    assert D.out_degree(1) == 2 and D.in_degree(0) == 1
    with pytest.raises(ValueError, match="duplicate arc"):
        build_digraph(3, [(0, 1), (0, 1)])
    with pytest.raises(ValueError, match="self-loop"):
        build_digraph(3, [(2, 2)])
    with pytest.raises(ValueError, match="out of range"):
        build_digraph(2, [(0, 2)])


def test_orientation_bits_range():
    G = path(3)
    with pytest.raises(ValueError, match="out of range"):
        Orientation(G, 4)
    Orientation(G, 3)  # max valid bitmask for two edges


def test_orientation_to_digraph_no_opposite_arcs():
    G = cycle(4)
    for bits in range(1 << G.m):
        D = Orientation(G, bits).to_digraph()
        assert D.m == G.m
        assert not any((v, u) in D.arcs for u, v in D.arcs)
        assert underlying_graph(D).edges == G.edges


def test_induced_subgraph_and_delete_edge():
    G = cycle(5)
    H = induced_subgraph(G, [0, 1, 2])
    assert H.edges == ((0, 1), (1, 2))
    S = delete_edge(G, 4, 0)
    assert S.m == 4 and S.n == 5
    with pytest.raises(ValueError, match="no such edge"):
        delete_edge(G, 0, 2)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 8))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return build_graph(n, picks)


@given(small_graphs())
@settings(max_examples=80)
def test_adjacency_symmetric_and_canonical(G):
    for u, v in G.edges:
        assert u < v
        assert G.has_edge(u, v) and G.has_edge(v, u)
    assert list(G.edges) == sorted(G.edges)
    assert sum(G.degree(v) for v in range(G.n)) == 2 * G.m
