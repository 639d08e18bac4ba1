from oridom.corpus import (
    all_trees,
    multipartite_instances,
    prism_corpus,
    random_graphs,
)
from oridom.invariants import is_bipartite


def test_tree_counts_up_to_isomorphism():
    # classic unlabeled tree counts
    assert [len(all_trees(n)) for n in range(1, 8)] == [1, 1, 1, 2, 3, 6, 11]


def test_trees_are_trees():
    for n in range(2, 8):
        for T in all_trees(n):
            assert T.n == n and T.m == n - 1
            assert is_bipartite(T)[0]
            # connected: BFS from 0 reaches everything
            seen = {0}
            frontier = [0]
            while frontier:
                v = frontier.pop()
                for u in T.neighbors(v):
                    if u not in seen:
                        seen.add(u)
                        frontier.append(u)
            assert len(seen) == n


def test_multipartite_instances_cap():
    instances = multipartite_instances(18)
    for sizes in instances:
        total = sum(sizes)
        edges = (total * total - sum(s * s for s in sizes)) // 2
        assert edges <= 18
        assert list(sizes) == sorted(sizes)
        assert len(sizes) >= 2
    assert (1, 1) in instances
    assert (1, 18) in instances
    assert (2, 2, 2) in instances
    assert (1, 1, 1, 1, 1, 1) in instances
    assert (2, 2, 4) not in instances  # 20 edges
    assert (2, 2, 4) in multipartite_instances(20)


def test_corpora_are_deterministic():
    a = random_graphs(20, max_n=8, max_edges=14, seed=7)
    b = random_graphs(20, max_n=8, max_edges=14, seed=7)
    assert [(g.n, g.edges) for g in a] == [(g.n, g.edges) for g in b]
    c = random_graphs(20, max_n=8, max_edges=14, seed=8)
    assert [(g.n, g.edges) for g in a] != [(g.n, g.edges) for g in c]


def test_prism_corpus_fits_scan_cap():
    for G in prism_corpus(count=50, seed=0):
        assert G.n <= 7
        assert G.n + 2 * G.m <= 18
