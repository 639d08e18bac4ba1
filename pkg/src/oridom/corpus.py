"""Deterministic instance corpora for the randomized property suites.

All randomness flows through ``random.Random`` seeded with a string key,
so every corpus is reproducible across runs and platforms. Trees are
enumerated exhaustively up to isomorphism by decoding every Prufer
sequence and deduplicating with a rooted canonical encoding.
"""

from __future__ import annotations

import random
from heapq import heapify, heappop, heappush
from itertools import combinations, product

from .graphs import UndirectedGraph, build_graph

DEFAULT_SEED = 0


def _rng(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}:{label}")


def random_graphs(
    count: int, max_n: int, max_edges: int, seed: int = DEFAULT_SEED, label: str = "graphs"
) -> list[UndirectedGraph]:
    """Random labeled graphs with n <= max_n and |E| <= max_edges."""
    rng = _rng(seed, label)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        pairs = list(combinations(range(n), 2))
        m = rng.randint(0, min(max_edges, len(pairs)))
        out.append(build_graph(n, rng.sample(pairs, m)))
    return out


def prism_corpus(
    count: int = 50,
    max_n: int = 7,
    max_product_edges: int = 18,
    seed: int = DEFAULT_SEED,
) -> list[UndirectedGraph]:
    """Random graphs whose product with K_2 stays inside the scan cap."""
    rng = _rng(seed, "prism")
    out = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        pairs = list(combinations(range(n), 2))
        cap = min(len(pairs), max(0, (max_product_edges - n) // 2))
        m = rng.randint(0, cap)
        out.append(build_graph(n, rng.sample(pairs, m)))
    return out


def multipartite_instances(max_edges: int) -> list[tuple[int, ...]]:
    """All ascending part-size tuples (k >= 2) with at most max_edges edges."""
    out: set[tuple[int, ...]] = set()
    first_cap = int(max_edges**0.5) + 1

    def extend(parts: list[int], total: int, edges: int):
        if len(parts) >= 2:
            out.add(tuple(parts))
        s = parts[-1] if parts else 1
        while True:
            if total == 0:
                if s > first_cap:
                    break
                added = 0
            else:
                added = s * total
                if edges + added > max_edges:
                    break
            parts.append(s)
            extend(parts, total + s, edges + added)
            parts.pop()
            s += 1

    extend([], 0, 0)
    return sorted(out, key=lambda t: (len(t), t))


def _prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapify(leaves)
    edges = []
    for x in seq:
        leaf = heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heappush(leaves, x)
    u, v = heappop(leaves), heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def _tree_canon(n: int, edges: list[tuple[int, int]]) -> str:
    """Canonical encoding of an unrooted tree: root at its center(s)."""
    if n == 1:
        return "()"
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    degree = [len(adj[v]) for v in range(n)]
    alive = n
    layer = [v for v in range(n) if degree[v] == 1]
    removed = [False] * n
    while alive > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            alive -= 1
            for u in adj[v]:
                if not removed[u]:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    centers = [v for v in range(n) if not removed[v]]

    def encode(v: int, parent: int) -> str:
        inner = sorted(encode(u, v) for u in adj[v] if u != parent)
        return "(" + "".join(inner) + ")"

    if len(centers) == 1:
        return encode(centers[0], -1)
    a, b = centers
    return "".join(sorted((encode(a, b), encode(b, a))))


def all_trees(n: int) -> list[UndirectedGraph]:
    """Every tree on n vertices, one representative per isomorphism class."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return [build_graph(1, [])]
    if n == 2:
        return [build_graph(2, [(0, 1)])]
    seen: dict[str, UndirectedGraph] = {}
    for seq in product(range(n), repeat=n - 2):
        edges = _prufer_decode(seq, n)
        key = _tree_canon(n, edges)
        if key not in seen:
            seen[key] = build_graph(n, edges)
    return list(seen.values())
