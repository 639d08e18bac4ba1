"""Classical invariants consumed by the domination bounds.

Independence and matching numbers are computed by exact branch and bound,
valid for arbitrary (non-bipartite) graphs at desk scale. All searches are
deterministic: ties break on canonical vertex / edge order, so witnesses
are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from itertools import combinations

from .graphs import CapExceeded, Digraph, UndirectedGraph, _iter_bits

BIP_VERTEX_CAP = 20


def max_independent_set_masks(adj: list[int], n: int) -> int:
    """Maximum independent set of the graph given by adjacency bitrows.

    Returns the witness as a bitmask. Branches on the highest-degree
    vertex of the remaining graph; upper bound is a greedy clique cover.
    """
    full = (1 << n) - 1
    best_size = 0
    best_mask = 0

    def clique_cover_bound(remaining: int) -> int:
        count = 0
        left = remaining
        while left:
            v = (left & -left).bit_length() - 1
            clique = 1 << v
            left ^= 1 << v
            for u in _iter_bits(left):
                if adj[u] & clique == clique:
                    clique |= 1 << u
                    left ^= 1 << u
            count += 1
        return count

    def recurse(remaining: int, chosen: int, size: int):
        nonlocal best_size, best_mask
        if remaining == 0:
            if size > best_size:
                best_size = size
                best_mask = chosen
            return
        if size + clique_cover_bound(remaining) <= best_size:
            return
        pick = -1
        pick_deg = -1
        for v in _iter_bits(remaining):
            deg = (adj[v] & remaining).bit_count()
            if deg > pick_deg:
                pick = v
                pick_deg = deg
        bit = 1 << pick
        recurse(remaining & ~(adj[pick] | bit), chosen | bit, size + 1)
        recurse(remaining & ~bit, chosen, size)

    recurse(full, 0, 0)
    return best_mask


def max_independent_set(G: UndirectedGraph) -> tuple[int, ...]:
    return tuple(_iter_bits(max_independent_set_masks(list(G.adj), G.n)))


def independence_number(G: UndirectedGraph) -> int:
    return len(max_independent_set(G))


def max_matching(G: UndirectedGraph) -> tuple[tuple[int, int], ...]:
    """Maximum matching by include/exclude branch and bound over edges.

    The branching edge is the one whose endpoint degrees (within the
    remaining graph) sum highest; the bound is matched + remaining
    non-isolated vertices / 2.
    """
    best: list[tuple[tuple[int, int], ...]] = [()]

    def recurse(edges: tuple[tuple[int, int], ...], chosen: list[tuple[int, int]]):
        if not edges:
            if len(chosen) > len(best[0]):
                best[0] = tuple(chosen)
            return
        degree: dict[int, int] = {}
        for u, v in edges:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        if len(chosen) + len(degree) // 2 <= len(best[0]):
            return
        pick = max(range(len(edges)), key=lambda i: (degree[edges[i][0]] + degree[edges[i][1]], -i))
        u, v = edges[pick]
        # include {u,v}: drop every edge touching u or v
        kept = tuple(e for e in edges if u not in e and v not in e)
        chosen.append((u, v))
        recurse(kept, chosen)
        chosen.pop()
        # exclude {u,v}
        recurse(edges[:pick] + edges[pick + 1 :], chosen)

    recurse(G.edges, [])
    return best[0]


def matching_number(G: UndirectedGraph) -> int:
    return len(max_matching(G))


def cover_numbers(G: UndirectedGraph) -> tuple[int, int | None]:
    """(vertex cover number, edge cover number or None with isolated vertices)."""
    beta = G.n - independence_number(G)
    if any(G.adj[v] == 0 for v in range(G.n)):
        return beta, None
    return beta, G.n - matching_number(G)


def is_bipartite(G: UndirectedGraph):
    """(flag, (left, right)) — two-coloring when bipartite, else (False, None)."""
    color = [-1] * G.n
    for start in range(G.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in _iter_bits(G.adj[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False, None
    left = tuple(v for v in range(G.n) if color[v] == 0)
    right = tuple(v for v in range(G.n) if color[v] == 1)
    return True, (left, right)


def _bipartition_of_subset(adj: tuple[int, ...], subset_mask: int):
    """Two-color the induced subgraph; None when an odd cycle appears."""
    color: dict[int, int] = {}
    for start in _iter_bits(subset_mask):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in _iter_bits(adj[v] & subset_mask):
                if u not in color:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    left = tuple(v for v in sorted(color) if color[v] == 0)
    right = tuple(v for v in sorted(color) if color[v] == 1)
    return left, right


def max_induced_bipartite(G: UndirectedGraph, cap: int = BIP_VERTEX_CAP):
    """Largest vertex subset inducing a bipartite subgraph, with bipartition.

    Subsets are enumerated in decreasing size, first hit wins; the default
    cap keeps the enumeration at desk scale.
    """
    if G.n > cap:
        raise CapExceeded(f"bip enumeration capped at n <= {cap}, got n={G.n}")
    for size in range(G.n, 0, -1):
        for subset in combinations(range(G.n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            split = _bipartition_of_subset(G.adj, mask)
            if split is not None:
                return subset, split
    raise AssertionError("unreachable: single vertex is bipartite")


def max_induced_bipartite_order(G: UndirectedGraph, cap: int = BIP_VERTEX_CAP) -> int:
    subset, _ = max_induced_bipartite(G, cap)
    return len(subset)


def is_acyclic(D: Digraph):
    """(True, topological order) or (False, a directed cycle)."""
    indeg = [D.in_degree(v) for v in range(D.n)]
    ready = [v for v in range(D.n) if indeg[v] == 0]
    heapify(ready)
    order = []
    while ready:
        v = heappop(ready)
        order.append(v)
        for u in _iter_bits(D.out_rows[v]):
            indeg[u] -= 1
            if indeg[u] == 0:
                heappush(ready, u)
    if len(order) == D.n:
        return True, tuple(order)
    # every leftover vertex keeps an in-neighbor among the leftover, so a
    # backward walk must revisit a vertex; the revisited segment, reversed,
    # is a directed cycle
    leftover = {v for v in range(D.n) if indeg[v] > 0}
    v = min(leftover)
    seen_at: dict[int, int] = {}
    walk: list[int] = []
    while v not in seen_at:
        seen_at[v] = len(walk)
        walk.append(v)
        v = next(u for u in _iter_bits(D.in_rows[v]) if u in leftover)
    return False, tuple(reversed(walk[seen_at[v] :]))


@dataclass(frozen=True)
class InvariantReport:
    alpha: int
    alpha_prime: int
    beta: int
    beta_prime: int | None
    bip: int
    is_bipartite: bool


def invariant_report(G: UndirectedGraph) -> InvariantReport:
    alpha = independence_number(G)
    alpha_prime = matching_number(G)
    beta, beta_prime = G.n - alpha, None
    if all(G.adj[v] for v in range(G.n)):
        beta_prime = G.n - alpha_prime
    flag, _ = is_bipartite(G)
    bip = G.n if flag else max_induced_bipartite_order(G)
    return InvariantReport(alpha, alpha_prime, beta, beta_prime, bip, flag)
