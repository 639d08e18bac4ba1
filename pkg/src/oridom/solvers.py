"""Exact digraph domination and packing solvers plus the brute-force oracle.

gamma() is a set-cover style branch and bound over closed in-neighborhoods;
rho() reduces maximum packing to maximum independent set on a conflict
graph. dom_oracle() deliberately shares no code with the optimized search
machinery: it is a plain double loop over orientation bitmasks and vertex
subsets, used as ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import CapExceeded, Digraph, UndirectedGraph, _iter_bits
from .invariants import max_independent_set_masks

ORACLE_EDGE_CAP = 16
ORACLE_VERTEX_CAP = 12


@dataclass(frozen=True)
class DomResult:
    """Value plus certifying witness and search statistics."""

    value: int
    witness: object  # vertex tuple for gamma/rho, Orientation for dom
    nodes_explored: int = 0
    pruned_by: dict = field(default_factory=dict, compare=False)


def is_dominating(D: Digraph, S) -> bool:
    """True iff the closed out-neighborhoods of S cover every vertex."""
    cover = 0
    for v in S:
        cover |= D.out_rows[v] | (1 << v)
    return cover == (1 << D.n) - 1


def is_packing(D: Digraph, P) -> bool:
    """True iff P spans no arc and no two members share an in-neighbor."""
    pmask = 0
    for v in P:
        pmask |= 1 << v
    for v in P:
        if D.out_rows[v] & pmask:
            return False
    for w in range(D.n):
        if (D.out_rows[w] & pmask).bit_count() > 1:
            return False
    return True


def _gamma_engine(nout: list[int], nin: list[int], n: int, cutoff: int | None):
    """Minimum dominating set over bitset rows.

    nout[v]/nin[v] are closed out/in neighborhoods. Vertices of in-degree 0
    (closed in-neighborhood == own bit) are forced into every solution.
    With a cutoff, the search may return any certified value <= cutoff
    early; the result is then an upper bound rather than the exact minimum.

    Returns (value, witness_mask, nodes, prune_tally).
    """
    full = (1 << n) - 1
    forced = 0
    covered = 0
    for v in range(n):
        if nin[v] == 1 << v:
            forced |= 1 << v
    for v in _iter_bits(forced):
        covered |= nout[v]
    best_size = n
    best_mask = full
    if covered == full:
        best_size = forced.bit_count()
        best_mask = forced
    nodes = 0
    pruned = {"bound": 0, "cutoff": 0}

    def lower_bound(uncovered: int) -> int:
        used = 0
        count = 0
        for v in _iter_bits(uncovered):
            if nin[v] & used == 0:
                used |= nin[v]
                count += 1
        return count

    def recurse(size: int, chosen: int, covered: int) -> bool:
        """Returns True when the cutoff fired and search should unwind."""
        nonlocal best_size, best_mask, nodes
        nodes += 1
        if covered == full:
            if size < best_size:
                best_size = size
                best_mask = chosen
            if cutoff is not None and best_size <= cutoff:
                pruned["cutoff"] += 1
                return True
            return False
        uncovered = full & ~covered
        if size + lower_bound(uncovered) >= best_size:
            pruned["bound"] += 1
            return False
        # branch on the uncovered vertex with fewest potential dominators
        target = -1
        target_count = n + 1
        for v in _iter_bits(uncovered):
            c = nin[v].bit_count()
            if c < target_count:
                target = v
                target_count = c
        for w in _iter_bits(nin[target]):
            if recurse(size + 1, chosen | (1 << w), covered | nout[w]):
                return True
        return False

    if covered != full:
        recurse(forced.bit_count(), forced, covered)
    return best_size, best_mask, nodes, pruned


def gamma(D: Digraph, cutoff: int | None = None) -> DomResult:
    """Exact domination number with witness (upper bound only under cutoff)."""
    nout = [D.out_rows[v] | (1 << v) for v in range(D.n)]
    nin = [D.in_rows[v] | (1 << v) for v in range(D.n)]
    value, mask, nodes, pruned = _gamma_engine(nout, nin, D.n, cutoff)
    return DomResult(value, tuple(_iter_bits(mask)), nodes, pruned)


def rho(D: Digraph) -> DomResult:
    """Exact packing number via maximum independent set on the conflict graph.

    Two vertices conflict when an arc joins them or some vertex has arcs to
    both; packings are exactly the independent sets of that graph.
    """
    conflict = [D.out_rows[v] | D.in_rows[v] for v in range(D.n)]
    for w in range(D.n):
        row = D.out_rows[w]
        for v in _iter_bits(row):
            conflict[v] |= row & ~(1 << v)
    mask = max_independent_set_masks(conflict, D.n)
    return DomResult(mask.bit_count(), tuple(_iter_bits(mask)))


def dom_oracle(G: UndirectedGraph) -> int:
    """Ground-truth orientable domination number, no pruning of any kind.

    Every orientation bitmask; for each, every vertex subset in increasing
    size until one dominates. Kept independent of the optimized search on
    purpose. Refuses instances beyond |E| <= 16, n <= 12.
    """
    n, edges = G.n, G.edges
    m = len(edges)
    if m > ORACLE_EDGE_CAP or n > ORACLE_VERTEX_CAP:
        raise CapExceeded(
            f"oracle capped at |E| <= {ORACLE_EDGE_CAP}, n <= {ORACLE_VERTEX_CAP};"
            f" got |E|={m}, n={n}"
        )
    full = (1 << n) - 1
    subsets_by_size = [
        list(combinations(range(n), k)) for k in range(n + 1)
    ]
    best = 0
    for bits in range(1 << m):
        rows = [1 << v for v in range(n)]
        for e in range(m):
            u, v = edges[e]
            if bits >> e & 1:
                rows[v] |= 1 << u
            else:
                rows[u] |= 1 << v
        value = n
        done = False
        for size in range(1, n + 1):
            for subset in subsets_by_size[size]:
                cover = 0
                for v in subset:
                    cover |= rows[v]
                if cover == full:
                    value = size
                    done = True
                    break
            if done:
                break
        if value > best:
            best = value
    return best
