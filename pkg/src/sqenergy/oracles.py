"""Exact exponential-time oracles for the combinatorial quantities feeding the
bound certificates: domination number, independence number, maxcut/surplus,
triangle count, induced-path detection, and the structural filters used in
the minimal-counterexample hunt.

All searches are deterministic (ascending-index tie-breaking) and guarded by
explicit budgets; none of them approximate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, ContractViolation
from .graphs import (
    Graph,
    VertexSet,
    _bipartition_mask,
    _component_masks,
    _iter_bits,
    is_connected,
)

SEARCH_BUDGET_N = 24
SUBSET_PROPERTY_BUDGET_N = 16


@dataclass(frozen=True)
class CutReport:
    """Maximum cut size, its surplus over m/2, and one optimal side."""

    maxcut: int
    surplus: float
    side: VertexSet


@dataclass(frozen=True)
class DominationCertificate:
    gamma: int
    witness: VertexSet


@dataclass(frozen=True)
class P3CutVertexReport:
    """Whether every induced 3-vertex path contains a vertex whose removal
    disconnects the graph."""

    holds: bool
    violations: tuple[tuple[int, int, int], ...]
    violation_count: int
    triples_checked: int


@dataclass(frozen=True)
class BipartiteRemovalReport:
    """Whether every vertex subset inducing a bipartite graph with at least
    |U| edges leaves a disconnected or empty remainder when removed."""

    holds: bool
    violations: tuple[tuple[int, ...], ...]
    violation_count: int
    qualifying_subsets: int


def _check_budget(g: Graph, budget_n: int) -> None:
    if g.n > budget_n:
        raise BudgetExceeded(f"exact search budget n <= {budget_n}, got n={g.n}")


def is_dominating(g: Graph, mask: int) -> bool:
    covered = mask
    for v in _iter_bits(mask):
        covered |= g.adj[v]
    return covered == (1 << g.n) - 1


def domination_number(g: Graph, budget_n: int = SEARCH_BUDGET_N) -> DominationCertificate:
    """Smallest dominating set, found by iterative-deepening branch and bound.

    Branches on the least-index uncovered vertex; candidate dominators are
    tried in ascending order, so the certificate is deterministic.
    """
    _check_budget(g, budget_n)
    n = g.n
    if n == 0:
        return DominationCertificate(0, VertexSet(0, 0))
    full = (1 << n) - 1
    closed = [g.adj[v] | (1 << v) for v in range(n)]
    max_cover = max(c.bit_count() for c in closed)

    def search(covered: int, depth: int) -> int | None:
        if covered == full:
            return 0
        if depth == 0:
            return None
        missing = n - covered.bit_count()
        if (missing + max_cover - 1) // max_cover > depth:
            return None
        v = ((~covered & full) & -(~covered & full)).bit_length() - 1
        for u in _iter_bits(closed[v]):
            sub = search(covered | closed[u], depth - 1)
            if sub is not None:
                return sub | (1 << u)
        return None

    for k in range(n + 1):
        mask = search(0, k)
        if mask is not None:
            return DominationCertificate(k, VertexSet(mask, n))
    raise AssertionError("unreachable: v itself dominates v")


def independence_number(
    g: Graph, budget_n: int = SEARCH_BUDGET_N
) -> tuple[int, VertexSet]:
    """Maximum independent set size with a witness, by branch and bound."""
    _check_budget(g, budget_n)
    n = g.n
    closed = [g.adj[v] | (1 << v) for v in range(n)]
    best = -1
    best_mask = 0

    def search(candidates: int, chosen: int, size: int) -> None:
        nonlocal best, best_mask
        if size + candidates.bit_count() <= best:
            return
        if candidates == 0:
            if size > best:
                best, best_mask = size, chosen
            return
        v = (candidates & -candidates).bit_length() - 1
        search(candidates & ~closed[v], chosen | (1 << v), size + 1)
        search(candidates & ~(1 << v), chosen, size)

    search((1 << n) - 1, 0, 0)
    return best, VertexSet(best_mask, n)


def cut_size(g: Graph, side: int) -> int:
    """Number of edges with exactly one endpoint in ``side``."""
    total = 0
    for v in _iter_bits(side):
        total += (g.adj[v] & ~side).bit_count()
    return total


def max_cut(g: Graph, budget_n: int = SEARCH_BUDGET_N) -> CutReport:
    """Exact maximum cut by a Gray-code sweep over the 2^(n-1) bipartitions
    with vertex 0 pinned outside the reported side."""
    _check_budget(g, budget_n)
    n = g.n
    if n <= 1:
        return CutReport(0, 0.0, VertexSet(0, n))
    deg = g.degrees()
    side = 0
    cut = 0
    best = 0
    best_side = 0
    for i in range(1, 1 << (n - 1)):
        v = (i & -i).bit_length()  # trailing zeros + 1: vertices 1..n-1 flip
        bit = 1 << v
        same = (g.adj[v] & side).bit_count()
        cut += 2 * same - deg[v] if side & bit else deg[v] - 2 * same
        side ^= bit
        if cut > best:
            best, best_side = cut, side
    if cut_size(g, best_side) != best:
        raise AssertionError("incremental cut accounting disagrees with recount")
    return CutReport(best, best - g.m / 2.0, VertexSet(best_side, n))


def triangle_count_exact(g: Graph) -> int:
    """Exact triangle count by bitset intersection over ordered edges."""
    total = 0
    for u in range(g.n):
        above_u = g.adj[u] >> (u + 1) << (u + 1)
        for v in _iter_bits(above_u):
            common = g.adj[u] & g.adj[v]
            total += (common >> (v + 1)).bit_count()
    return total


def find_induced_p3(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically least (u, v, w) with u < w, edges uv and vw, and uw
    absent; None exactly when the graph is a disjoint union of cliques."""
    for u in range(g.n):
        for v in range(g.n):
            if v == u or not g.has_edge(u, v):
                continue
            rest = g.adj[v] & ~g.adj[u]
            for w in _iter_bits(rest >> (u + 1) << (u + 1)):
                if w != v:
                    return (u, v, w)
    return None


def induces_p3(g: Graph, triple: tuple[int, int, int]) -> bool:
    u, v, w = triple
    if len({u, v, w}) != 3 or not all(0 <= x < g.n for x in triple):
        return False
    return g.has_edge(u, v) and g.has_edge(v, w) and not g.has_edge(u, w)


def cut_vertices(g: Graph) -> list[int]:
    """Vertices whose removal disconnects the graph."""
    full = (1 << g.n) - 1
    out = []
    for v in range(g.n):
        domain = full & ~(1 << v)
        if domain and len(_component_masks(g.adj, domain)) > 1:
            out.append(v)
    return out


def check_p3_cut_vertex_property(g: Graph, max_listed: int = 20) -> P3CutVertexReport:
    """For every induced 3-vertex path, does some path vertex disconnect the
    graph when removed? Vacuously true without induced paths."""
    if not is_connected(g):
        raise ContractViolation("property check requires a connected graph")
    cuts = 0
    for v in cut_vertices(g):
        cuts |= 1 << v
    violations: list[tuple[int, int, int]] = []
    count = 0
    checked = 0
    for u in range(g.n):
        for v in range(g.n):
            if v == u or not g.has_edge(u, v):
                continue
            rest = g.adj[v] & ~g.adj[u]
            for w in _iter_bits(rest >> (u + 1) << (u + 1)):
                if w == v:
                    continue
                checked += 1
                if not (cuts & ((1 << u) | (1 << v) | (1 << w))):
                    count += 1
                    if len(violations) < max_listed:
                        violations.append((u, v, w))
    return P3CutVertexReport(count == 0, tuple(violations), count, checked)


def _subset_edges(adj: tuple[int, ...], mask: int) -> int:
    total = 0
    for v in _iter_bits(mask):
        total += (adj[v] & mask).bit_count()
    return total // 2


def check_bipartite_removal_property(
    g: Graph,
    max_subset_size: int | None = None,
    max_listed: int = 20,
) -> BipartiteRemovalReport:
    """For every subset U inducing a bipartite graph with at least |U| edges,
    is the rest of the graph empty or disconnected?

    Enumerates all subsets when n <= 16; larger graphs need an explicit
    ``max_subset_size`` cap.
    """
    if not is_connected(g):
        raise ContractViolation("property check requires a connected graph")
    if max_subset_size is None and g.n > SUBSET_PROPERTY_BUDGET_N:
        raise BudgetExceeded(
            f"full subset scan limited to n <= {SUBSET_PROPERTY_BUDGET_N}; "
            "pass max_subset_size to cap the search"
        )
    full = (1 << g.n) - 1
    violations: list[tuple[int, ...]] = []
    count = 0
    qualifying = 0
    for mask in range(1, full + 1):
        size = mask.bit_count()
        if max_subset_size is not None and size > max_subset_size:
            continue
        # A bipartite subgraph with >= |U| edges needs |U| >= 4.
        if size < 4 or _subset_edges(g.adj, mask) < size:
            continue
        if _bipartition_mask(g.adj, mask) is None:
            continue
        qualifying += 1
        rest = full & ~mask
        if rest == 0 or len(_component_masks(g.adj, rest)) > 1:
            continue
        count += 1
        if len(violations) < max_listed:
            violations.append(tuple(_iter_bits(mask)))
    return BipartiteRemovalReport(count == 0, tuple(violations), count, qualifying)
