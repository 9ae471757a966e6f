"""One verdict operation per certified inequality: each evaluates the two
sides of a bound on a concrete graph and reports slack plus any witness data.

Verdicts are oriented so that ``lhs >= rhs`` is the claimed inequality and
``slack = lhs - rhs``; ``holds`` allows the global numeric tolerance.
Informational verdicts (open-ended ratio reports) are flagged and never count
as violations; hypothesis-guarded bounds report ``applicable=False`` instead
of failing when their hypothesis is not met.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from .errors import ContractViolation
from .graphs import (
    Graph,
    VertexSet,
    dominating_vertices,
    induced_subgraph,
    is_clique,
    is_connected,
    is_regular,
    is_star,
    isolated_vertices,
)
from .oracles import SEARCH_BUDGET_N, domination_number, max_cut
from .partitions import degree_class_partition, domination_partition
from .spectral import (
    graph_inertia,
    numeric_tolerance,
    spectrum,
    square_energies,
)


@dataclass(frozen=True)
class BoundVerdict:
    """Evaluated instance of one bound: lhs >= rhs up to tolerance."""

    bound_name: str
    lhs: float
    rhs: float
    slack: float
    holds: bool
    witness: dict[str, Any] | None = None
    applicable: bool = True
    informational: bool = False


def _verdict(
    name: str,
    lhs: float,
    rhs: float,
    n: int,
    witness: dict[str, Any] | None = None,
    applicable: bool = True,
    informational: bool = False,
) -> BoundVerdict:
    slack = lhs - rhs
    return BoundVerdict(
        name, lhs, rhs, slack, slack >= -numeric_tolerance(n), witness, applicable, informational
    )


def bound_efgw(g: Graph) -> BoundVerdict:
    """min(s+, s-) >= n - 1 for connected graphs (conjectured in general;
    verified exhaustively at small scale)."""
    if not is_connected(g):
        raise ContractViolation("bound requires a connected graph")
    e = square_energies(g)
    return _verdict("efgw", min(e.s_plus, e.s_minus), g.n - 1, g.n)


def bound_domination(g: Graph, budget_n: int = SEARCH_BUDGET_N) -> BoundVerdict:
    """min(s+, s-) >= n - domination number."""
    cert = domination_number(g, budget_n)
    e = square_energies(g)
    partition = domination_partition(g, cert)
    witness = {
        "gamma": cert.gamma,
        "dominating_set": list(cert.witness.vertices),
        "partition": partition.as_lists(),
    }
    return _verdict(
        "domination", min(e.s_plus, e.s_minus), g.n - cert.gamma, g.n, witness
    )


def bound_inertia(g: Graph) -> BoundVerdict:
    """min(s+, s-) >= max(n+, n0, n-) for graphs without isolated vertices."""
    isolated = isolated_vertices(g)
    if isolated:
        raise ContractViolation(f"isolated vertex {isolated[0]}")
    e = square_energies(g)
    inert = graph_inertia(g)
    witness = {"n_plus": inert.n_plus, "n_zero": inert.n_zero, "n_minus": inert.n_minus}
    rhs = max(inert.n_plus, inert.n_zero, inert.n_minus)
    return _verdict("inertia", min(e.s_plus, e.s_minus), rhs, g.n, witness)


def bound_dominating_vertex(g: Graph) -> BoundVerdict:
    """s- >= n - 1 when some vertex is adjacent to all others; equality holds
    exactly for stars and complete graphs."""
    doms = dominating_vertices(g)
    if not doms:
        raise ContractViolation("no dominating vertex")
    e = square_energies(g)
    slack = e.s_minus - (g.n - 1)
    equality = abs(slack) <= 1e-6
    if equality:
        classification = "clique" if is_clique(g) else "star" if is_star(g) else "unexpected"
    else:
        classification = "strict"
    witness = {
        "dominating_vertex": doms[0],
        "equality": equality,
        "classification": classification,
    }
    return _verdict("dominating-vertex", e.s_minus, g.n - 1, g.n, witness)


def bound_triangle(g: Graph) -> BoundVerdict:
    """s+ >= m^(4/3) / (n^(1/3) * lambda_1^(2/3)), via triangle counting."""
    if g.m < 1:
        raise ContractViolation("bound requires m >= 1")
    e = square_energies(g)
    lam1 = spectrum(g).values[0]
    rhs = g.m ** (4.0 / 3.0) / (g.n ** (1.0 / 3.0) * lam1 ** (2.0 / 3.0))
    return _verdict("triangle", e.s_plus, rhs, g.n, {"lambda_1": lam1})


def bound_ratio(g: Graph) -> BoundVerdict:
    """s-/s+ <= 2 n^(1/4), reported as lhs = 2 n^(1/4) >= rhs = s-/s+."""
    e = square_energies(g)
    if e.s_plus <= numeric_tolerance(g.n):
        raise ContractViolation("bound requires s+ > 0")
    ratio = e.s_minus / e.s_plus
    return _verdict("ratio", 2.0 * g.n**0.25, ratio, g.n, {"ratio": ratio})


def bound_regular(g: Graph) -> BoundVerdict:
    """s+ >= (k/4)^(2/3) * n for k-regular graphs."""
    if not is_regular(g) or g.n == 0:
        raise ContractViolation("bound requires a regular graph")
    k = g.degree(0)
    if k < 1:
        raise ContractViolation("bound requires degree >= 1")
    e = square_energies(g)
    rhs = (k / 4.0) ** (2.0 / 3.0) * g.n
    return _verdict("regular", e.s_plus, rhs, g.n, {"k": k})


def bound_alon_boppana(g: Graph) -> BoundVerdict:
    """lambda_2^2 >= (m^(4/3)/(n^(1/3) lambda_1^(2/3)) - lambda_1^2) / n when
    lambda_1 <= sqrt(m) (2n)^(-1/8); uses s+ <= lambda_1^2 + n lambda_2^2.

    Marked not applicable (never failed) when the hypothesis is not met.
    """
    if g.n < 2 or g.m < 1:
        raise ContractViolation("bound requires n >= 2 and m >= 1")
    vals = spectrum(g).values
    lam1, lam2 = vals[0], vals[1]
    threshold = math.sqrt(g.m) * (2.0 * g.n) ** (-1.0 / 8.0)
    witness = {"lambda_1": lam1, "lambda_2": lam2, "threshold": threshold}
    if lam1 > threshold:
        witness["hypothesis"] = "lambda_1 exceeds sqrt(m) (2n)^(-1/8); bound not applicable"
        return _verdict("alon-boppana", lam2 * lam2, 0.0, g.n, witness, applicable=False)
    rhs = (g.m ** (4.0 / 3.0) / (g.n ** (1.0 / 3.0) * lam1 ** (2.0 / 3.0)) - lam1 * lam1) / g.n
    return _verdict("alon-boppana", lam2 * lam2, rhs, g.n, witness)


def bound_surplus(g: Graph, budget_n: int = SEARCH_BUDGET_N) -> BoundVerdict:
    """min(s+, s-) >= surplus(G)^2 / m, with an optimal bipartition witness."""
    cut = max_cut(g, budget_n)
    e = square_energies(g)
    rhs = cut.surplus**2 / g.m if g.m else 0.0
    witness = {
        "maxcut": cut.maxcut,
        "surplus": cut.surplus,
        "side": list(cut.side.vertices),
    }
    return _verdict("surplus", min(e.s_plus, e.s_minus), rhs, g.n, witness)


def certify_s_plus_pipeline(g: Graph) -> BoundVerdict:
    """Certified lower bound on s+ from the degree-class partition.

    Case 1: the head class holds at least m/(2k^2) edges; certify via the
    ratio bound on it, giving m_0 / (2 |V_0|^(1/4)). Case 2: some other class
    holds m/(2k^2) edges; certify via the triangle bound with the class's max
    degree standing in for lambda_1. Case 3: otherwise some class pair joins
    at least m/k^2 edges (the pigeonhole over pairs guarantees
    m(2 - 1/k)/k^2); certify via the surplus bound on the pair using the
    explicit cross cut, no exact maxcut needed. The certificate lifts to the
    whole graph by superadditivity.
    """
    if g.m < 1:
        raise ContractViolation("pipeline requires m >= 1")
    isolated = isolated_vertices(g)
    if isolated:
        raise ContractViolation(f"isolated vertex {isolated[0]}")
    partition = degree_class_partition(g)
    k = len(partition.parts)
    masks = [part.members for part in partition.parts]
    sizes = [part.members.bit_count() for part in partition.parts]
    inside = [
        sum((g.adj[v] & mask).bit_count() for v in VertexSet(mask, g.n)) // 2
        for mask in masks
    ]
    m = g.m
    e = square_energies(g)
    witness: dict[str, Any] = {
        "k": k,
        "class_sizes": sizes,
        "class_edges": inside,
        "partition": partition.as_lists(),
        "case_threshold": m / (2.0 * k * k),
    }

    if inside[0] >= m / (2.0 * k * k):
        certified = inside[0] / (2.0 * sizes[0] ** 0.25)
        witness["case"] = "case-1"
        return _verdict("pipeline", e.s_plus, certified, g.n, witness)

    for i in range(1, k):
        if inside[i] >= m / (2.0 * k * k):
            sub = induced_subgraph(g, partition.parts[i])
            max_deg = max(sub.degrees())
            certified = inside[i] ** (4.0 / 3.0) / (
                sizes[i] ** (1.0 / 3.0) * max_deg ** (2.0 / 3.0)
            )
            witness["case"] = "case-2"
            witness["class_index"] = i
            return _verdict("pipeline", e.s_plus, certified, g.n, witness)

    best_pair = None
    best_cross = -1
    for i in range(k):
        for j in range(i + 1, k):
            cross = sum(
                (g.adj[v] & masks[j]).bit_count() for v in VertexSet(masks[i], g.n)
            )
            if cross > best_cross:
                best_cross = cross
                best_pair = (i, j)
    # Pigeonhole over the <= k^2/2 pairs guarantees the safe threshold when
    # every class misses the m/(2k^2) mark.
    if best_pair is None or best_cross < m / (k * k):
        raise AssertionError(
            "no degree-class pair meets the safe cross-edge threshold"
        )
    i, j = best_pair
    pair_edges = inside[i] + inside[j] + best_cross
    surplus_lb = max(0.0, (best_cross - inside[i] - inside[j]) / 2.0)
    certified = surplus_lb**2 / pair_edges if pair_edges else 0.0
    witness["case"] = "case-3"
    witness["pair"] = [i, j]
    witness["pair_cross_edges"] = best_cross
    witness["pair_edges"] = pair_edges
    witness["surplus_lower_bound"] = surplus_lb
    witness["safe_threshold"] = m / (k * k)
    witness["pigeonhole_threshold"] = 2.0 * m / (k * k)
    return _verdict("pipeline", e.s_plus, certified, g.n, witness)


def energy_wall_check(g: Graph) -> BoundVerdict:
    """Informational: energy >= 2 min(n+, n-), an open question; never
    asserted by sweeps."""
    e = square_energies(g)
    inert = graph_inertia(g)
    rhs = 2.0 * min(inert.n_plus, inert.n_minus)
    return _verdict("energy-wall", e.energy, rhs, g.n, informational=True)


def conjecture_checks(g: Graph, budget_n: int = SEARCH_BUDGET_N) -> list[BoundVerdict]:
    """Informational surplus ratios: s+ against surplus and s- against
    surplus^(6/7). No pass/fail; the constants are open."""
    cut = max_cut(g, budget_n)
    e = square_energies(g)
    surp = cut.surplus
    ratio_plus = e.s_plus / surp if surp > 0 else None
    rhs_minus = surp ** (6.0 / 7.0)
    ratio_minus = e.s_minus / rhs_minus if surp > 0 else None
    return [
        _verdict(
            "surplus-linear-ratio",
            e.s_plus,
            surp,
            g.n,
            {"ratio": ratio_plus, "surplus": surp},
            informational=True,
        ),
        _verdict(
            "surplus-67-ratio",
            e.s_minus,
            rhs_minus,
            g.n,
            {"ratio": ratio_minus, "surplus": surp},
            informational=True,
        ),
    ]


def join_complement_spectrum_check(h: Graph) -> BoundVerdict:
    """Spectrum identity for the join of two complement copies of a regular
    graph: apart from its top eigenvalue, the join's spectrum is the multiset
    {-lambda - 1} over the base spectrum, doubled except for one copy of the
    top base eigenvalue."""
    from .families import join_complement

    if h.n < 1:
        raise ContractViolation("base graph must have at least one vertex")
    big = join_complement(h)
    actual = sorted(spectrum(big).values[1:])
    base = spectrum(h).values
    expected = [-lam - 1.0 for lam in base] * 2
    expected.remove(-base[0] - 1.0)
    expected.sort()
    deviation = max(
        (abs(a - b) for a, b in zip(actual, expected)), default=0.0
    ) if len(actual) == len(expected) else float("inf")
    tau = numeric_tolerance(big.n)
    return _verdict(
        "join-complement-spectrum",
        tau,
        deviation,
        big.n,
        {"expected": expected, "actual": actual},
    )


BOUND_FUNCTIONS = {
    "efgw": bound_efgw,
    "domination": bound_domination,
    "inertia": bound_inertia,
    "dominating-vertex": bound_dominating_vertex,
    "triangle": bound_triangle,
    "ratio": bound_ratio,
    "regular": bound_regular,
    "alon-boppana": bound_alon_boppana,
    "surplus": bound_surplus,
    "pipeline": certify_s_plus_pipeline,
    "energy-wall": energy_wall_check,
}
