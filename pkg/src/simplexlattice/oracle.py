"""Exact ground truth by brute force, independent of the labeling rule.

The search answers: over ALL admissible labelings of an instance, what is
the smallest achievable maximum number of colors on a cell?  It exists so
the constructive rule has something to be measured against; the two code
paths share nothing but the lattice enumeration, and the witness a search
returns is always re-checkable through :mod:`simplexlattice.verify`.

Instances must be tiny (roughly 25 vertices or fewer); the point is
auditability, not speed.  The search is a deterministic depth-first
backtracking over vertices in rank order with ascending colors, so repeated
runs explore identical node sequences.
"""

from __future__ import annotations

from dataclasses import dataclass

from .labeling import Labeling, label_all
from .lattice import Params, Perm, Point, coordinate, enumerate_vertices
from .verify import VerificationReport, _edges, _edge_rule_descriptor, full_report


@dataclass
class OracleResult:
    """Outcome of one exact search.

    When ``exhausted`` is True, ``min_max_colors`` is exact: the search
    proved no admissible labeling does better, and ``witness`` achieves it.
    Otherwise the value is only the best bound found before the node budget
    ran out.
    """

    params: Params
    edge_rule: str
    min_max_colors: int
    witness: Labeling | None
    nodes_explored: int
    exhausted: bool


class _BudgetExceeded(Exception):
    pass


def admissible_colors(v: Point, params: Params) -> frozenset[int]:
    """Colors ``c`` with ``v_c > v_{c-1}``; nonempty whenever ``q >= 1``
    because the virtual coordinates rise from 0 to q overall."""
    return frozenset(
        c for c in range(1, params.k + 1)
        if coordinate(v, c, params) > coordinate(v, c - 1, params)
    )


def _search(domains, incidence, num_edges, threshold, node_budget):
    """First admissible assignment with every edge at <= threshold colors.

    Returns (assignment or None, nodes used, completed flag); completed is
    False when the node budget ran out before the search finished.
    """
    n = len(domains)
    assignment = [0] * n
    edge_sets: list[set[int]] = [set() for _ in range(num_edges)]
    nodes = 0

    def dfs(i: int):
        nonlocal nodes
        if i == n:
            return list(assignment)
        for c in domains[i]:
            if nodes >= node_budget:
                raise _BudgetExceeded(nodes)
            nodes += 1
            added = []
            feasible = True
            for e in incidence[i]:
                present = edge_sets[e]
                if c in present:
                    continue
                if len(present) >= threshold:
                    feasible = False
                    break
                present.add(c)
                added.append(e)
            if feasible:
                assignment[i] = c
                solution = dfs(i + 1)
                if solution is not None:
                    return solution
            for e in added:
                edge_sets[e].remove(c)
        return None

    try:
        solution = dfs(0)
    except _BudgetExceeded:
        return None, nodes, False
    return solution, nodes, True


def min_max_colors(params: Params, pi: Perm | None = None,
                   budget: int = 1_000_000) -> OracleResult:
    """Exact minimum of the per-cell color count over admissible labelings.

    Strategy: threshold k is feasible outright (a cell has only k vertices),
    then re-search at threshold - 1 until infeasible; the last feasible
    threshold is the exact answer.  This is slower than branch and bound but
    each stage is a plain yes/no search that is easy to audit.

    The budget caps color-assignment attempts across all stages.  On
    exhaustion the result carries the best bound found so far and
    ``exhausted=False``; no exception escapes.
    """
    if params.q < 1:
        raise ValueError("oracle needs q >= 1 (no edges otherwise)")
    if budget < 0:
        raise ValueError("budget must be nonnegative")

    vertices = enumerate_vertices(params)
    rank_of = {v: i for i, v in enumerate(vertices)}
    edges = _edges(params, pi)
    edge_ranks = [[rank_of[u] for u in e.vertices] for e in edges]
    incidence: list[list[int]] = [[] for _ in vertices]
    for e_index, ranks in enumerate(edge_ranks):
        for r in ranks:
            incidence[r].append(e_index)
    domains = [sorted(admissible_colors(v, params)) for v in vertices]

    nodes_total = 0
    best = params.k  # k-uniform cells never exceed k colors
    witness_colors = None
    exhausted = False

    threshold = params.k
    while threshold >= 1:
        solution, nodes, completed = _search(
            domains, incidence, len(edges), threshold, budget - nodes_total
        )
        nodes_total += nodes
        if not completed:
            break
        if solution is None:
            exhausted = True  # infeasible here, so the previous level is exact
            break
        best = threshold
        witness_colors = solution
        threshold -= 1
    else:
        exhausted = True  # feasible all the way down to one color

    witness = (
        Labeling(params, tuple(witness_colors), "oracle-witness")
        if witness_colors is not None
        else None
    )
    return OracleResult(
        params=params,
        edge_rule=_edge_rule_descriptor(pi),
        min_max_colors=best,
        witness=witness,
        nodes_explored=nodes_total,
        exhausted=exhausted,
    )


def compare_pi_readings(params: Params, pi: Perm,
                        threshold: int = 2) -> tuple[VerificationReport, VerificationReport]:
    """Side-by-side verification of the two readings of the permutation rule.

    Returns (selected-index report, position report), both against the
    permutation's own edge set.  For the identity permutation the two
    labelings coincide pointwise; for others the position reading is
    expected to lose admissibility, and the reports show where.
    """
    selected = label_all(params, pi, "selected-index")
    position = label_all(params, pi, "position")
    return (
        full_report(selected, pi, threshold),
        full_report(position, pi, threshold),
    )
