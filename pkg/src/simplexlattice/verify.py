"""Exhaustive checks: admissibility of a labeling and colors-per-cell bounds.

Nothing here is sampled or probabilistic.  Every vertex and every cell of
the instance is visited, so a passing report at a given ``(k, q)`` is a
machine check of the claim at that size, and the violation lists of a
failing report are complete (serialization may cap them, the counts never
lie).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .labeling import Labeling, label_all, parse_rule
from .lattice import (
    Hyperedge,
    Params,
    Perm,
    Point,
    _build_cell,
    coordinate,
    enumerate_hyperedges,
    enumerate_vertices,
    is_consistent,
    is_permutation,
    pi_hyperedge,
)

# violation record types:
#   sperner: (vertex, color)
#   edge:    (base, perm, sorted color tuple)


@dataclass
class VerificationReport:
    """Outcome of checking one labeling against one edge set.

    ``sperner_*`` fields are None when only the color check ran, and the
    color-side fields are None when only the admissibility check ran.  The
    informational ``inconsistent_*`` fields are filled only by strict mode
    and never influence :attr:`passed`.
    """

    params: Params
    labeling_rule: str
    edge_rule: str
    threshold: int | None = None
    sperner_ok: bool | None = None
    sperner_violations: tuple[tuple[Point, int], ...] = ()
    edges_checked: int | None = None
    max_colors_per_edge: int | None = None
    histogram: dict[int, int] | None = None
    violating_edges: tuple[tuple[Point, Perm, tuple[int, ...]], ...] = ()
    inconsistent_cells_checked: int | None = None
    inconsistent_histogram: dict[int, int] | None = None
    inconsistent_max_colors: int | None = None

    @property
    def passed(self) -> bool:
        if self.sperner_ok is False:
            return False
        if self.max_colors_per_edge is not None and self.violating_edges:
            return False
        return True


def edge_colors(edge: Hyperedge, labeling: Labeling) -> frozenset[int]:
    """The set of colors a labeling puts on one cell's vertices."""
    return frozenset(labeling.color_of(u) for u in edge.vertices)


def _color_lookup(labeling: Labeling) -> dict[Point, int]:
    return dict(zip(enumerate_vertices(labeling.params), labeling.colors))


def _sperner_scan(labeling: Labeling) -> tuple[bool, tuple[tuple[Point, int], ...]]:
    params = labeling.params
    violations = []
    for v, c in zip(enumerate_vertices(params), labeling.colors):
        if coordinate(v, c, params) <= coordinate(v, c - 1, params):
            violations.append((v, c))
    return not violations, tuple(violations)


def check_sperner(labeling: Labeling) -> VerificationReport:
    """Does every vertex satisfy ``v_c > v_{c-1}`` for its color ``c``?

    Violations are listed exhaustively in vertex rank order.
    """
    ok, violations = _sperner_scan(labeling)
    return VerificationReport(
        params=labeling.params,
        labeling_rule=labeling.rule,
        edge_rule="none",
        sperner_ok=ok,
        sperner_violations=violations,
    )


def _edges(params: Params, pi: Perm | None) -> list[Hyperedge]:
    if pi is None:
        return enumerate_hyperedges(params)
    if not is_permutation(pi, params):
        raise ValueError(f"not a permutation image over 1..{params.k - 1}: {pi!r}")
    return [
        pi_hyperedge(v, pi, params)
        for v in enumerate_vertices(params.base())
        if is_consistent(pi, v)
    ]


def _edge_rule_descriptor(pi: Perm | None) -> str:
    return "identity" if pi is None else "pi:" + ",".join(str(x) for x in pi)


def _color_scan(labeling: Labeling, edges: list[Hyperedge], threshold: int):
    lookup = _color_lookup(labeling)
    histogram: Counter[int] = Counter()
    violating = []
    for edge in edges:
        try:
            colors = {lookup[u] for u in edge.vertices}
        except KeyError as exc:
            raise ValueError(f"edge vertex outside the labeling domain: {exc}") from None
        histogram[len(colors)] += 1
        if len(colors) > threshold:
            violating.append((edge.base, edge.perm, tuple(sorted(colors))))
    max_colors = max(histogram) if histogram else 0
    return dict(sorted(histogram.items())), max_colors, tuple(violating)


def check_colors(labeling: Labeling, pi: Perm | None = None, threshold: int = 2,
                 include_inconsistent: bool = False) -> VerificationReport:
    """Histogram the per-cell color counts and list cells above ``threshold``.

    ``pi=None`` checks the identity edge set; a permutation checks the
    consistent cells of that permutation.  ``include_inconsistent``
    additionally evaluates the labeling's rule on the non-cells ``F(v, pi)``
    of inconsistent pairs, purely as information: those contain points
    outside the lattice, so this needs a rule-backed labeling and makes no
    pass/fail claim.
    """
    params = labeling.params
    if params.q < 1:
        raise ValueError("color check needs q >= 1 (no edges otherwise)")
    if threshold < 1:
        raise ValueError(f"threshold must be >= 1, got {threshold}")
    histogram, max_colors, violating = _color_scan(labeling, _edges(params, pi), threshold)
    report = VerificationReport(
        params=params,
        labeling_rule=labeling.rule,
        edge_rule=_edge_rule_descriptor(pi),
        threshold=threshold,
        edges_checked=sum(histogram.values()),
        max_colors_per_edge=max_colors,
        histogram=histogram,
        violating_edges=violating,
    )
    if include_inconsistent and pi is not None:
        checked, hist, max_inc = _inconsistent_scan(labeling, pi)
        report.inconsistent_cells_checked = checked
        report.inconsistent_histogram = hist
        report.inconsistent_max_colors = max_inc
    return report


def _inconsistent_scan(labeling: Labeling, pi: Perm):
    params = labeling.params
    rule_fn = parse_rule(labeling.rule, params)
    if rule_fn is None:
        raise ValueError(
            f"strict mode needs a rule-backed labeling, got rule {labeling.rule!r}"
        )
    histogram: Counter[int] = Counter()
    checked = 0
    for v in enumerate_vertices(params.base()):
        if is_consistent(pi, v):
            continue
        cell = _build_cell(v, pi, params)
        colors = {rule_fn(u) for u in cell.vertices}
        histogram[len(colors)] += 1
        checked += 1
    max_colors = max(histogram) if histogram else 0
    return checked, dict(sorted(histogram.items())), max_colors


def full_report(labeling: Labeling, pi: Perm | None = None, threshold: int = 2,
                include_inconsistent: bool = False) -> VerificationReport:
    """Admissibility and color check in a single report."""
    ok, sperner_violations = _sperner_scan(labeling)
    report = check_colors(labeling, pi, threshold, include_inconsistent)
    report.sperner_ok = ok
    report.sperner_violations = sperner_violations
    return report


def check_all_pi(params: Params, threshold: int = 2, reading: str = "selected-index",
                 include_inconsistent: bool = False) -> list[VerificationReport]:
    """Build and check the permutation-rule labeling for every permutation.

    Reports come back in lexicographic permutation-image order.  For
    ``q < k`` the rule is partial and this propagates
    :class:`~simplexlattice.labeling.LabelUndefined`.
    """
    reports = []
    for pi in itertools.permutations(range(1, params.k)):
        labeling = label_all(params, pi, reading)
        reports.append(full_report(labeling, pi, threshold, include_inconsistent))
    return reports
