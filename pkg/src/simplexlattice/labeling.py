"""The two-colors-per-cell labeling rule and its permutation variants.

For a point ``v`` (with the virtual coordinates ``v_0 = 0``, ``v_k = q``) the
deficiency is ``max{t - v_t : t in [0, k]}``.  The rule colors ``v`` with
``i + 1`` where ``i`` is a deficiency-attaining index whose successor
coordinate is strictly larger; picking which attaining index depends on the
scan order, and that is where the permutation variants differ:

* identity rule: the smallest attaining index;
* permutation rule, "selected-index" reading: scan indices in the order
  ``0, p(1), ..., p(k-1), k`` and return the first attaining index;
* permutation rule, "position" reading: same scan, but return the scan
  position instead of the index found there.

The selected-index reading is the one with the guarantee (its color always
satisfies the admissibility constraint ``v_c > v_{c-1}``).  The position
reading is kept only so the verifier can demonstrate that it breaks
admissibility; see :mod:`simplexlattice.oracle`.

Whenever ``q >= k`` the rules are total.  For ``q < k`` some points attain
their deficiency only at index ``k``, where no color exists; those raise
:class:`LabelUndefined`.

The arithmetic here never requires its input to be weakly increasing, and
that is deliberate: the verifier's strict mode evaluates the rules on raw
integer tuples that fall outside the lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    Params,
    Perm,
    Point,
    coordinate,
    enumerate_vertices,
    extended_image,
    is_permutation,
    vertex_rank,
)

READING_SELECTED = "selected-index"
READING_POSITION = "position"
READINGS = (READING_SELECTED, READING_POSITION)


class LabelUndefined(ValueError):
    """The rule selected index k, one past the last color."""

    def __init__(self, v: Point, params: Params):
        self.vertex = tuple(v)
        super().__init__(
            f"labeling rule is undefined at {self.vertex}: the deficiency is "
            f"attained only at index {params.k} (possible only for q <= k; "
            f"here q={params.q})"
        )


@dataclass(frozen=True)
class Labeling:
    """A total color assignment, one color per vertex in rank order."""

    params: Params
    colors: tuple[int, ...]
    rule: str

    def __post_init__(self) -> None:
        if len(self.colors) != self.params.num_vertices:
            raise ValueError(
                f"expected {self.params.num_vertices} colors, got {len(self.colors)}"
            )
        for c in self.colors:
            if not 1 <= c <= self.params.k:
                raise ValueError(f"color {c} outside [1, {self.params.k}]")

    def color_of(self, v: Point) -> int:
        return self.colors[vertex_rank(v, self.params)]


def deficiency(v: Point, params: Params) -> int:
    """``max{t - v_t}`` over the extended index range [0, k]; never negative."""
    return max(t - coordinate(v, t, params) for t in range(params.k + 1))


def argmin_index(v: Point, params: Params) -> int:
    """Smallest index attaining the deficiency; 0 exactly when it is 0."""
    best = 0
    best_t = 0
    for t in range(1, params.k + 1):
        value = t - coordinate(v, t, params)
        if value > best:
            best, best_t = value, t
    return best_t


def label(v: Point, params: Params) -> int:
    """The identity-rule color ``argmin_index(v) + 1``.

    The returned color ``c`` always satisfies ``v_c > v_{c-1}``: an index
    attaining the maximum of ``t - v_t`` has a strictly larger successor
    coordinate, otherwise the successor would exceed the maximum.
    """
    i = argmin_index(v, params)
    if i == params.k:
        raise LabelUndefined(v, params)
    return i + 1


def _scan(v: Point, pi: Perm, params: Params) -> tuple[int, int]:
    # first scan position whose index attains the deficiency -> (position, index)
    r = deficiency(v, params)
    for t in range(params.k + 1):
        idx = extended_image(pi, t, params)
        if idx - coordinate(v, idx, params) == r:
            return t, idx
    raise AssertionError("deficiency is attained somewhere by construction")


def selected_index_pi(v: Point, pi: Perm, params: Params) -> int:
    """The attaining coordinate index found first in the scan order
    ``0, pi(1), ..., pi(k-1), k``; equals :func:`argmin_index` for the
    identity permutation."""
    return _scan(v, pi, params)[1]


def label_pi(v: Point, pi: Perm, params: Params, reading: str = READING_SELECTED) -> int:
    """The permutation-rule color.

    With the default selected-index reading the admissibility constraint
    holds for the returned color, same argument as for :func:`label`.  The
    position reading does not carry that guarantee.
    """
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}; expected one of {READINGS}")
    t, idx = _scan(v, pi, params)
    if idx == params.k:
        # both readings run out of colors in the same situation: the scan
        # found the deficiency nowhere before position k
        raise LabelUndefined(v, params)
    return idx + 1 if reading == READING_SELECTED else t + 1


def rule_descriptor(pi: Perm | None, reading: str = READING_SELECTED) -> str:
    """Canonical rule string stored in labelings and files.

    The identity image canonicalizes to "identity": both readings of the
    permutation rule coincide with the plain rule there, so files produced
    under either name are byte-identical.
    """
    if pi is None or pi == tuple(range(1, len(pi) + 1)):
        return "identity"
    text = "pi:" + ",".join(str(x) for x in pi)
    if reading == READING_POSITION:
        text += ":position"
    return text


def parse_rule(rule: str, params: Params):
    """Return the point -> color function a descriptor names, or None.

    Unknown descriptors (external files, oracle witnesses) yield None: their
    colors are data, not something this package can recompute.
    """
    if rule == "identity":
        return lambda v: label(v, params)
    if rule.startswith("pi:"):
        parts = rule.split(":")
        pi = tuple(int(x) for x in parts[1].split(","))
        if not is_permutation(pi, params):
            raise ValueError(f"rule {rule!r} names an invalid permutation")
        reading = READING_SELECTED
        if len(parts) == 3:
            if parts[2] != "position":
                raise ValueError(f"unknown rule modifier in {rule!r}")
            reading = READING_POSITION
        elif len(parts) > 3:
            raise ValueError(f"malformed rule descriptor {rule!r}")
        return lambda v: label_pi(v, pi, params, reading)
    return None


def label_all(params: Params, pi: Perm | None = None,
              reading: str = READING_SELECTED) -> Labeling:
    """Apply a rule to the whole lattice, colors in vertex rank order.

    Total for ``q >= k``; below that, the first undefined vertex raises
    :class:`LabelUndefined` (the exception names it).
    """
    if pi is None:
        colors = tuple(label(v, params) for v in enumerate_vertices(params))
    else:
        if not is_permutation(pi, params):
            raise ValueError(f"not a permutation image over 1..{params.k - 1}: {pi!r}")
        colors = tuple(label_pi(v, pi, params, reading) for v in enumerate_vertices(params))
    return Labeling(params, colors, rule_descriptor(pi, reading))
