"""Integer points of a dilated simplex and the cells of its edgewise subdivision.

Conventions used throughout the package:

* An instance is a pair ``(k, q)``.  Points live in ``Z^(k-1)`` and satisfy
  ``0 <= v_1 <= ... <= v_{k-1} <= q``.  Two virtual coordinates are fixed,
  ``v_0 = 0`` and ``v_k = q``; :func:`coordinate` applies that convention.
* Points and permutations are plain tuples of ints.  A permutation is stored
  in one-line image notation ``(p(1), ..., p(k-1))`` over ``{1, ..., k-1}``.
* Every enumeration is lexicographic.  Nothing about the mathematics forces
  an order, but a fixed order is what makes ranks, reports, and file output
  reproducible byte for byte.

All arithmetic is exact ``int``; all functions are pure and safe to call
concurrently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

Point = tuple[int, ...]
Perm = tuple[int, ...]


class InconsistentPair(ValueError):
    """A (point, permutation) pair that is not a cell of the subdivision."""


@dataclass(frozen=True)
class Params:
    """Instance size: ``k`` coordinates/colors and dilation factor ``q``.

    ``q = 0`` is allowed so that the degenerate single-point lattice exists;
    it is what hyperedge base points of a ``q = 1`` instance live in.
    """

    k: int
    q: int

    def __post_init__(self) -> None:
        if self.k < 3:
            raise ValueError(f"k must be >= 3, got {self.k}")
        if self.q < 0:
            raise ValueError(f"q must be >= 0, got {self.q}")

    @property
    def num_vertices(self) -> int:
        return comb(self.q + self.k - 1, self.k - 1)

    def base(self) -> "Params":
        """The lattice holding hyperedge base points (dilation ``q - 1``)."""
        if self.q < 1:
            raise ValueError("base lattice requires q >= 1")
        return Params(self.k, self.q - 1)


class Hyperedge:
    """An ordered k-vertex cell of the subdivision.

    ``vertices[0]`` is the base point; ``vertices[j]`` adds the unit vectors
    ``e_{perm(k-1)}, ..., e_{perm(k-j)}`` to it.  Instances compare and hash
    by value.
    """

    __slots__ = ("base", "perm", "vertices")

    def __init__(self, base: Point, perm: Perm, vertices: tuple[Point, ...]):
        self.base = base
        self.perm = perm
        self.vertices = vertices

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hyperedge):
            return NotImplemented
        return (self.base, self.perm, self.vertices) == (other.base, other.perm, other.vertices)

    def __hash__(self) -> int:
        return hash((self.base, self.perm, self.vertices))

    def __repr__(self) -> str:
        return f"Hyperedge(base={self.base}, perm={self.perm})"


def coordinate(v: Point, t: int, params: Params) -> int:
    """Coordinate ``v_t`` under the convention ``v_0 = 0`` and ``v_k = q``."""
    if t < 0 or t > params.k:
        raise ValueError(f"coordinate index {t} outside [0, {params.k}]")
    if t == 0:
        return 0
    if t == params.k:
        return params.q
    return v[t - 1]


def is_lattice_point(v: Point, params: Params) -> bool:
    """True iff ``v`` is a weakly increasing (k-1)-tuple within [0, q]."""
    if len(v) != params.k - 1:
        return False
    prev = 0
    for x in v:
        if not isinstance(x, int) or x < prev:
            return False
        prev = x
    return prev <= params.q


def is_permutation(pi: Perm, params: Params) -> bool:
    """True iff ``pi`` is a bijection on {1, ..., k-1} in image notation."""
    return len(pi) == params.k - 1 and sorted(pi) == list(range(1, params.k))


def identity_permutation(params: Params) -> Perm:
    return tuple(range(1, params.k))


def extended_image(pi: Perm, t: int, params: Params) -> int:
    """The permutation extended by the fixed points 0 and k at the ends."""
    if t == 0:
        return 0
    if t == params.k:
        return params.k
    return pi[t - 1]


def enumerate_vertices(params: Params) -> list[Point]:
    """All lattice points, in lexicographic order.

    The count is ``binomial(q + k - 1, k - 1)``: weakly increasing tuples
    over ``{0, ..., q}`` are combinations with replacement.
    """
    return list(itertools.combinations_with_replacement(range(params.q + 1), params.k - 1))


def _tail_count(lo: int, q: int, length: int) -> int:
    # weakly increasing tuples of the given length with values in [lo, q]
    return comb(q - lo + length, length)


def _prefix_count(lo: int, x: int, q: int, tail: int) -> int:
    # tuples whose next digit c satisfies lo <= c < x, any tail after it;
    # closed form of sum_{c=lo}^{x-1} comb(q - c + tail, tail)
    return comb(q - lo + tail + 1, tail + 1) - comb(q - x + tail + 1, tail + 1)


def vertex_rank(v: Point, params: Params) -> int:
    """Index of ``v`` in the lexicographic enumeration."""
    if not is_lattice_point(v, params):
        raise ValueError(f"not a lattice point of the ({params.k},{params.q}) instance: {v!r}")
    rank = 0
    lo = 0
    m = params.k - 1
    for i, x in enumerate(v):
        rank += _prefix_count(lo, x, params.q, m - 1 - i)
        lo = x
    return rank


def vertex_unrank(rank: int, params: Params) -> Point:
    """Inverse of :func:`vertex_rank`; digits are recovered by binary search."""
    if not 0 <= rank < params.num_vertices:
        raise ValueError(f"rank {rank} outside [0, {params.num_vertices})")
    coords = []
    lo = 0
    m = params.k - 1
    for i in range(m):
        tail = m - 1 - i
        # largest digit x with _prefix_count(lo, x, ...) <= rank
        low, high = lo, params.q
        while low < high:
            mid = (low + high + 1) // 2
            if _prefix_count(lo, mid, params.q, tail) <= rank:
                low = mid
            else:
                high = mid - 1
        rank -= _prefix_count(lo, low, params.q, tail)
        coords.append(low)
        lo = low
    return tuple(coords)


def is_consistent(pi: Perm, v: Point) -> bool:
    """Whether ``i`` precedes ``i + 1`` in ``pi`` wherever ``v_i = v_{i+1}``.

    Exactly the consistent pairs index cells of the subdivision; the
    identity permutation is consistent with every point.
    """
    position = {image: pos for pos, image in enumerate(pi)}
    for i in range(1, len(v)):
        if v[i - 1] == v[i] and position[i] > position[i + 1]:
            return False
    return True


def pi_hyperedge(v: Point, pi: Perm, params: Params) -> Hyperedge:
    """The cell based at ``v`` with increments applied in order
    ``e_{pi(k-1)}, e_{pi(k-2)}, ..., e_{pi(1)}``.

    Raises :class:`InconsistentPair` when the pair is not a cell: an
    inconsistent pair would step outside the lattice, and silently admitting
    it would corrupt cell counts downstream.
    """
    base_params = params.base()
    if not is_lattice_point(v, base_params):
        raise ValueError(
            f"base point must lie in the ({params.k},{params.q - 1}) lattice: {v!r}"
        )
    if not is_permutation(pi, params):
        raise ValueError(f"not a permutation image over 1..{params.k - 1}: {pi!r}")
    if not is_consistent(pi, v):
        raise InconsistentPair(f"permutation {pi} is not consistent with {v}")
    return _build_cell(v, pi, params)


def _build_cell(v: Point, pi: Perm, params: Params) -> Hyperedge:
    # No consistency check here; verify's informational strict mode uses this
    # to look at non-cells as well.
    current = list(v)
    vertices = [tuple(current)]
    for t in range(params.k - 1, 0, -1):
        current[pi[t - 1] - 1] += 1
        vertices.append(tuple(current))
    return Hyperedge(v, pi, tuple(vertices))


def hyperedge(v: Point, params: Params) -> Hyperedge:
    """The identity-permutation cell based at ``v``."""
    return pi_hyperedge(v, identity_permutation(params), params)


def enumerate_hyperedges(params: Params) -> list[Hyperedge]:
    """One identity cell per base point, in lexicographic base order."""
    return [hyperedge(v, params) for v in enumerate_vertices(params.base())]


def enumerate_facets(params: Params) -> list[tuple[Point, Perm]]:
    """All consistent (base, permutation) pairs.

    Order: lexicographic base, then lexicographic permutation image.  The
    count always comes out to ``q**(k-1)``, which the tests confirm against
    this very enumeration.
    """
    base_points = enumerate_vertices(params.base())
    perms = list(itertools.permutations(range(1, params.k)))
    return [(v, pi) for v in base_points for pi in perms if is_consistent(pi, v)]
