"""Curves on the five-punctured sphere and geometric intersection numbers.

A curve is its normal-coordinate vector with respect to the base
triangulation; coordinates are a complete isotopy invariant, so coordinate
equality is isotopy.  Intersection numbers are computed by flip-reducing the
first curve until it becomes the boundary of a disk neighborhood of a single
edge E (every essential curve cuts off a twice-punctured disk, and weight
reduction terminates in that form), transporting the second curve's
coordinates along the same flips, and reading off i(a, b) = 2 * w_E(b): the
reduced curve can be drawn crossing b only along the two strands parallel to
E, once per crossing of b with E, and w_E is minimal for normal coordinates.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache

from .triangulation import (
    BASE,
    NUM_EDGES,
    Coords,
    Triangulation,
    is_essential,
    is_valid_coords,
)


@dataclass(frozen=True)
class NormalCurve:
    """An essential simple closed curve in normal coordinates.

    ``witness`` optionally records provenance: a word in the mapping class
    generators and the index (1..5) of the base curve it was applied to.
    """

    coords: Coords
    witness: tuple[str, int] | None = None

    def __post_init__(self):
        if not is_essential(BASE, self.coords):
            raise ValueError(f"coordinates {self.coords} are not an essential curve")

    def __eq__(self, other):
        return isinstance(other, NormalCurve) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other: "NormalCurve"):
        return self.coords < other.coords

    def weight(self) -> int:
        return sum(self.coords)

    def to_json(self) -> dict:
        rec = {"coords": list(self.coords)}
        if self.witness is not None:
            rec["witness"] = {"word": self.witness[0], "base": self.witness[1]}
        return rec

    @staticmethod
    def from_json(data: dict) -> "NormalCurve":
        witness = None
        if "witness" in data:
            witness = (data["witness"]["word"], data["witness"]["base"])
        return NormalCurve(tuple(data["coords"]), witness)


def base_curves() -> tuple[NormalCurve, ...]:
    """The five curves c1..c5, cyclically adjacent in the curve graph.

    c_j bounds a disk around the puncture pair p_j, with consecutive pairs
    disjoint: p1={1,2}, p2={3,4}, p3={5,1}, p4={2,3}, p5={4,5}.
    """
    boundary_edge = (0, 2, 4, 1, 3)  # E12, E34, E51, E23, E45
    return tuple(
        NormalCurve(BASE.neighborhood_pattern(e), witness=("", j + 1))
        for j, e in enumerate(boundary_edge)
    )


BASE_CURVES = base_curves()
BASE_CURVE_PAIRS = ((1, 2), (3, 4), (5, 1), (2, 3), (4, 5))


class ReductionError(RuntimeError):
    pass


@lru_cache(maxsize=65536)
def _reduce_to_boundary(coords: Coords) -> tuple[tuple[int, ...], int]:
    """Flip sequence carrying coords to a neighborhood-boundary pattern.

    Returns (flips, edge) such that applying the flips from the base
    triangulation turns coords into state.neighborhood_pattern(edge).
    Best-first search on total weight; flips that reduce weight are always
    explored, plateaus are crossed by the priority queue.
    """

    def terminal_edge(state: Triangulation, cur: Coords) -> int | None:
        for e in range(NUM_EDGES):
            if cur[e] == 0:
                u, v = state.edge_endpoints(e)
                if u != v and cur == state.neighborhood_pattern(e):
                    return e
        return None

    start = (BASE, coords)
    parent: dict[tuple[Triangulation, Coords], tuple[tuple[Triangulation, Coords], int]] = {}
    seen = {start}
    heap: list[tuple[int, int, int, tuple[Triangulation, Coords]]] = []
    counter = 0
    heapq.heappush(heap, (sum(coords), 0, counter, start))
    expansions = 0
    while heap:
        _, depth, _, node = heapq.heappop(heap)
        state, cur = node
        e = terminal_edge(state, cur)
        if e is not None:
            flips = []
            while node in parent:
                node, flipped = parent[node]
                flips.append(flipped)
            return tuple(reversed(flips)), e
        expansions += 1
        if expansions > 200_000:
            raise ReductionError(f"flip reduction did not terminate for {coords}")
        for f in range(NUM_EDGES):
            if not state.flippable(f):
                continue
            nxt = (state.flip(f), state.flip_coords(f, cur))
            if nxt in seen:
                continue
            seen.add(nxt)
            parent[nxt] = (node, f)
            counter += 1
            heapq.heappush(heap, (sum(nxt[1]), depth + 1, counter, nxt))
    raise ReductionError(f"flip reduction exhausted the search space for {coords}")


@lru_cache(maxsize=1 << 20)
def _intersection(a: Coords, b: Coords) -> int:
    if a == b:
        return 0
    flips, edge = _reduce_to_boundary(a)
    state, cur = BASE, b
    for f in flips:
        cur = state.flip_coords(f, cur)
        state = state.flip(f)
    return 2 * cur[edge]


def intersection_number(a: NormalCurve | Coords, b: NormalCurve | Coords) -> int:
    """Minimal geometric intersection number of two essential curves."""
    ca = a.coords if isinstance(a, NormalCurve) else tuple(a)
    cb = b.coords if isinstance(b, NormalCurve) else tuple(b)
    if not is_valid_coords(BASE, ca) or not is_valid_coords(BASE, cb):
        raise ValueError("intersection_number requires valid normal coordinates")
    if ca <= cb:
        return _intersection(ca, cb)
    return _intersection(cb, ca)


def disjoint(a: NormalCurve, b: NormalCurve) -> bool:
    return a != b and intersection_number(a, b) == 0
