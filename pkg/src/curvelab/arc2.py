"""The arc complex of arcs between distinct punctures on S_{0,5}.

Every essential curve cuts the sphere into a twice-punctured and a
thrice-punctured side; sending the curve to the unique arc joining the two
punctures inside the disk it bounds is a bijection onto arcs with distinct
endpoints, and two arcs have disjoint interiors exactly when their curves
satisfy i(curve, curve') = 2 * (number of shared endpoints).

Triangles of pairwise interior-disjoint arcs whose pairs all share an
endpoint fall into five configuration classes; fillTriangle produces the
tripod or pentagon fillings of the classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .curves import NormalCurve, intersection_number
from .triangulation import BASE, NUM_EDGES, Coords, corner_counts, is_essential
from .window import Window
from . import s5windows


@lru_cache(maxsize=65536)
def arc_endpoints(coords: Coords) -> frozenset[int]:
    """The two punctures on the twice-punctured side of the curve.

    Traces the complementary regions of the curve through the triangulation:
    each triangle is cut into corner regions (one per arc depth) and a
    central region, glued along edge segments; the curve's complement has
    two components and the one containing exactly two punctures names the
    arc.
    """
    if not is_essential(BASE, coords):
        raise ValueError("arc endpoints require an essential curve")
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    corner = {t: corner_counts(BASE, t, coords) for t in range(6)}

    def region(t: int, j: int, k: int):
        """Region touching segment k (0..x) along side j of triangle t."""
        cu, cv = (j + 1) % 3, (j + 2) % 3
        n_u = corner[t][cu]
        if k < n_u:
            return (t, cu, k)
        x = coords[BASE.tri_edges[t][j]]
        if k > n_u:
            return (t, cv, x - k)
        # between the two corner stacks: the central region (depth n_c of
        # every corner is the same region)
        return (t, "center")

    for e in range(NUM_EDGES):
        (t1, j1), (t2, j2) = BASE.slots[e]
        x = coords[e]
        for k in range(x + 1):
            union(region(t1, j1, k), region(t2, j2, x - k))
    # make the three deepest corner regions and the center one region
    for t in range(6):
        for c in range(3):
            union((t, c, corner[t][c]), (t, "center"))
    sides: dict = {}
    for t in range(6):
        for c in range(3):
            root = find((t, c, 0))  # the region touching the corner vertex
            sides.setdefault(root, set()).add(BASE.tri_corners[t][c])
    components = list(sides.values())
    assert len(components) == 2, f"curve complement has {len(components)} components"
    two = min(components, key=len)
    assert len(two) == 2 and len(max(components, key=len)) == 3
    return frozenset(two)


@dataclass(frozen=True)
class Arc2Vertex:
    """An arc between two distinct punctures, carried by its curve."""

    curve: NormalCurve

    @property
    def endpoints(self) -> frozenset[int]:
        return arc_endpoints(self.curve.coords)

    def __lt__(self, other: "Arc2Vertex"):
        return self.curve.coords < other.curve.coords

    def to_json(self) -> dict:
        rec = self.curve.to_json()
        rec["endpoints"] = sorted(self.endpoints)
        return rec


def arcs_disjoint(a: Arc2Vertex, b: Arc2Vertex) -> bool:
    """Interior-disjointness of the arcs, decided on the curve side."""
    if a.curve == b.curve:
        return False
    shared = len(a.endpoints & b.endpoints)
    return intersection_number(a.curve, b.curve) == 2 * shared


def epsilon_arc(x_i: Arc2Vertex, x_j: Arc2Vertex, w: Window) -> Arc2Vertex:
    """The unique arc with distinct endpoints in the complement of the two.

    The inputs must be interior-disjoint and share at least one endpoint
    (arcs with disjoint endpoint pairs are directly adjacent and need no
    connector).  Searches the window and asserts uniqueness.
    """
    if not arcs_disjoint(x_i, x_j):
        raise ValueError("epsilon arc needs interior-disjoint arcs")
    if not x_i.endpoints & x_j.endpoints:
        raise ValueError("arcs with distinct endpoints are adjacent; no epsilon arc")
    candidates = []
    for k in range(len(w)):
        arc = Arc2Vertex(s5windows.window_curve(w, k))
        if arc.curve in (x_i.curve, x_j.curve):
            continue
        if arcs_disjoint(arc, x_i) and arcs_disjoint(arc, x_j):
            if not (arc.endpoints & (x_i.endpoints | x_j.endpoints)):
                candidates.append(arc)
    if len(candidates) != 1:
        raise ValueError(
            f"expected a unique epsilon arc, found {len(candidates)} in the window"
        )
    return candidates[0]


def cs_adjacent(a: Arc2Vertex, b: Arc2Vertex) -> bool:
    """Adjacency in the curve graph: the carrying curves are disjoint."""
    return a.curve != b.curve and intersection_number(a.curve, b.curve) == 0


def is_pentagon_set(arcs: list[Arc2Vertex]) -> bool:
    """Five distinct curves forming a chordless 5-cycle under disjointness."""
    if len({a.curve.coords for a in arcs}) != 5:
        return False
    deg = [0] * 5
    edges = 0
    for (i, a), (j, b) in combinations(enumerate(arcs), 2):
        if cs_adjacent(a, b):
            deg[i] += 1
            deg[j] += 1
            edges += 1
    return edges == 5 and all(d == 2 for d in deg)


def pentagon_cycle(arcs: list[Arc2Vertex]) -> tuple[Arc2Vertex, ...]:
    """Order five pentagon vertices along their cycle, canonically."""
    assert is_pentagon_set(arcs)
    arcs = sorted(arcs)
    order = [arcs[0]]
    rest = arcs[1:]
    while rest:
        nxt = min(a for a in rest if cs_adjacent(order[-1], a))
        order.append(nxt)
        rest.remove(nxt)
    return tuple(order)


CASE_KINDS = ("case1", "case2", "case3", "case4", "case5")


@dataclass(frozen=True)
class TriangleConfig:
    """A classified triangle of pairwise interior-disjoint arcs.

    The five kinds, by endpoint-sharing pattern of the arc pair-counts and
    coincidence of the epsilon connectors:
      case1 — cyclic sharing through three punctures, epsilons coincide
      case2 — star: all three arcs share one common puncture
      case3 — one pair shares both endpoints, epsilons coincide
      case4 — one pair shares both endpoints, epsilons distinct
      case5 — epsilons pairwise distinct with no short-cut adjacency (cyclic
              sharing with the spare punctures separated, or all three arcs
              joining the same pair); filled by four pentagons
    """

    arcs: tuple[Arc2Vertex, Arc2Vertex, Arc2Vertex]
    kind: str
    epsilons: tuple[Arc2Vertex, Arc2Vertex, Arc2Vertex]  # e01, e12, e02


def classify_triangle(
    arcs: tuple[Arc2Vertex, Arc2Vertex, Arc2Vertex], w: Window
) -> TriangleConfig:
    if len({a.curve.coords for a in arcs}) != 3:
        raise ValueError("triangle requires three distinct arcs")
    for a, b in combinations(arcs, 2):
        if not arcs_disjoint(a, b):
            raise ValueError("triangle arcs must have pairwise disjoint interiors")
    sharing = sorted(len(a.endpoints & b.endpoints) for a, b in combinations(arcs, 2))
    if 0 in sharing:
        raise ValueError(
            "a pair of arcs with distinct endpoints spans a single pentagon; "
            "only triples whose pairs all share an endpoint are classified"
        )
    x0, x1, x2 = arcs
    eps = (epsilon_arc(x0, x1, w), epsilon_arc(x1, x2, w), epsilon_arc(x0, x2, w))
    coincide = len({e.curve.coords for e in eps}) == 1
    punctures = frozenset().union(*(a.endpoints for a in arcs))
    if sharing == [1, 1, 1] and len(punctures) == 4:
        kind = "case2"
    elif sharing == [1, 1, 2]:
        kind = "case3" if coincide else "case4"
    elif sharing == [1, 1, 1] and len(punctures) == 3:
        kind = "case1" if coincide else "case5"
    elif sharing == [2, 2, 2]:
        kind = "case5"
    else:
        raise ValueError(f"unclassifiable endpoint pattern {sharing}")
    return TriangleConfig(tuple(arcs), kind, eps)


def _two_pentagon_fill(config: TriangleConfig, w: Window) -> list[list[Arc2Vertex]]:
    """One auxiliary z closing two pentagons joined along two edges."""
    eps_of = {
        frozenset((0, 1)): config.epsilons[0],
        frozenset((1, 2)): config.epsilons[1],
        frozenset((0, 2)): config.epsilons[2],
    }
    used = {a.curve.coords for a in config.arcs} | {
        e.curve.coords for e in config.epsilons
    }
    solutions = []
    for pivot in range(3):
        o1, o2 = sorted({0, 1, 2} - {pivot})
        x0, x1, x2 = config.arcs[pivot], config.arcs[o1], config.arcs[o2]
        e01 = eps_of[frozenset((pivot, o1))]
        e12 = eps_of[frozenset((o1, o2))]
        e02 = eps_of[frozenset((pivot, o2))]
        for k in range(len(w)):
            if w.vertices[k] in used:
                continue
            z = Arc2Vertex(s5windows.window_curve(w, k))
            first = [x0, x1, z, e01, e12]
            second = [x0, x2, z, e02, e12]
            if is_pentagon_set(first) and is_pentagon_set(second):
                solutions.append((z.curve.coords, [first, second]))
    if not solutions:
        raise ValueError("no auxiliary arc closes the two pentagons in this window")
    return min(solutions)[1]


def _four_pentagon_fill(config: TriangleConfig, w: Window) -> list[list[Arc2Vertex]]:
    """Exact disk filling of the chordless hexagon by four pentagons.

    The hexagon x0 e01 x1 e12 x2 e02 is filled so that each of its edges lies
    in exactly one pentagon and every interior edge in exactly two; all
    solutions use one hub auxiliary in all four pentagons and three further
    auxiliaries in two each."""
    hexagon = [
        config.arcs[0], config.epsilons[0], config.arcs[1],
        config.epsilons[1], config.arcs[2], config.epsilons[2],
    ]
    hid = [w.index[a.curve.coords] for a in hexagon]
    delta = {tuple(sorted((hid[i], hid[(i + 1) % 6]))) for i in range(6)}
    pentagons = s5windows.enumerate_pentagons(w)

    def edges_of(p):
        return {tuple(sorted((p[i], p[(i + 1) % 5]))) for i in range(5)}

    cands = [(p, edges_of(p)) for p in pentagons]
    by_edge: dict[tuple[int, int], list[int]] = {}
    for idx, (_, es) in enumerate(cands):
        for e in es & delta:
            by_edge.setdefault(e, []).append(idx)
    order = sorted(delta)
    solutions: list[tuple[tuple[int, ...], ...]] = []

    def valid(chosen: frozenset[int]) -> bool:
        count: dict[tuple[int, int], int] = {}
        for idx in chosen:
            for e in cands[idx][1]:
                count[e] = count.get(e, 0) + 1
        return all(
            c == (1 if e in delta else 2) for e, c in count.items()
        )

    def dfs(i: int, chosen: frozenset[int]):
        if i == len(order):
            if len(chosen) == 4 and valid(chosen):
                solutions.append(tuple(sorted(cands[idx][0] for idx in chosen)))
            return
        e = order[i]
        if any(e in cands[idx][1] for idx in chosen):
            dfs(i + 1, chosen)
            return
        for idx in by_edge.get(e, []):
            if idx not in chosen and len(chosen) < 4:
                dfs(i + 1, chosen | {idx})

    dfs(0, frozenset())
    if not solutions:
        raise ValueError("no four-pentagon filling found in this window")
    best = min(solutions)
    return [[Arc2Vertex(s5windows.window_curve(w, v)) for v in p] for p in best]


def fill_triangle(config: TriangleConfig, w: Window) -> dict:
    """The filling of the triangle's delta-loop, as prescribed by its kind.

    Returns a JSON-ready description: the boundary loop, the tripod centre
    (coinciding epsilon) or the list of pentagons, each as an ordered cycle
    of curve records; every pentagon is validated as a chordless 5-cycle.
    """
    x0, x1, x2 = config.arcs
    e01, e12, e02 = config.epsilons
    boundary = [x0, e01, x1, e12, x2, e02]
    if config.kind in ("case1", "case3"):
        result = {"cells": "tripod", "center": e01.to_json(), "pentagons": []}
    elif config.kind in ("case2", "case4"):
        result = {"cells": "pentagons", "pentagons": _two_pentagon_fill(config, w)}
    else:
        result = {"cells": "pentagons", "pentagons": _four_pentagon_fill(config, w)}
    pentagons = []
    for pent in result["pentagons"]:
        assert is_pentagon_set(list(pent))
        pentagons.append([a.to_json() for a in pentagon_cycle(list(pent))])
    return {
        "kind": config.kind,
        "arcs": [a.to_json() for a in config.arcs],
        "boundary": [a.to_json() for a in boundary],
        "cells": result["cells"],
        **({"center": result["center"]} if "center" in result else {}),
        "pentagons": pentagons,
    }
