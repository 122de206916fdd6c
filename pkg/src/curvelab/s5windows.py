"""Windows, pentagons, and half-twist detection on the five-punctured sphere.

Windows are generated by applying bounded-length generator words to the base
pentagon (or to supplied seed curves); edges record disjointness.  Pentagons
are chordless 5-cycles — since window edges capture all disjointness, a
chordless cycle automatically has intersecting non-adjacent pairs, which is
isometric embeddedness at the decidable level.  A half-twist pair about beta
is detected purely combinatorially from two pentagons sharing an edge.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .curves import BASE_CURVES, NormalCurve, intersection_number
from .mcg import (
    HALF_TWIST_WORDS,
    WORD_ALPHABET,
    act,
    apply_word,
    invert_word,
    orientation_parity,
)
from .window import Window

S5_INSTANCE = "s5"


def curve_key_str(coords) -> str:
    return ",".join(str(x) for x in coords)


def parse_curve_key(text: str):
    return tuple(int(x) for x in text.split(","))


def witness_str(witness: tuple[str, int]) -> str:
    word, base = witness
    return f"{word}.c{base}" if word else f"c{base}"


def parse_witness(text: str) -> tuple[str, int]:
    word, _, base = text.rpartition(".") if "." in text else ("", "", text)
    return word, int(base.lstrip("c"))


def build_window(
    word_bound: int, seeds: tuple[NormalCurve, ...] = BASE_CURVES
) -> Window:
    """All curves w(seed) with |w| <= word_bound, edges for disjointness.

    Vertices are ordered lexicographically by coordinates; each keeps the
    first witness found (breadth-first, letters in alphabet order), so the
    result is deterministic.
    """
    found: dict[tuple, tuple[str, int]] = {}
    frontier: list[NormalCurve] = []
    for seed in seeds:
        if seed.witness is None:
            raise ValueError("window seeds must carry witness words")
        if seed.coords not in found:
            found[seed.coords] = seed.witness
            frontier.append(seed)
    for _ in range(word_bound):
        nxt = []
        for curve in frontier:
            for letter in WORD_ALPHABET:
                image = act(letter, curve)
                if image.coords not in found:
                    found[image.coords] = image.witness
                    nxt.append(image)
        frontier = nxt
    vertices = tuple(sorted(found))
    curves = [NormalCurve(c, found[c]) for c in vertices]
    edges = tuple(
        (i, j)
        for i, j in combinations(range(len(vertices)), 2)
        if intersection_number(curves[i], curves[j]) == 0
    )
    basepoint = min(seed.coords for seed in seeds)
    return Window(
        instance=S5_INSTANCE,
        basepoint=basepoint,
        bound=word_bound,
        vertices=vertices,
        edges=edges,
        words=tuple(witness_str(found[c]) for c in vertices),
    )


def window_curve(w: Window, i: int) -> NormalCurve:
    word, base = parse_witness(w.words[i])
    return NormalCurve(w.vertices[i], (word, base))


def canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Least representative under rotation and reflection."""
    best = None
    n = len(cycle)
    for seq in (cycle, tuple(reversed(cycle))):
        for s in range(n):
            rot = tuple(seq[(s + k) % n] for k in range(n))
            if best is None or rot < best:
                best = rot
    return best


@lru_cache(maxsize=64)
def enumerate_pentagons(w: Window) -> list[tuple[int, int, int, int, int]]:
    """All chordless 5-cycles, canonically represented and sorted."""
    adj = [set(ns) for ns in w.neighbors]
    pentagons = set()
    n = len(w)
    for v0 in range(n):
        for v1 in adj[v0]:
            if v1 < v0:
                continue
            for v2 in adj[v1]:
                if v2 <= v0 or v2 in adj[v0]:
                    continue
                for v3 in adj[v2]:
                    if v3 <= v0 or v3 in adj[v0] or v3 in adj[v1] or v3 == v1:
                        continue
                    for v4 in adj[v3] & adj[v0]:
                        if v4 <= v0 or v4 in adj[v1] or v4 in adj[v2]:
                            continue
                        pentagons.add(canonical_cycle((v0, v1, v2, v3, v4)))
    return sorted(pentagons)


def half_twist_word(beta: NormalCurve, sign: int) -> str:
    """Word realising the half-twist about beta for the chosen orientation."""
    if beta.witness is None:
        raise ValueError("half twists require a curve with a witness word")
    u, base = beta.witness
    exponent = sign * orientation_parity(u)
    h = HALF_TWIST_WORDS[base]
    return invert_word(u) + (h if exponent > 0 else invert_word(h)) + u


def half_twist_of(beta: NormalCurve, alpha: NormalCurve, sign: int) -> NormalCurve:
    """H_beta^sign(alpha), via the conjugated base half-twist."""
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    if intersection_number(alpha, beta) != 2:
        raise ValueError("half-twist detection needs i(alpha, beta) = 2")
    word = half_twist_word(beta, sign)
    coords = apply_word(word, alpha.coords)
    witness = None
    if alpha.witness is not None:
        wa, base = alpha.witness
        witness = (wa + word, base)
    return NormalCurve(coords, witness)


# Arrangement of the two detecting pentagons: they share an edge
# {gamma, delta}; alpha lies in the first pentagon adjacent to delta (not in
# the second), beta in the second pentagon adjacent to delta (not in the
# first).  Selected as the unique reading under which detection returns
# exactly the half-twist pair on the base configuration; any other choice of
# positions returns strictly different sets there (see derive.py).
DETECTION_PATTERN = ("near_delta", "near_delta")

_POSITION_INDEX = {"near_gamma": 1, "near_delta": 3, "opposite": 2}


def _positions(pentagon: tuple[int, ...], g: int, d: int) -> dict[str, set[int]]:
    """Vertices of the pentagon by position relative to its edge (g, d)."""
    cyc = list(pentagon)
    n = 5
    k = cyc.index(g)
    if cyc[(k + 1) % n] == d:
        order = [cyc[(k + t) % n] for t in range(n)]
    else:
        assert cyc[(k - 1) % n] == d
        order = [cyc[(k - t) % n] for t in range(n)]
    # order = [gamma, delta, x, y, z] with x adjacent to delta, z to gamma
    return {"near_delta": {order[2]}, "opposite": {order[3]}, "near_gamma": {order[4]}}


def detect_half_twist_indices(w: Window, ia: int, ib: int) -> set[int]:
    """Vertices admitting the two-pentagon configuration, by window index.

    Works on any window-shaped graph (including quotient graphs keyed by
    class representatives): only the adjacency structure is used.
    """
    pentagons = enumerate_pentagons(w)
    by_edge: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for pent in pentagons:
        for k in range(5):
            e = (pent[k], pent[(k + 1) % 5])
            by_edge.setdefault((min(e), max(e)), []).append(pent)
    pos_a, pos_b = DETECTION_PATTERN
    detected: set[int] = set()
    for (u, v), pents in by_edge.items():
        if len(pents) < 2:
            continue
        for gamma, delta in ((u, v), (v, u)):
            if gamma in (ia, ib) or delta in (ia, ib):
                continue
            first = [
                p for p in pents
                if ia in _positions(p, gamma, delta)[pos_a] and ib not in p
            ]
            second = [
                p for p in pents
                if ib in _positions(p, gamma, delta)[pos_b] and ia not in p
            ]
            if any(p1 != p2 for p1 in first for p2 in second):
                detected.add(gamma)
    return detected


def detect_half_twists(
    alpha: NormalCurve, beta: NormalCurve, w: Window
) -> set[NormalCurve]:
    """All curves gamma admitting the two-pentagon configuration in w.

    Contract: the result only ever contains the pair {H_beta(alpha),
    H_beta^-1(alpha)} and equals it once w contains the detecting pentagons.
    """
    detected = detect_half_twist_indices(w, w.index[alpha.coords], w.index[beta.coords])
    return {window_curve(w, g) for g in detected}
