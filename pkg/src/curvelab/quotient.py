"""Quotients of curve-graph windows by closure samples.

A closure sample (a finite, inverse-closed set of group elements standing in
for a normal subgroup) identifies window vertices v ~ n(v) whenever both lie
in the window.  The quotient window carries the partition into classes, the
induced edges, per-element displacement reports, and a transporter word for
every vertex: a sample word carrying the class representative to the vertex,
which lets suites lift quotient edges exactly instead of guessing.

Instances are described by a small contract (key type, adjacency, action,
available distance information) so the same machinery runs on the Farey
graph, where distances are exact, and on the five-punctured sphere, where
only {0, 1, 2}-certificates are decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable

from . import farey as farey_mod
from . import s5windows
from .curves import intersection_number
from .mcg import apply_word, invert_word, reduce_word
from .window import Window


@dataclass(frozen=True)
class InstanceContract:
    """What the quotient machinery needs to know about a curve graph."""

    name: str
    key_str: Callable[[Any], str]
    parse_key: Callable[[str], Any]
    adjacent: Callable[[Any, Any], bool]
    action: Callable[[str], Callable[[Any], Any]]  # word -> key map
    exact_distance: Callable[[Any, Any], int] | None = None
    invert: Callable[[str], str] = lambda w: w
    # compose(inner, outer): word acting as "inner first, then outer"
    compose: Callable[[str, str], str] = lambda inner, outer: inner + outer

    def certificate(self, a: Any, b: Any, w: Window) -> int | None:
        """Distance certificate: exact when available, else {0, 1, 2}."""
        if self.exact_distance is not None:
            return self.exact_distance(a, b)
        if a == b:
            return 0
        if self.adjacent(a, b):
            return 1
        ia, ib = w.index.get(a), w.index.get(b)
        if ia is not None and ib is not None:
            if set(w.neighbors[ia]) & set(w.neighbors[ib]):
                return 2
        return None


def farey_contract(base: farey_mod.IntMatrix) -> InstanceContract:
    def action(word: str) -> Callable:
        m = farey_mod.word_matrix(word, base)
        return m.apply

    return InstanceContract(
        name="farey",
        key_str=str,
        parse_key=farey_mod.Slope.parse,
        adjacent=farey_mod.adjacent,
        action=action,
        exact_distance=farey_mod.distance,
        invert=farey_mod.invert_word,
        # matrix words multiply left to right and act with the rightmost
        # factor first, so "inner first" means outer on the left
        compose=lambda inner, outer: outer + inner,
    )


def s5_contract() -> InstanceContract:
    return InstanceContract(
        name="s5",
        key_str=s5windows.curve_key_str,
        parse_key=s5windows.parse_curve_key,
        adjacent=lambda a, b: a != b and intersection_number(a, b) == 0,
        action=lambda word: (lambda coords: apply_word(word, coords)),
        exact_distance=None,
        invert=invert_word,
    )


@dataclass(frozen=True)
class GenericSample:
    """Inverse-closed, identity-free list of sample words for an instance."""

    instance: str
    words: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.words)


def s5_sample(words: tuple[str, ...] = ()) -> GenericSample:
    """An S0,5 sample from words, closed under inverses, identity removed."""
    closed: list[str] = []
    for w in words:
        for x in (reduce_word(w), reduce_word(invert_word(w))):
            if x and x not in closed:
                closed.append(x)
    return GenericSample("s5", tuple(closed))


def sample_words(sample) -> tuple[str, ...]:
    if isinstance(sample, GenericSample):
        return sample.words
    return tuple(e.word for e in sample.elements)


@dataclass(frozen=True)
class QuotientWindow:
    """A window modulo the in-window identifications of a sample.

    Classes are indexed 0..k-1 in order of their minimum vertex key; the
    representative of a class is its minimum vertex.  ``transporter[v]`` is a
    word over sample elements with action(transporter[v])(rep key) = key of v.
    """

    window: Window
    instance: str
    sample: tuple[str, ...]
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    loops: tuple[tuple[int, int, int], ...]  # (class, vertex, vertex) collapsed edges
    transporter: tuple[str, ...]
    displacement: tuple[dict, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def representative(self, c: int) -> int:
        return self.classes[c][0]

    @property
    def min_displacement(self) -> int | None:
        values = [d["min"] for d in self.displacement if d["min"] is not None]
        return min(values) if values else None

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[set[int]] = [set() for _ in self.classes]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_set

    def as_window(self, contract: InstanceContract) -> Window:
        """The quotient graph as a Window keyed by class representatives."""
        reps = [self.window.vertices[self.representative(c)] for c in range(len(self))]
        order = sorted(range(len(self)), key=lambda c: reps[c])
        rank = {c: k for k, c in enumerate(order)}
        edges = tuple(sorted(
            (min(rank[i], rank[j]), max(rank[i], rank[j])) for i, j in self.edges
        ))
        return Window(
            instance=f"{self.instance}/quotient",
            basepoint=self.window.basepoint,
            bound=self.window.bound,
            vertices=tuple(reps[c] for c in order),
            edges=edges,
        )

    def to_json(self, contract: InstanceContract) -> dict:
        data = self.window.to_json(contract.key_str)
        data["classes"] = [list(c) for c in self.classes]
        data["displacement"] = list(self.displacement)
        return data


def _displacement_report(
    w: Window, words: tuple[str, ...], contract: InstanceContract
) -> tuple[dict, ...]:
    """Per element: the window minimum of d(v, n v) and its witness.

    With exact distances the minimum is exact; otherwise only the {0, 1, 2}
    certificates contribute and vertices with no certificate are counted as
    distance >= 3, so ``min`` is a certified lower bound (argmin is null when
    only the bound is attained).
    """
    report = []
    for word in words:
        fn = contract.action(word)
        best: int | None = None
        argmin = None
        bounded = False
        for v in w.vertices:
            d = contract.certificate(v, fn(v), w)
            if d is None:
                bounded = True
                continue
            if best is None or d < best:
                best, argmin = d, v
        if best is None:
            best = 3 if bounded else None
        report.append({
            "word": word,
            "min": best,
            "argmin": None if argmin is None else contract.key_str(argmin),
        })
    return tuple(report)


def build_quotient(
    w: Window, sample, contract: InstanceContract
) -> QuotientWindow:
    """Union-find over all in-window identifications v ~ n(v).

    Class representatives are deterministic (minimum key); transporter words
    are found by breadth-first search over the identification graph from each
    representative.  The partition is cross-checked against a brute-force
    double loop over sample x vertices.
    """
    words = sample_words(sample)
    n = len(w)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # identification graph: vertex -> [(image vertex, sample word)]
    moves: list[list[tuple[int, str]]] = [[] for _ in range(n)]
    pairs: set[tuple[int, int]] = set()
    for word in words:
        fn = contract.action(word)
        for i, v in enumerate(w.vertices):
            j = w.index.get(fn(v))
            if j is None:
                continue
            moves[i].append((j, word))
            if i != j:
                pairs.add((min(i, j), max(i, j)))
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    # oracle equivalence: the same partition by naive closure of the pairs
    naive = list(range(n))

    def nfind(x: int) -> int:
        while naive[x] != x:
            naive[x] = naive[naive[x]]
            x = naive[x]
        return x

    changed = True
    while changed:
        changed = False
        for i, j in pairs:
            ri, rj = nfind(i), nfind(j)
            if ri != rj:
                naive[max(ri, rj)] = min(ri, rj)
                changed = True
    assert all(find(i) == nfind(i) for i in range(n))

    members: dict[int, list[int]] = {}
    for i in range(n):
        members.setdefault(find(i), []).append(i)
    classes = tuple(tuple(sorted(m)) for m in sorted(members.values()))
    class_of = [0] * n
    for c, m in enumerate(classes):
        for i in m:
            class_of[i] = c

    transporter = [""] * n
    for m in classes:
        rep = m[0]
        seen = {rep: ""}
        frontier = [rep]
        while frontier:
            nxt = []
            for i in frontier:
                for j, word in moves[i]:
                    if j not in seen:
                        seen[j] = contract.compose(seen[i], word)
                        nxt.append(j)
            frontier = nxt
        assert set(seen) == set(m), "identification graph must connect each class"
        for i, word in seen.items():
            transporter[i] = word

    loops = []
    qedges = set()
    for i, j in w.edges:
        ci, cj = class_of[i], class_of[j]
        if ci == cj:
            loops.append((ci, i, j))
        else:
            qedges.add((min(ci, cj), max(ci, cj)))

    return QuotientWindow(
        window=w,
        instance=contract.name,
        sample=words,
        class_of=tuple(class_of),
        classes=classes,
        edges=tuple(sorted(qedges)),
        loops=tuple(sorted(loops)),
        transporter=tuple(transporter),
        displacement=_displacement_report(w, words, contract),
    )
