"""Finite windows into locally infinite curve graphs.

A window is a finite induced subgraph with a basepoint, canonically ordered
vertex keys, and the bound (height or word length) that generated it.  It is
the unit of computation everywhere: the ambient graphs have infinite balls,
so finite induced subgraphs stand in for them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable


@dataclass(frozen=True)
class Window:
    """Finite induced subgraph of a curve graph.

    ``vertices`` holds canonical, hashable keys (slopes, coordinate tuples),
    sorted; ``edges`` holds index pairs (i, j) with i < j, sorted.  ``words``
    optionally gives a witness word per vertex (same indexing).
    """

    instance: str
    basepoint: Any
    bound: int
    vertices: tuple
    edges: tuple[tuple[int, int], ...]
    words: tuple[str, ...] | None = None

    def __post_init__(self):
        for i, j in self.edges:
            if not (0 <= i < j < len(self.vertices)):
                raise ValueError(f"malformed edge ({i}, {j})")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("parallel edges are not allowed")
        if self.words is not None and len(self.words) != len(self.vertices):
            raise ValueError("words must align with vertices")

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def __contains__(self, key) -> bool:
        return key in self.index

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_set

    def word_of(self, i: int) -> str | None:
        return self.words[i] if self.words is not None else None

    def to_json(self, key_str: Callable[[Any], str]) -> dict:
        verts = []
        for i, v in enumerate(self.vertices):
            rec = {"id": i, "key": key_str(v)}
            if self.words is not None:
                rec["word"] = self.words[i]
            verts.append(rec)
        return {
            "instance": self.instance,
            "basepoint": key_str(self.basepoint),
            "bound": self.bound,
            "vertices": verts,
            "edges": [list(e) for e in self.edges],
        }

    @staticmethod
    def from_json(data: dict, str_key: Callable[[str], Any]) -> "Window":
        verts = sorted(data["vertices"], key=lambda r: r["id"])
        words = None
        if verts and "word" in verts[0]:
            words = tuple(r["word"] for r in verts)
        return Window(
            instance=data["instance"],
            basepoint=str_key(data["basepoint"]),
            bound=data["bound"],
            vertices=tuple(str_key(r["key"]) for r in verts),
            edges=tuple(tuple(e) for e in data["edges"]),
            words=words,
        )

    def to_dot(self, key_str: Callable[[Any], str]) -> str:
        lines = [f'graph "{self.instance}" {{']
        for i, v in enumerate(self.vertices):
            lines.append(f'  {i} [label="{key_str(v)}"];')
        for i, j in self.edges:
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"
