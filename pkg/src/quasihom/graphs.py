"""Simple undirected graphs and the six source/target families.

Vertices are ``0..vertex_count-1``. The quasi-complete graph always misses
the edge ``{0, 1}``; vertices 0 and 1 are the endpoints A and B of the
missing (exceptional) edge.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


class Family(str, enum.Enum):
    COMPLETE = "complete"
    QUASI_COMPLETE = "quasi-complete"
    PATH = "path"
    CYCLE = "cycle"
    BROKEN_WHEEL = "broken-wheel"
    WHEEL = "wheel"

    @classmethod
    def parse(cls, name: str | "Family") -> "Family":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        for fam in cls:
            if fam.value == key:
                return fam
        choices = ", ".join(f.value for f in cls)
        raise ValueError(f"unknown family {name!r}; expected one of {choices}")


class HomClass(str, enum.Enum):
    ALL = "all"
    INJECTIVE = "inj"
    SURJECTIVE = "sur"
    BIJECTIVE = "bij"

    @classmethod
    def parse(cls, name: str | "HomClass") -> "HomClass":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower()
        aliases = {
            "all": cls.ALL, "hom": cls.ALL,
            "inj": cls.INJECTIVE, "injective": cls.INJECTIVE,
            "sur": cls.SURJECTIVE, "surjective": cls.SURJECTIVE,
            "bij": cls.BIJECTIVE, "bijective": cls.BIJECTIVE,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown homomorphism class {name!r}") from None

    @property
    def order(self) -> int:
        return list(HomClass).index(self)


# smallest admissible size parameter per family
MIN_SIZE = {
    Family.COMPLETE: 3,
    Family.QUASI_COMPLETE: 3,
    Family.PATH: 2,
    Family.CYCLE: 4,
    Family.BROKEN_WHEEL: 3,
    Family.WHEEL: 3,
}


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``edges`` holds pairs ``(u, v)`` with ``u < v``."""

    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        canon = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {e} has an endpoint outside [0, {self.vertex_count})")
            canon.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(vertex_count, frozenset(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of ``v`` in ascending order."""
        return sorted(b if a == v else a for a, b in self.edges if v in (a, b))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def adjacency_matrix(self) -> np.ndarray:
        """0/1 adjacency matrix with Python-int entries (``dtype=object``)."""
        a = np.zeros((self.vertex_count, self.vertex_count), dtype=object)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int

    def __post_init__(self):
        fam = Family.parse(self.family)
        object.__setattr__(self, "family", fam)
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise TypeError(f"size parameter must be an integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if fam is Family.CYCLE and self.n == 3:
            raise ValueError("cycle(3) is the triangle; use complete(3) instead")
        lo = MIN_SIZE[fam]
        if self.n < lo:
            raise ValueError(f"{fam.value} requires n >= {lo}, got n = {self.n}")

    @property
    def vertex_count(self) -> int:
        if self.family in (Family.BROKEN_WHEEL, Family.WHEEL):
            return self.n + 1
        return self.n

    def __str__(self) -> str:
        return f"{self.family.value}({self.n})"


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def quasi_complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)) - {(0, 1)})


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def broken_wheel_graph(n: int) -> Graph:
    # hub 0, rim 1..n
    spokes = {(0, i) for i in range(1, n + 1)}
    rim = {(i, i + 1) for i in range(1, n)}
    return Graph(n + 1, frozenset(spokes | rim))


def wheel_graph(n: int) -> Graph:
    return Graph(n + 1, broken_wheel_graph(n).edges | {(1, n)})


_BUILDERS = {
    Family.COMPLETE: complete_graph,
    Family.QUASI_COMPLETE: quasi_complete_graph,
    Family.PATH: path_graph,
    Family.CYCLE: cycle_graph,
    Family.BROKEN_WHEEL: broken_wheel_graph,
    Family.WHEEL: wheel_graph,
}


def make_family(spec: FamilySpec | tuple) -> Graph:
    """Build the canonically labelled member of a family.

    Accepts a :class:`FamilySpec` or a ``(family, n)`` tuple.
    """
    if not isinstance(spec, FamilySpec):
        spec = FamilySpec(*spec)
    return _BUILDERS[spec.family](spec.n)


def induced_subgraph(h: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph of ``h`` on ``vertices``, relabelled ``0..k-1`` in list order."""
    vertices = list(vertices)
    if len(set(vertices)) != len(vertices):
        raise ValueError(f"duplicate vertices in {vertices}")
    for v in vertices:
        if not 0 <= v < h.vertex_count:
            raise ValueError(f"vertex {v} outside [0, {h.vertex_count})")
    pos = {v: i for i, v in enumerate(vertices)}
    edges = {
        (pos[u], pos[v]) for u, v in h.edges if u in pos and v in pos
    }
    return Graph(len(vertices), frozenset(edges))
