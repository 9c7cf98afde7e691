"""Exhaustive backtracking oracle.

Vertices of the source are assigned in index order; a partial map is
abandoned as soon as an edge between two assigned vertices is not sent to an
edge of the target. Injectivity and surjectivity are checked only on complete
maps.
"""
from __future__ import annotations

from .graphs import Graph, HomClass, complete_graph


def _earlier_neighbors(g: Graph) -> list[list[int]]:
    back = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        back[v].append(u)  # u < v
    return back


def _adjacency_sets(h: Graph) -> list[set[int]]:
    adj = [set() for _ in range(h.vertex_count)]
    for u, v in h.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _search(g: Graph, h: Graph, on_leaf, exceptional: tuple[int, int] | None = None):
    """Call ``on_leaf(assignment, k)`` for every homomorphism ``g -> h``.

    ``k`` counts edges of ``g`` sent onto the pair ``exceptional`` (0 when
    no pair is given).
    """
    n = g.vertex_count
    back = _earlier_neighbors(g)
    adj = _adjacency_sets(h)
    targets = range(h.vertex_count)
    f = [-1] * n
    ex = frozenset(exceptional) if exceptional else None

    def extend(i: int, k: int):
        if i == n:
            on_leaf(f, k)
            return
        for t in targets:
            bump = 0
            for u in back[i]:
                fu = f[u]
                if t not in adj[fu]:
                    break
                if ex is not None and fu in ex and t in ex:
                    bump += 1
            else:
                f[i] = t
                extend(i + 1, k + bump)
        f[i] = -1

    extend(0, 0)


def count_by_class(g: Graph, h: Graph, hom_class: HomClass | str = HomClass.ALL) -> int:
    """Number of homomorphisms ``g -> h`` of the requested class."""
    hom_class = HomClass.parse(hom_class)
    n, size = g.vertex_count, h.vertex_count
    if hom_class is HomClass.BIJECTIVE and n != size:
        return 0
    if hom_class is HomClass.INJECTIVE and n > size:
        return 0
    if hom_class is HomClass.SURJECTIVE and n < size:
        return 0

    total = 0

    if hom_class is HomClass.ALL:
        def leaf(f, k):
            nonlocal total
            total += 1
    elif hom_class is HomClass.INJECTIVE:
        def leaf(f, k):
            nonlocal total
            if len(set(f)) == n:
                total += 1
    elif hom_class is HomClass.SURJECTIVE:
        def leaf(f, k):
            nonlocal total
            if len(set(f)) == size:
                total += 1
    else:
        def leaf(f, k):
            nonlocal total
            if len(set(f)) == n == size:
                total += 1

    _search(g, h, leaf)
    return total


def exceptional_histogram(g: Graph, m: int) -> list[int]:
    """Classify homomorphisms ``g -> K_m`` by edges landing on ``{0, 1}``.

    Returns a dense list indexed by ``k = 0..|E(g)|``; entry 0 is
    ``hom(g, K_m^1)`` and the entries sum to ``hom(g, K_m)``.
    """
    if m < 3:
        raise ValueError(f"target size m must be >= 3, got {m}")
    hist = [0] * (g.edge_count + 1)

    def leaf(f, k):
        hist[k] += 1

    _search(g, complete_graph(m), leaf, exceptional=(0, 1))
    return hist
