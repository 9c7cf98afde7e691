"""Transfer-matrix oracle: walk counts in the target's adjacency matrix.

All matrices hold Python ints (``dtype=object``), so every count is exact.
"""
from __future__ import annotations

import numpy as np

from .graphs import Graph, induced_subgraph


def linear_hom_count(h: Graph, n: int) -> int:
    """``hom(P_n, h)``: sum of the entries of ``A^(n-1)``, by vector iteration."""
    if n < 2:
        raise ValueError(f"path length n must be >= 2, got {n}")
    a = h.adjacency_matrix()
    v = np.ones(h.vertex_count, dtype=object)
    for _ in range(n - 1):
        v = v.dot(a)
    return int(sum(v))


def _matrix_power(a: np.ndarray, e: int) -> np.ndarray:
    result = np.identity(a.shape[0], dtype=int).astype(object)
    base = a
    while e:
        if e & 1:
            result = result.dot(base)
        e >>= 1
        if e:
            base = base.dot(base)
    return result


def cyclic_hom_count(h: Graph, n: int) -> int:
    """``hom(C_n, h) = trace(A^n)``."""
    if n < 3:
        raise ValueError(f"cycle length n must be >= 3, got {n}")
    if h.vertex_count == 0:
        return 0
    return int(sum(np.diagonal(_matrix_power(h.adjacency_matrix(), n))))


def hub_conditioned_count(h: Graph, n: int, rim: str = "path") -> int:
    """``hom(BW_n, h)`` (rim="path") or ``hom(W_n, h)`` (rim="cycle").

    Sums, over each hub image, the rim count inside that vertex's
    neighbourhood (neighbours taken in ascending order).
    """
    if n < 3:
        raise ValueError(f"spoke count n must be >= 3, got {n}")
    if rim == "path":
        rim_count = linear_hom_count
    elif rim == "cycle":
        rim_count = cyclic_hom_count
    else:
        raise ValueError(f"rim must be 'path' or 'cycle', got {rim!r}")
    total = 0
    for hub in range(h.vertex_count):
        nbhd = induced_subgraph(h, h.neighbors(hub))
        if nbhd.vertex_count:
            total += rim_count(nbhd, n)
    return total
