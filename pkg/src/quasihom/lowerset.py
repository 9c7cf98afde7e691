"""Sets of source edges sent onto the exceptional pair, and their weights.

For a path or cycle on ``n`` vertices labelled ``0..n-1``, an edge
``{i, i+1}`` (indices mod ``n`` on a cycle) is named by its lower vertex
``i``. Fixing *exactly* which edges land on the exceptional pair ``{A, B}``
splits the source into clusters (maximal runs of such edges, whose vertices
alternate between A and B) and gaps (the remaining vertices). Each cluster can
start on A or on B; each gap is coloured independently:

* a gap between two clusters contributes ``p_len(m)``;
* a gap touching one end of a path contributes ``q_len(m)``.

Two chosen indices exactly 2 apart are contradictory (the vertex between them
would either create an extra exceptional edge or break adjacency), so such
sets carry no homomorphisms.

The same file handles the hub-side configurations of wheels: a set of rim
vertices, pairwise non-adjacent, all mapped to the partner of the hub's image.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .poly import gap_value

LINEAR = "linear"
CYCLIC = "cyclic"


@dataclass(frozen=True)
class Gap:
    vertices: tuple[int, ...]
    kind: str  # "internal" or "boundary"

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class LowerVertexSet:
    """Lower vertices ``i_1 < ... < i_k`` of exceptional edges.

    ``length`` is the number of source vertices: ``P_length`` (indices in
    ``0..length-2``) for linear geometry, ``C_length`` (indices in
    ``0..length-1``) for cyclic geometry.
    """

    indices: tuple[int, ...]
    geometry: str
    length: int

    def __post_init__(self):
        if self.geometry not in (LINEAR, CYCLIC):
            raise ValueError(f"geometry must be {LINEAR!r} or {CYCLIC!r}")
        idx = tuple(self.indices)
        object.__setattr__(self, "indices", idx)
        top = self.length - 2 if self.geometry == LINEAR else self.length - 1
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError(f"indices must be strictly increasing: {idx}")
        if idx and (idx[0] < 0 or idx[-1] > top):
            raise ValueError(f"indices must lie in [0, {top}]: {idx}")

    @property
    def k(self) -> int:
        return len(self.indices)

    def _differences(self) -> list[int]:
        idx = self.indices
        diffs = [b - a for a, b in zip(idx, idx[1:])]
        if self.geometry == CYCLIC and idx:
            diffs.append(idx[0] + self.length - idx[-1])
        return diffs

    def is_valid(self) -> bool:
        if self.geometry == CYCLIC and self.k == self.length:
            return self.length % 2 == 0
        return 2 not in self._differences()

    def _runs(self) -> list[list[int]]:
        """Maximal runs of consecutive indices, merged across the wrap."""
        runs: list[list[int]] = []
        for i in self.indices:
            if runs and i == runs[-1][-1] + 1:
                runs[-1].append(i)
            else:
                runs.append([i])
        if (self.geometry == CYCLIC and len(runs) > 1
                and runs[0][0] == 0 and runs[-1][-1] == self.length - 1):
            runs[0] = runs.pop() + runs[0]
        return runs

    def clusters(self) -> list[tuple[int, ...]]:
        """Vertex runs; each run of indices is extended by the vertex after it."""
        if self.geometry == CYCLIC and self.k == self.length:
            return [tuple(range(self.length))]
        out = []
        for run in self._runs():
            nxt = (run[-1] + 1) % self.length if self.geometry == CYCLIC else run[-1] + 1
            out.append(tuple(run) + (nxt,))
        return out

    def gaps(self) -> list[Gap]:
        if not self.indices:
            raise ValueError("an empty set has no clusters or gaps")
        n = self.length
        covered = {v for c in self.clusters() for v in c}
        if self.geometry == LINEAR:
            out = []
            current: list[int] = []
            for v in range(n):
                if v in covered:
                    if current:
                        out.append(current)
                    current = []
                else:
                    current.append(v)
            if current:
                out.append(current)
            return [
                Gap(tuple(g), "boundary" if g[0] == 0 or g[-1] == n - 1 else "internal")
                for g in out
            ]
        # cyclic: walk forward from the start of each cluster's successor
        out = []
        for c in self.clusters():
            v = (c[-1] + 1) % n
            run = []
            while v not in covered:
                run.append(v)
                v = (v + 1) % n
            if run:
                out.append(Gap(tuple(run), "internal"))
        return out

    def signature(self) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
        """``(cluster count, internal gap lengths, boundary gap lengths)``, sorted."""
        gaps = self.gaps()
        return (
            len(self.clusters()),
            tuple(sorted(len(g) for g in gaps if g.kind == "internal")),
            tuple(sorted(len(g) for g in gaps if g.kind == "boundary")),
        )

    def weight(self, m: int) -> int:
        """Homomorphisms into ``K_m`` realising exactly this set of exceptional edges."""
        if not self.is_valid():
            return 0
        return _signature_weight(self.geometry, self.signature(), m)


def _signature_weight(geometry: str, sig, m: int) -> int:
    # cyclic sets have no boundary gaps
    clusters, internal, boundary = sig
    w = 2 ** clusters
    for g in internal:
        w *= gap_value("p", g, m)
    for g in boundary:
        w *= gap_value("q", g, m)
    return w


def _valid_index_sets(top: int, k: int, cyclic_length: int | None) -> Iterator[tuple[int, ...]]:
    """Increasing k-tuples from ``0..top`` with no consecutive difference 2.

    With ``cyclic_length`` set, the wrap-around difference must not be 2 either.
    """
    chosen: list[int] = []

    def rec(start: int):
        if len(chosen) == k:
            if cyclic_length is not None:
                wrap = chosen[0] + cyclic_length - chosen[-1]
                if wrap == 2:
                    return
            yield tuple(chosen)
            return
        need = k - len(chosen)
        for i in range(start, top - need + 2):
            if chosen and i - chosen[-1] == 2:
                continue
            chosen.append(i)
            yield from rec(i + 1)
            chosen.pop()

    yield from rec(0)


def lower_vertex_sets(geometry: str, length: int, k: int) -> Iterator[LowerVertexSet]:
    """Every valid set of ``k`` lower vertices."""
    if geometry == LINEAR:
        top, cyc = length - 2, None
    else:
        top, cyc = length - 1, length
    if k < 1 or k > top + 1:
        return
    if geometry == CYCLIC and k == length:
        s = LowerVertexSet(tuple(range(length)), CYCLIC, length)
        if s.is_valid():
            yield s
        return
    for idx in _valid_index_sets(top, k, cyc):
        yield LowerVertexSet(idx, geometry, length)


@lru_cache(maxsize=None)
def signature_counts(geometry: str, length: int, k: int) -> Counter:
    """Multiplicity of each signature among the valid sets; independent of ``m``."""
    return Counter(s.signature() for s in lower_vertex_sets(geometry, length, k))


def enumerated_term(geometry: str, length: int, k: int, m: int) -> int:
    """Sum of :meth:`LowerVertexSet.weight` over all valid sets of size ``k``."""
    if geometry == CYCLIC and k == length:
        return 2 if length % 2 == 0 else 0
    return sum(
        mult * _signature_weight(geometry, sig, m)
        for sig, mult in signature_counts(geometry, length, k).items()
    )


# ---------------------------------------------------------------------------
# run-length dynamic programme (same quantity, polynomial time)
#
# A set is a chain first = i_1 < ... < i_k = last; each step of 1 stays in a
# cluster, each step s >= 3 opens a gap of s-2 vertices worth 2*p_{s-2}. The
# chain weight depends only on last - first, so it is computed once.

def _chains(span: int, kmax: int, step_weight) -> list[list[int]]:
    """``F[d][r]``: summed weight of chains from 0 to ``d`` with ``r`` steps."""
    f = [[0] * kmax for _ in range(span + 1)]
    f[0][0] = 1
    for d in range(1, span + 1):
        row = f[d]
        for s in range(1, d + 1):
            w = step_weight(s)
            if not w:
                continue
            prev = f[d - s]
            for r in range(1, kmax):
                if prev[r - 1]:
                    row[r] += w * prev[r - 1]
    return f


@lru_cache(maxsize=None)
def dp_terms(geometry: str, length: int, m: int) -> tuple[int, ...]:
    """Bad terms for every ``k``; entry ``k`` matches :func:`enumerated_term`."""
    n = length
    top = n - 2 if geometry == LINEAR else n - 1
    kmax = top + 1

    def step(s: int) -> int:
        if s == 1:
            return 1
        if s == 2:
            return 0
        return 2 * gap_value("p", s - 2, m)

    chains = _chains(top, kmax, step)
    out = [0] * (kmax + 1)
    if geometry == LINEAR:
        def end(g: int) -> int:
            return gap_value("q", g, m) if g else 1

        for first in range(top + 1):
            for d in range(top - first + 1):
                edge = 2 * end(first) * end(top - first - d)
                for r, c in enumerate(chains[d]):
                    if c:
                        out[r + 1] += edge * c
        return tuple(out)
    for d in range(top + 1):
        wrap = n - d
        if wrap == 2:
            continue
        close = 1 if wrap == 1 else 2 * gap_value("p", wrap - 2, m)
        # n - d choices of first index give the same span
        for r, c in enumerate(chains[d]):
            if c:
                out[r + 1] += (n - d) * close * c
    # the full cycle is not a chain with a closing gap
    out[n] = 2 if n % 2 == 0 else 0
    return tuple(out)


def dp_term(geometry: str, length: int, k: int, m: int) -> int:
    """Same value as :func:`enumerated_term`, from the chain programme."""
    terms = dp_terms(geometry, length, m)
    return terms[k] if 1 <= k < len(terms) else 0


# ---------------------------------------------------------------------------
# hub on the exceptional pair: rim vertices mapped to the hub's partner

def spoke_sets(n: int, k: int, cyclic: bool) -> Iterator[tuple[int, ...]]:
    """k-subsets of rim ``1..n`` with no two (cyclically) adjacent vertices."""
    chosen: list[int] = []

    def rec(start: int):
        if len(chosen) == k:
            if not (cyclic and k > 1 and chosen[0] == 1 and chosen[-1] == n):
                yield tuple(chosen)
            return
        need = k - len(chosen)
        for v in range(start, n - 2 * (need - 1) + 1):
            chosen.append(v)
            yield from rec(v + 2)
            chosen.pop()

    if k >= 1:
        yield from rec(1)


def complement_runs(n: int, s: tuple[int, ...], cyclic: bool) -> list[int]:
    """Lengths of the maximal runs of rim vertices outside ``s``."""
    inside = set(s)
    runs, current = [], 0
    for v in range(1, n + 1):
        if v in inside:
            if current:
                runs.append(current)
            current = 0
        else:
            current += 1
    if current:
        if cyclic and runs and 1 not in inside:
            runs[0] += current
        else:
            runs.append(current)
    return runs


@lru_cache(maxsize=None)
def spoke_run_counts(n: int, k: int, cyclic: bool) -> Counter:
    """Multiplicity of each sorted run-length tuple among the spoke sets."""
    return Counter(
        tuple(sorted(complement_runs(n, s, cyclic))) for s in spoke_sets(n, k, cyclic)
    )


def _run_weight(length: int, m: int) -> int:
    return (m - 2) * (m - 3) ** (length - 1)


def enumerated_spoke_term(n: int, k: int, m: int, cyclic: bool) -> int:
    """Hub on A or B, exactly ``k`` rim vertices on the partner."""
    total = 0
    for runs, mult in spoke_run_counts(n, k, cyclic).items():
        w = mult
        for r in runs:
            w *= _run_weight(r, m)
        total += w
    return 2 * total


@lru_cache(maxsize=None)
def dp_spoke_terms(n: int, m: int, cyclic: bool) -> tuple[int, ...]:
    """Spoke terms for every ``k``; entry ``k`` matches :func:`enumerated_spoke_term`."""

    def run(l: int) -> int:
        return _run_weight(l, m) if l > 0 else 1

    chains = _chains(n - 1, n, lambda s: run(s - 1) if s >= 2 else 0)
    out = [0] * (n + 1)
    for d in range(n):
        if cyclic:
            wrap = n - 1 - d
            if wrap == 0 and d > 0:
                continue  # first and last rim vertices are adjacent
            weight = (n - d) * run(wrap)
            for r, c in enumerate(chains[d]):
                if c:
                    out[r + 1] += weight * c
        else:
            for first in range(1, n - d + 1):
                weight = run(first - 1) * run(n - first - d)
                for r, c in enumerate(chains[d]):
                    if c:
                        out[r + 1] += weight * c
    return tuple(2 * x for x in out)


def dp_spoke_term(n: int, k: int, m: int, cyclic: bool) -> int:
    """Same as :func:`enumerated_spoke_term`, from the chain programme."""
    terms = dp_spoke_terms(n, m, cyclic)
    return terms[k] if 1 <= k < len(terms) else 0
