"""Integer polynomials in ``m`` and the gap polynomials ``p_i``, ``q_i``.

The gap polynomials count the ways to colour a run of ``i`` source vertices
that sits next to vertices already sent onto the exceptional pair. They are
built two ways:

* :func:`gap_polynomial` reads them off the layered 0/1 digraph returned by
  :func:`level_graph`, summing one product of linear factors per top-to-bottom
  path;
* :func:`gap_polynomial_rec` uses the three-term recurrence
  ``x_i = (m-3) x_{i-1} + 2(m-2) x_{i-2}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


class IntPolynomial:
    """Polynomial in ``m`` with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def linear(cls, slope: int, intercept: int) -> "IntPolynomial":
        """``slope*m + intercept``."""
        return cls((intercept, slope))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return IntPolynomial((int(other),))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPolynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, m: int) -> int:
        return eval_poly(self, m)

    def to_list(self) -> list[int]:
        """Ascending coefficients; ``[0]`` for the zero polynomial."""
        return list(self.coeffs) or [0]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*m")
            else:
                parts.append(f"{c}*m^{i}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


M = IntPolynomial((0, 1))


def eval_poly(poly: IntPolynomial, m: int) -> int:
    """Exact Horner evaluation."""
    acc = 0
    for c in reversed(poly.coeffs):
        acc = acc * m + c
    return acc


def render(poly: IntPolynomial) -> str:
    """``"[c0, c1, ...]  (= c0 + c1*m + ...)"``."""
    return f"{poly.to_list()}  (= {poly})"


@dataclass(frozen=True)
class LevelGraph:
    """Layered 0/1 digraph with edges only between consecutive levels.

    ``labels[j]`` are the node labels on level ``j+1``. ``parents[j]`` gives,
    for each node on level ``j+2``, the index of its unique in-neighbour on
    the level above; the bottom level is excluded because its single node is
    fed by every node of the level above it.
    """

    labels: tuple
    parents: tuple

    @property
    def depth(self) -> int:
        return len(self.labels)

    def level_sizes(self) -> list[int]:
        return [len(lv) for lv in self.labels]

    def node_count(self) -> int:
        return sum(self.level_sizes())

    def edges(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """All edges as ``((level, index), (level + 1, index))``, levels 1-based."""
        out = []
        for j, par in enumerate(self.parents):
            out.extend(((j + 1, int(p)), (j + 2, c)) for c, p in enumerate(par))
        if self.depth >= 2:
            last = self.depth - 1
            out.extend(((last, c), (last + 1, 0)) for c in range(len(self.labels[last - 1])))
        return out

    def path_count(self) -> int:
        """Number of maximal top-to-bottom paths."""
        if self.depth == 1:
            return 1
        return len(self.labels[-2])


@lru_cache(maxsize=None)
def level_graph(i: int) -> LevelGraph:
    """The layered graph with ``i`` levels.

    Top and bottom levels hold a single 0. Down to level ``i-2`` every 0 has a
    0-child and a 1-child and every 1 has a single 0-child; every node on
    level ``i-1`` feeds the bottom 0.
    """
    if i < 1:
        raise ValueError(f"level count must be >= 1, got {i}")
    labels = [np.array([0], dtype=np.uint8)]
    parents = []
    for _ in range(2, i):
        above = labels[-1]
        zero_at = np.flatnonzero(above == 0)
        one_at = np.flatnonzero(above == 1)
        # 0 -> (0, 1), 1 -> (0,), children grouped by parent in index order
        kids_par = np.concatenate([np.repeat(zero_at, 2), one_at])
        kids_lab = np.concatenate([np.tile(np.array([0, 1], dtype=np.uint8), len(zero_at)),
                                   np.zeros(len(one_at), dtype=np.uint8)])
        order = np.argsort(kids_par, kind="stable")
        labels.append(kids_lab[order])
        parents.append(kids_par[order])
    if i >= 2:
        labels.append(np.array([0], dtype=np.uint8))
    for arr in labels + parents:
        arr.setflags(write=False)
    return LevelGraph(tuple(labels), tuple(parents))


# node factors as (slope, intercept) of slope*m + intercept
_TOP = (1, -2)
_ONE = (0, 2)
_AFTER_ONE = (1, -2)
_AFTER_ZERO = (1, -3)
_BOTTOM_AFTER_ZERO = {"p": (1, -3), "q": (1, -1)}


def _check_kind(kind: str) -> str:
    if kind not in ("p", "q"):
        raise ValueError(f"kind must be 'p' or 'q', got {kind!r}")
    return kind


def _unpack(packed: int, bits: int) -> list[int]:
    """Inverse of evaluating at ``m = 2**bits`` with signed digits."""
    out, half, mask = [], 1 << (bits - 1), (1 << bits) - 1
    while packed:
        c = packed & mask
        if c >= half:
            c -= 1 << bits
        out.append(c)
        packed = (packed - c) >> bits
    return out


@lru_cache(maxsize=None)
def gap_polynomial_pair(i: int) -> tuple[IntPolynomial, IntPolynomial]:
    """``(p_i, q_i)`` as path sums over :func:`level_graph` ``(i)``.

    Each node contributes a linear factor determined by its label, its
    parent's label and whether it is the top or bottom node; the two kinds
    differ only at the bottom. Partial products are carried per node, packed
    into one integer by evaluating at ``m = 2**bits`` (coefficient magnitudes
    stay below ``5.2**i``, under ``2**(bits-1)``).
    """
    if i < 0:
        raise ValueError(f"index must be >= 0, got {i}")
    if i == 0:
        return IntPolynomial((1,)), IntPolynomial((1,))
    g = level_graph(i)
    bits = (5 * i) // 2 + 8
    shift = 1 << bits
    # packed node factors, indexed by node type
    table = np.array(
        [slope * shift + icpt for slope, icpt in
         (_AFTER_ZERO, _ONE, _AFTER_ONE, _BOTTOM_AFTER_ZERO["p"], _BOTTOM_AFTER_ZERO["q"])],
        dtype=object,
    )
    acc = np.array([_TOP[0] * shift + _TOP[1]], dtype=object)
    prev_labels = g.labels[0]
    for lab, par in zip(g.labels[1:-1], g.parents):
        # 0 after 0 -> 0, any 1 -> 1, 0 after 1 -> 2
        node_type = np.where(lab == 1, 1, np.where(prev_labels[par] == 1, 2, 0))
        acc = acc[par] * table[node_type]
        prev_labels = lab
    if i == 1:
        single = IntPolynomial(_unpack(int(acc[0]), bits))
        return single, single
    out = []
    for bottom in (3, 4):
        node_type = np.where(prev_labels == 1, 2, bottom)
        out.append(IntPolynomial(_unpack(int((acc * table[node_type]).sum()), bits)))
    return out[0], out[1]


def gap_polynomial(kind: str, i: int) -> IntPolynomial:
    """``p_i`` or ``q_i`` read off the layered graph (see :func:`gap_polynomial_pair`)."""
    _check_kind(kind)
    return gap_polynomial_pair(i)[0 if kind == "p" else 1]


@lru_cache(maxsize=None)
def gap_polynomial_rec(kind: str, i: int) -> IntPolynomial:
    """``p_i`` or ``q_i`` from the recurrence ``x_i = (m-3)x_{i-1} + 2(m-2)x_{i-2}``."""
    _check_kind(kind)
    if i < 0:
        raise ValueError(f"index must be >= 0, got {i}")
    if i == 0:
        return IntPolynomial((1,))
    if i == 1:
        return M - 2
    if i == 2:
        return (M - 2) * (M - 3) if kind == "p" else (M - 2) * (M - 1)
    return (M - 3) * gap_polynomial_rec(kind, i - 1) + 2 * (M - 2) * gap_polynomial_rec(kind, i - 2)


@lru_cache(maxsize=None)
def gap_value(kind: str, i: int, m: int) -> int:
    """``p_i(m)`` or ``q_i(m)`` as an integer."""
    return eval_poly(gap_polynomial_rec(kind, i), m)


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Ascending coefficients of the lowest-degree polynomial through the points."""
    if len(xs) != len(ys) or not xs:
        raise ValueError("need equally many, and at least one, x and y values")
    if len(set(xs)) != len(xs):
        raise ValueError("x values must be distinct")
    # Newton divided differences, then expand the Newton form
    table = [Fraction(y) for y in ys]
    newton = [table[0]]
    for level in range(1, len(xs)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(len(table) - 1)
        ]
        newton.append(table[0])
    coeffs = [Fraction(0)]
    for c, x0 in zip(reversed(newton), reversed(xs[:len(newton)])):
        # coeffs = coeffs * (m - x0) + c
        shifted = [Fraction(0)] + coeffs
        for i, a in enumerate(coeffs):
            shifted[i] -= x0 * a
        shifted[0] += c
        coeffs = shifted
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def fit_int_polynomial(xs: Sequence[int], ys: Sequence[int], max_degree: int) -> IntPolynomial:
    """Interpolate and insist on integer coefficients and degree <= ``max_degree``."""
    coeffs = interpolate(xs, ys)
    if len(coeffs) - 1 > max_degree:
        raise ValueError(f"interpolant has degree {len(coeffs) - 1} > {max_degree}")
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("interpolant has non-integer coefficients")
    return IntPolynomial(int(c) for c in coeffs)
