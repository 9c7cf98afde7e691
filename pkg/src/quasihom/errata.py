"""Literal evaluation of the displayed sums, for comparison with the counts.

The displayed expressions for the path and cycle terms are evaluated exactly
as typeset: four summands each, the 1/2 in front of the first path summand,
and the gap-polynomial indices as written. Values are kept as
:class:`~fractions.Fraction` so half-integers survive. The quasi-complete
formula is likewise available in its printed factorial-quotient form and in
its printed binomial form.

Known differences from the counts, all confirmed against the oracle:

* path summands 1-3 lack one factor 2 per configuration (summand 1 halves
  instead of doubling);
* cycle summand 3 uses ``p_{i_1}`` for a gap of ``i_1 - 1`` vertices;
* the quasi-complete second term counts ``m-n-1`` free images for the last
  vertex where ``m-n`` are available.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable

from . import closed_form
from .bruteforce import count_by_class, exceptional_histogram
from .graphs import Family, HomClass, make_family, quasi_complete_graph
from .lowerset import CYCLIC, LINEAR, LowerVertexSet, _valid_index_sets
from .poly import gap_value

ERRATA_COLUMNS = ("family", "n", "m", "k", "printed_value", "normative_value", "oracle_value")


def _gap_product(idx: tuple[int, ...], m: int) -> int:
    """Product over consecutive differences > 2 of ``2 p_{diff-2}(m)``."""
    w = 1
    for a, b in zip(idx, idx[1:]):
        if b - a > 2:
            w *= 2 * gap_value("p", b - a - 2, m)
    return w


def printed_path_summands(n: int, m: int, k: int) -> list[Fraction]:
    """The four displayed summands of the path term for ``1 <= k <= n-2``."""
    top = n - 2
    s = [Fraction(0)] * 4
    for idx in _valid_index_sets(top, k, None):
        first, last = idx[0], idx[-1]
        inner = _gap_product(idx, m)
        if first == 0 and last == top:
            s[0] += Fraction(inner, 2)
        elif first == 0:
            s[1] += inner * gap_value("q", top - last, m)
        elif last == top:
            s[2] += gap_value("q", first, m) * inner
        else:
            s[3] += 2 * gap_value("q", first, m) * inner * gap_value("q", top - last, m)
    return s


def printed_cycle_summands(n: int, m: int, k: int) -> list[Fraction]:
    """The four displayed summands of the cycle term for ``1 <= k <= n-2``.

    Index ranges follow the display: summand 2 needs ``i_k < n-2``, summand 3
    needs ``i_1 > 1``, summand 4 needs ``0 < i_1`` and ``i_k < n-1``.
    """
    s = [Fraction(0)] * 4
    # the display only constrains consecutive differences, not the wrap
    for idx in _valid_index_sets(n - 1, k, None):
        first, last = idx[0], idx[-1]
        inner = _gap_product(idx, m)
        if first == 0 and last == n - 1:
            s[0] += inner
        elif first == 0 and last < n - 2:
            s[1] += inner * 2 * gap_value("p", n - last - 2, m)
        elif first > 1 and last == n - 1:
            s[2] += 2 * gap_value("p", first, m) * inner
        elif 0 < first and last < n - 1:
            s[3] += 2 * gap_value("p", first + n - last - 2, m) * inner
    return s


def _normative_weight(idx: tuple[int, ...], geometry: str, n: int, m: int) -> int:
    return LowerVertexSet(idx, geometry, n).weight(m)


def normative_path_summands(n: int, m: int, k: int) -> list[int]:
    """Counts for the same four groups of index sets as :func:`printed_path_summands`."""
    top = n - 2
    s = [0] * 4
    for idx in _valid_index_sets(top, k, None):
        first, last = idx[0], idx[-1]
        slot = (0 if last == top else 1) if first == 0 else (2 if last == top else 3)
        s[slot] += _normative_weight(idx, LINEAR, n, m)
    return s


def normative_cycle_summands(n: int, m: int, k: int) -> list[int]:
    """Counts for the same four groups of index sets as :func:`printed_cycle_summands`."""
    s = [0] * 4
    for idx in _valid_index_sets(n - 1, k, n):
        first, last = idx[0], idx[-1]
        if first == 0 and last == n - 1:
            slot = 0
        elif first == 0:
            slot = 1
        elif last == n - 1:
            slot = 2
        else:
            slot = 3
        s[slot] += _normative_weight(idx, CYCLIC, n, m)
    return s


def summand_deltas(family: Family | str, n: int, m: int, k: int) -> list[bool]:
    """Which displayed summands differ from the counts they stand for."""
    family = Family.parse(family)
    if family is Family.PATH:
        printed, normative = printed_path_summands(n, m, k), normative_path_summands(n, m, k)
    elif family is Family.CYCLE:
        printed, normative = printed_cycle_summands(n, m, k), normative_cycle_summands(n, m, k)
    else:
        raise ValueError(f"no displayed summands for family {family.value}")
    return [a != b for a, b in zip(printed, normative)]


def as_printed_term(family: Family | str, n: int, m: int, k: int) -> Fraction:
    """The path (``s``) or cycle (``t``) term exactly as displayed."""
    family = Family.parse(family)
    if family is Family.PATH:
        closed_form.FamilySpec(family, n)
        if not 1 <= k <= n - 1:
            raise ValueError(f"k must lie in [1, {n - 1}] for path({n}), got {k}")
        if k == n - 1:
            return Fraction(2)
        return sum(printed_path_summands(n, m, k), Fraction(0))
    if family is Family.CYCLE:
        closed_form.FamilySpec(family, n)
        if not 1 <= k <= n:
            raise ValueError(f"k must lie in [1, {n}] for cycle({n}), got {k}")
        if k == n:
            return Fraction(2 if n % 2 == 0 else 0)
        if k == n - 1:
            return Fraction(0)
        return sum(printed_cycle_summands(n, m, k), Fraction(0))
    raise ValueError(f"no displayed term for family {family.value}")


# ---------------------------------------------------------------------------
# quasi-complete sources

def quasi_complete_printed_binomial(n: int, m: int) -> list[int]:
    """Five summands of the printed binomial form (second term uses ``m-n``), ``m > n``."""
    base = comb(m - 2, n - 2) * factorial(n - 2)
    return [
        2 * base,
        2 * (n - 1) * base * (m - n),
        2 * comb(m - 2, n - 1) * factorial(n - 1),
        comb(m - 2, n) * factorial(n),
        comb(m - 2, n - 1) * factorial(n - 1),
    ]


def quasi_complete_printed_factorial(n: int, m: int) -> list[Fraction]:
    """Five summands of the printed factorial-quotient form; needs ``m >= n+2``."""
    if m < n + 2:
        raise ValueError("the factorial-quotient form needs m >= n + 2")
    f = factorial
    return [
        Fraction(2 * f(m - 2), f(m - n)),
        Fraction(2 * (n - 1) * f(m - 2), f(m - n - 1)),
        Fraction(2 * f(m - 2), f(m - n - 1)),
        Fraction(f(m - 2), f(m - n - 2)),
        Fraction(f(m - 2), f(m - n - 1)),
    ]


def quasi_complete_printed(n: int, m: int) -> int:
    """Printed total for ``m > n``; other ranges agree with the counts."""
    if m <= n:
        return closed_form.hom_quasi_complete(n, m)
    return sum(quasi_complete_printed_binomial(n, m))


# ---------------------------------------------------------------------------
# report

@dataclass(frozen=True)
class ErrataRow:
    family: str
    n: int
    m: int
    k: int | None
    printed_value: Fraction
    normative_value: int
    oracle_value: int

    @property
    def delta(self) -> bool:
        return self.printed_value != self.normative_value

    @property
    def consistent(self) -> bool:
        return self.normative_value == self.oracle_value

    def as_strings(self) -> list[str]:
        return [
            self.family, str(self.n), str(self.m),
            "" if self.k is None else str(self.k),
            format_fraction(self.printed_value),
            str(self.normative_value), str(self.oracle_value),
        ]


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def errata_rows(path_n: Iterable[int], cycle_n: Iterable[int], qc_n: Iterable[int],
                ms: Iterable[int]) -> list[ErrataRow]:
    """Printed vs normative vs oracle, per ``k`` for paths/cycles, totals for ``K_n^1``."""
    ms = list(ms)
    rows = []
    for fam, ns in ((Family.PATH, path_n), (Family.CYCLE, cycle_n)):
        term = closed_form.BAD_TERMS[fam]
        for n in ns:
            g = make_family((fam, n))
            for m in ms:
                hist = exceptional_histogram(g, m)
                for k in range(1, closed_form.max_bad_k(fam, n) + 1):
                    rows.append(ErrataRow(fam.value, n, m, k, as_printed_term(fam, n, m, k),
                                          term(n, m, k), hist[k]))
    for n in qc_n:
        g = make_family((Family.QUASI_COMPLETE, n))
        for m in ms:
            rows.append(ErrataRow(
                Family.QUASI_COMPLETE.value, n, m, None,
                Fraction(quasi_complete_printed(n, m)),
                closed_form.hom_quasi_complete(n, m),
                count_by_class(g, quasi_complete_graph(m), HomClass.ALL),
            ))
    rows.sort(key=lambda r: (r.family, r.n, r.m, -1 if r.k is None else r.k))
    return rows


def errata_csv(rows: Iterable[ErrataRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ERRATA_COLUMNS)
    for r in rows:
        w.writerow(r.as_strings())
    return buf.getvalue()
