"""The verification sweep: every closed form against both oracles.

Each check returns a :class:`CheckResult`; the first mismatching tuple is
kept so a failure can be reported precisely.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable

from . import closed_form as cf
from . import errata
from .bruteforce import count_by_class, exceptional_histogram
from .graphs import MIN_SIZE, Family, FamilySpec, make_family, quasi_complete_graph
from .poly import gap_polynomial, gap_polynomial_rec
from .transfer import cyclic_hom_count, hub_conditioned_count, linear_hom_count

log = logging.getLogger(__name__)


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failure: tuple | None = None
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failure is None

    def expect(self, key: tuple, expected, got) -> bool:
        """Record one comparison; keeps only the first failure."""
        self.checked += 1
        if expected != got and self.failure is None:
            self.failure = key + (expected, got)
        return expected == got

    def summary(self) -> str:
        status = "ok" if self.ok else "FAIL"
        line = f"{status:4} {self.name} ({self.checked} checks, {self.seconds:.1f}s)"
        if not self.ok:
            line += f" first failure (family, n, m, k, expected, got): {self.failure}"
        return line


@dataclass(frozen=True)
class Grid:
    """Size ranges for the sweep.

    ``n_max`` bounds the size parameter of complete, quasi-complete, broken
    wheel and wheel sources; paths and cycles go one further so that every
    source has at most ``n_max + 1`` vertices.
    """

    n_max: int = 7
    m_max: int = 6
    transfer_n_max: int = 18
    transfer_m_max: int = 12
    dp_n_max: int = 15
    poly_max: int = 30

    @property
    def ms(self) -> range:
        return range(3, self.m_max + 1)

    def sizes(self, family: Family) -> range:
        top = self.n_max + 1 if family in (Family.PATH, Family.CYCLE) else self.n_max
        return range(MIN_SIZE[family], top + 1)

    def specs(self, families=tuple(Family)):
        return [FamilySpec(f, n) for f in families for n in self.sizes(f)]


_RIMMED = (Family.PATH, Family.CYCLE, Family.BROKEN_WHEEL, Family.WHEEL)


def _timed(fn: Callable):
    def run(*args, **kwargs) -> CheckResult:
        t0 = time.perf_counter()
        out = fn(*args, **kwargs)
        res = out[0] if isinstance(out, tuple) else out
        res.seconds = time.perf_counter() - t0
        log.info(res.summary())
        return out
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def check_bruteforce(grid: Grid) -> CheckResult:
    """Closed-form counts equal the backtracking oracle, every defined class."""
    res = CheckResult("closed form == brute force")
    for spec in grid.specs():
        g = make_family(spec)
        for m in grid.ms:
            h = quasi_complete_graph(m)
            for cls in cf.classes_for(spec.family):
                res.expect((spec.family.value, spec.n, m, cls.value),
                           count_by_class(g, h, cls), cf.count(spec, m, cls))
    return res


@_timed
def check_histograms(grid: Grid) -> CheckResult:
    """Per-k bad terms equal histogram slices; slice 0 and the total are consistent."""
    res = CheckResult("bad terms == exceptional histogram")
    for spec in grid.specs(_RIMMED):
        g = make_family(spec)
        term = cf.BAD_TERMS[spec.family]
        for m in grid.ms:
            hist = exceptional_histogram(g, m)
            fam = spec.family.value
            res.expect((fam, spec.n, m, 0), hist[0], cf.count(spec, m))
            res.expect((fam, spec.n, m, "sum"), sum(hist), cf.BASE_COUNTS[spec.family](spec.n, m))
            for k in range(1, len(hist)):
                res.expect((fam, spec.n, m, k), hist[k], term(spec.n, m, k))
    return res


@_timed
def check_transfer(grid: Grid) -> CheckResult:
    """Path, cycle, broken-wheel and wheel totals equal the walk-count oracle."""
    res = CheckResult("closed form == transfer matrix")
    for m in range(3, grid.transfer_m_max + 1):
        h = quasi_complete_graph(m)
        for n in range(2, grid.transfer_n_max + 1):
            res.expect(("path", n, m), linear_hom_count(h, n), cf.hom_path(n, m))
            if n >= 4:
                res.expect(("cycle", n, m), cyclic_hom_count(h, n), cf.hom_cycle(n, m))
            if n >= 3:
                res.expect(("broken-wheel", n, m), hub_conditioned_count(h, n, "path"),
                           cf.hom_broken_wheel(n, m))
                res.expect(("wheel", n, m), hub_conditioned_count(h, n, "cycle"),
                           cf.hom_wheel(n, m))
    return res


@_timed
def check_dp(grid: Grid) -> CheckResult:
    """The run-length programme reproduces subset enumeration for every bad term."""
    res = CheckResult("run-length programme == subset enumeration")
    for fam in _RIMMED:
        term = cf.BAD_TERMS[fam]
        for n in range(MIN_SIZE[fam], grid.dp_n_max + 1):
            for m in range(3, grid.transfer_m_max + 1):
                for k in range(1, cf.max_bad_k(fam, n) + 1):
                    res.expect((fam.value, n, m, k), term(n, m, k, method="enumerate"),
                               term(n, m, k, method="dp"))
    return res


@_timed
def check_gap_polynomials(grid: Grid) -> CheckResult:
    """Level-graph path sums equal the recurrence, coefficientwise."""
    res = CheckResult("p/q path sum == recurrence")
    for i in range(grid.poly_max + 1):
        for kind in ("p", "q"):
            res.expect((kind, i), gap_polynomial_rec(kind, i).coeffs, gap_polynomial(kind, i).coeffs)
    return res


@_timed
def check_structural_zeros(grid: Grid) -> CheckResult:
    """Forced values of the bad terms and the vanishing corollaries."""
    res = CheckResult("structural zeros and special constants")
    for n in range(4, max(grid.n_max + 1, 10) + 1):
        for m in range(3, max(grid.m_max, 8) + 1):
            res.expect(("path", n, m, n - 1), 2, cf.bad_term_path(n, m, n - 1))
            res.expect(("cycle", n, m, n), 2 if n % 2 == 0 else 0, cf.bad_term_cycle(n, m, n))
            res.expect(("cycle", n, m, n - 1), 0, cf.bad_term_cycle(n, m, n - 1))
    for n in range(3, max(grid.n_max, 8) + 1):
        for m in grid.ms:
            for fam, cyclic in ((Family.BROKEN_WHEEL, False), (Family.WHEEL, True)):
                parts = cf.bad_term_broken_wheel_parts if not cyclic else cf.bad_term_wheel_parts
                for k in range(cf.independence_bound(n, cyclic) + 1, n + 1):
                    res.expect((fam.value, n, m, k, "hub"), 0, parts(n, m, k)[1])
    for half in range(2, 9):
        res.expect(("cycle", 2 * half + 1, 3), 0, cf.hom_cycle(2 * half + 1, 3))
    for half in range(1, 9):
        res.expect(("broken-wheel", 2 * half + 1, 3), 0, cf.hom_broken_wheel(2 * half + 1, 3))
    for n in range(3, 9):
        res.expect(("wheel", n, 3), 0, cf.hom_wheel(n, 3))
    return res


@_timed
def check_polynomial_fit(grid: Grid) -> CheckResult:
    """``hom(G, K_m^1)`` is an integer polynomial of degree <= |V(G)| in ``m``."""
    res = CheckResult("quasi-chromatic polynomial fit")
    for spec in grid.specs():
        big_n = spec.vertex_count
        try:
            poly = cf.quasi_chromatic_polynomial(spec)
        except ValueError as exc:
            res.expect((spec.family.value, spec.n, None), "polynomial", str(exc))
            continue
        m = big_n + 5
        res.expect((spec.family.value, spec.n, m), cf.count(spec, m), poly(m))
    return res


@_timed
def check_quasi_complete_forms(grid: Grid) -> CheckResult:
    """The two printed quasi-complete forms agree term by term (``m >= n+2``)."""
    res = CheckResult("quasi-complete factorial form == binomial form")
    for n in range(3, 12):
        for m in range(n + 2, 13):
            binom = errata.quasi_complete_printed_binomial(n, m)
            fact = errata.quasi_complete_printed_factorial(n, m)
            for j, (a, b) in enumerate(zip(binom, fact), start=1):
                res.expect(("quasi-complete", n, m, j), a, b)
    return res


@_timed
def check_errata(grid: Grid) -> tuple[CheckResult, list[errata.ErrataRow]]:
    """Normative values in the errata report equal the oracle; deltas only noted."""
    res = CheckResult("errata: normative == oracle")
    rows = errata.errata_rows(grid.sizes(Family.PATH), grid.sizes(Family.CYCLE),
                              grid.sizes(Family.QUASI_COMPLETE), grid.ms)
    for r in rows:
        res.expect((r.family, r.n, r.m, r.k), r.oracle_value, r.normative_value)
    deltas = [r for r in rows if r.delta]
    res.notes.append(f"{len(deltas)} of {len(rows)} rows differ as printed")
    seen: dict[tuple[str, int], int] = {}
    for fam in (Family.PATH, Family.CYCLE):
        for n in grid.sizes(fam):
            for m in grid.ms:
                for k in range(1, n - 1):
                    for j, d in enumerate(errata.summand_deltas(fam, n, m, k), start=1):
                        seen[(fam.value, j)] = seen.get((fam.value, j), 0) + d
    for (fam, j), hits in sorted(seen.items()):
        if hits:
            res.notes.append(f"{fam} summand {j} differs as printed in {hits} cases")
    if any(r.family == Family.QUASI_COMPLETE.value and r.delta for r in rows):
        res.notes.append("quasi-complete second term (m-n-1 free images) differs as printed")
    return res, rows


def run_all(grid: Grid = Grid()) -> tuple[list[CheckResult], list[errata.ErrataRow]]:
    results = [
        check_bruteforce(grid),
        check_histograms(grid),
        check_transfer(grid),
        check_dp(grid),
        check_gap_polynomials(grid),
        check_structural_zeros(grid),
        check_polynomial_fit(grid),
        check_quasi_complete_forms(grid),
    ]
    errata_result, rows = check_errata(grid)
    results.append(errata_result)
    return results, rows
