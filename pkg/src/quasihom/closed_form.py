"""Closed-form homomorphism counts into the quasi-complete graph ``K_m^1``.

Every count for paths, cycles, broken wheels and wheels is the corresponding
count into ``K_m`` (a chromatic polynomial) minus the "bad" maps, i.e. those
sending at least one source edge onto the exceptional pair. The bad maps are
split by the number ``k`` of such edges; :func:`bad_term_path`,
:func:`bad_term_cycle`, :func:`bad_term_broken_wheel` and
:func:`bad_term_wheel` return those slices.

Bad terms accept any ``k >= 1``; values outside the support are 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

from . import lowerset
from .graphs import Family, FamilySpec, HomClass
from .poly import IntPolynomial, fit_int_polynomial

# above this many source vertices bad terms switch from subset enumeration
# to the run-length programme
ENUMERATION_LIMIT = 12


class NotCoveredError(ValueError):
    """Requested homomorphism class has no closed form for this family."""


def _check_m(m: int, low: int = 3):
    if m < low:
        raise ValueError(f"target size m must be >= {low}, got {m}")


def _check_n(family: Family, n: int):
    FamilySpec(family, n)


def _pick(method: str | None, length: int) -> str:
    if method is None:
        return "enumerate" if length <= ENUMERATION_LIMIT else "dp"
    if method not in ("enumerate", "dp"):
        raise ValueError(f"method must be 'enumerate' or 'dp', got {method!r}")
    return method


# ---------------------------------------------------------------------------
# complete and quasi-complete sources

def hom_complete(n: int, m: int, hom_class: HomClass | str = HomClass.ALL) -> int:
    """Homomorphisms ``K_n -> K_m^1`` of the given class."""
    _check_n(Family.COMPLETE, n)
    _check_m(m)
    hom_class = HomClass.parse(hom_class)
    if hom_class in (HomClass.SURJECTIVE, HomClass.BIJECTIVE):
        return 0
    # every map out of K_n is injective, so ALL == INJECTIVE
    if n >= m:
        return 0
    if n == m - 1:
        return 2 * factorial(m - 1)
    return 2 * factorial(n) * comb(m - 2, n - 1) + comb(m - 2, n) * factorial(n)


def quasi_complete_terms(n: int, m: int) -> dict[str, int]:
    """The five summands of ``hom(K_n^1, K_m^1)`` for ``m > n``.

    Source vertices: a clique ``1..n-1`` plus vertex ``n`` adjacent to all
    but ``1``. Keys:

    ``both``
        1 and ``n`` on A and B.
    ``one_side``
        exactly one of A, B used, by a clique vertex; ``n`` either repeats the
        image of 1 or takes one of the ``m-n`` free vertices.
    ``n_on_side``
        ``n`` alone on A (or B).
    ``neither_injective``, ``neither_collapsed``
        neither A nor B used; ``n`` distinct from, or equal to, the image of 1.
    """
    base = comb(m - 2, n - 2) * factorial(n - 2)
    return {
        "both": 2 * base,
        "one_side": 2 * (n - 1) * base * (1 + (m - n)),
        "n_on_side": 2 * comb(m - 2, n - 1) * factorial(n - 1),
        "neither_injective": comb(m - 2, n) * factorial(n),
        "neither_collapsed": comb(m - 2, n - 1) * factorial(n - 1),
    }


def hom_quasi_complete(n: int, m: int, hom_class: HomClass | str = HomClass.ALL) -> int:
    """Homomorphisms ``K_n^1 -> K_m^1`` of the given class."""
    _check_n(Family.QUASI_COMPLETE, n)
    _check_m(m)
    hom_class = HomClass.parse(hom_class)
    if hom_class in (HomClass.SURJECTIVE, HomClass.BIJECTIVE):
        return 2 * factorial(n - 2) if n == m else 0
    if n > m:
        return 0
    if n == m:
        if hom_class is HomClass.INJECTIVE:
            return 2 * factorial(n - 2)
        return 2 * factorial(n - 1) + 2 * factorial(n - 2)
    t = quasi_complete_terms(n, m)
    if hom_class is HomClass.ALL:
        return sum(t.values())
    base = comb(m - 2, n - 2) * factorial(n - 2)
    return t["both"] + 2 * (n - 1) * base * (m - n) + t["n_on_side"] + t["neither_injective"]


# ---------------------------------------------------------------------------
# paths and cycles

def bad_term_path(n: int, m: int, k: int, method: str | None = None) -> int:
    """Maps ``P_n -> K_m`` sending exactly ``k`` edges onto the exceptional pair.

    ``m = 2`` is accepted; broken wheels need it when ``m = 3``.
    """
    _check_n(Family.PATH, n)
    _check_m(m, 2)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > n - 1:
        return 0
    if k == n - 1:
        return 2
    if _pick(method, n) == "dp":
        return lowerset.dp_term(lowerset.LINEAR, n, k, m)
    return lowerset.enumerated_term(lowerset.LINEAR, n, k, m)


def bad_term_cycle(n: int, m: int, k: int, method: str | None = None) -> int:
    """Maps ``C_n -> K_m`` sending exactly ``k`` edges onto the exceptional pair.

    ``m = 2`` is accepted; wheels need it when ``m = 3``.
    """
    _check_n(Family.CYCLE, n)
    _check_m(m, 2)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return _cyclic_term(n, m, k, method)


def _cyclic_term(n: int, m: int, k: int, method: str | None) -> int:
    # also serves the triangular rim of W_3
    if k > n or k == n - 1:
        return 0
    if k == n:
        return 2 if n % 2 == 0 else 0
    if _pick(method, n) == "dp":
        return lowerset.dp_term(lowerset.CYCLIC, n, k, m)
    return lowerset.enumerated_term(lowerset.CYCLIC, n, k, m)


def base_path(n: int, m: int) -> int:
    return m * (m - 1) ** (n - 1)


def base_cycle(n: int, m: int) -> int:
    return (m - 1) * ((m - 1) ** (n - 1) + (-1) ** n)


def hom_path(n: int, m: int, method: str | None = None) -> int:
    _check_n(Family.PATH, n)
    _check_m(m)
    return base_path(n, m) - sum(bad_term_path(n, m, k, method) for k in range(1, n))


def hom_cycle(n: int, m: int, method: str | None = None) -> int:
    _check_n(Family.CYCLE, n)
    _check_m(m)
    return base_cycle(n, m) - sum(bad_term_cycle(n, m, k, method) for k in range(1, n + 1))


# ---------------------------------------------------------------------------
# broken wheels and wheels

def independence_bound(n: int, cyclic: bool) -> int:
    """Largest set of pairwise non-adjacent rim vertices."""
    return n // 2 if cyclic else (n + 1) // 2


def spoke_term(n: int, m: int, k: int, cyclic: bool, method: str | None = None) -> int:
    """Hub on the exceptional pair, ``k`` rim vertices on the hub's partner."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > independence_bound(n, cyclic):
        return 0
    if _pick(method, n + 1) == "dp":
        return lowerset.dp_spoke_term(n, k, m, cyclic)
    return lowerset.enumerated_spoke_term(n, k, m, cyclic)


def bad_term_broken_wheel_parts(n: int, m: int, k: int, method: str | None = None) -> tuple[int, int]:
    """``(hub off the pair, hub on the pair)`` split of the broken-wheel term."""
    _check_n(Family.BROKEN_WHEEL, n)
    _check_m(m)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    # hub off {A, B}: m-2 places, then the rim lives in K_{m-1}
    hub_free = (m - 2) * bad_term_path(n, m - 1, k, method) if k <= n - 1 else 0
    return hub_free, spoke_term(n, m, k, cyclic=False, method=method)


def bad_term_broken_wheel(n: int, m: int, k: int, method: str | None = None) -> int:
    return sum(bad_term_broken_wheel_parts(n, m, k, method))


def bad_term_wheel_parts(n: int, m: int, k: int, method: str | None = None) -> tuple[int, int]:
    _check_n(Family.WHEEL, n)
    _check_m(m)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    hub_free = (m - 2) * _cyclic_term(n, m - 1, k, method)
    return hub_free, spoke_term(n, m, k, cyclic=True, method=method)


def bad_term_wheel(n: int, m: int, k: int, method: str | None = None) -> int:
    return sum(bad_term_wheel_parts(n, m, k, method))


def base_broken_wheel(n: int, m: int) -> int:
    return m * (m - 1) * (m - 2) ** (n - 1)


def base_wheel(n: int, m: int) -> int:
    return m * (m - 2) * ((m - 2) ** (n - 1) + (-1) ** n)


def hom_broken_wheel(n: int, m: int, method: str | None = None) -> int:
    _check_n(Family.BROKEN_WHEEL, n)
    _check_m(m)
    return base_broken_wheel(n, m) - sum(
        bad_term_broken_wheel(n, m, k, method) for k in range(1, n)
    )


def hom_wheel(n: int, m: int, method: str | None = None) -> int:
    _check_n(Family.WHEEL, n)
    _check_m(m)
    return base_wheel(n, m) - sum(bad_term_wheel(n, m, k, method) for k in range(1, n + 1))


# ---------------------------------------------------------------------------
# dispatch

_TOTAL = {
    Family.PATH: hom_path,
    Family.CYCLE: hom_cycle,
    Family.BROKEN_WHEEL: hom_broken_wheel,
    Family.WHEEL: hom_wheel,
}

BAD_TERMS = {
    Family.PATH: bad_term_path,
    Family.CYCLE: bad_term_cycle,
    Family.BROKEN_WHEEL: bad_term_broken_wheel,
    Family.WHEEL: bad_term_wheel,
}

BASE_COUNTS = {
    Family.PATH: base_path,
    Family.CYCLE: base_cycle,
    Family.BROKEN_WHEEL: base_broken_wheel,
    Family.WHEEL: base_wheel,
}


def classes_for(family: Family | str) -> tuple[HomClass, ...]:
    """Classes with a closed form for this family."""
    family = Family.parse(family)
    if family in (Family.COMPLETE, Family.QUASI_COMPLETE):
        return tuple(HomClass)
    return (HomClass.ALL,)


def count(spec: FamilySpec, m: int, hom_class: HomClass | str = HomClass.ALL) -> int:
    """Closed-form ``hom``/``inj``/``sur``/``bij`` from ``spec`` into ``K_m^1``."""
    hom_class = HomClass.parse(hom_class)
    fam = spec.family
    if fam is Family.COMPLETE:
        return hom_complete(spec.n, m, hom_class)
    if fam is Family.QUASI_COMPLETE:
        return hom_quasi_complete(spec.n, m, hom_class)
    if hom_class is not HomClass.ALL:
        raise NotCoveredError(
            f"{hom_class.value} counts for {fam.value} sources are not covered: no closed form"
        )
    return _TOTAL[fam](spec.n, m)


def max_bad_k(family: Family, n: int) -> int:
    """Largest ``k`` the hom total sums bad terms over."""
    return n - 1 if family in (Family.PATH, Family.BROKEN_WHEEL) else n


# ---------------------------------------------------------------------------
# partial profiles

@dataclass(frozen=True)
class ProfileRow:
    spec: FamilySpec
    hom_class: HomClass
    count: int

    def sort_key(self):
        return (self.spec.family.value, self.spec.n, self.hom_class.order)


@dataclass(frozen=True)
class ProfileTable:
    m: int
    rows: tuple = field(default_factory=tuple)

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)


def partial_profile(m: int, specs) -> ProfileTable:
    """Closed-form counts into ``K_m^1`` for each spec, sorted by family, n, class."""
    _check_m(m)
    rows = []
    for raw in specs:
        try:
            spec = raw if isinstance(raw, FamilySpec) else FamilySpec(*raw)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"invalid spec {raw!r}: {exc}") from exc
        for cls in classes_for(spec.family):
            rows.append(ProfileRow(spec, cls, count(spec, m, cls)))
    rows.sort(key=ProfileRow.sort_key)
    return ProfileTable(m, tuple(rows))


def quasi_chromatic_polynomial(spec: FamilySpec) -> IntPolynomial:
    """``hom(G, K_m^1)`` as a polynomial in ``m`` for the fixed source ``G``.

    Fitted through the closed-form values at ``m = 3..N+4`` (``N`` source
    vertices), one more point than a degree-``N`` polynomial needs; fitting
    fails if the values do not lie on an integer polynomial of degree ``<= N``.
    """
    big_n = spec.vertex_count
    ms = list(range(3, big_n + 5))
    return fit_int_polynomial(ms, [count(spec, m) for m in ms], big_n)
