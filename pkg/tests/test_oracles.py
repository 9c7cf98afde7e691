"""The two oracles against each other and against hand-checked values."""
from itertools import product

import pytest

from quasihom.bruteforce import count_by_class, exceptional_histogram
from quasihom.graphs import HomClass, complete_graph, make_family, quasi_complete_graph
from quasihom.transfer import cyclic_hom_count, hub_conditioned_count, linear_hom_count


def naive_count(g, h):
    return sum(all(h.has_edge(f[a], f[b]) for a, b in g.edges)
               for f in product(range(h.vertex_count), repeat=g.vertex_count))


@pytest.mark.parametrize("g,h,cls,expected", [
    (complete_graph(4), quasi_complete_graph(3), "all", 0),
    (make_family(("cycle", 5)), quasi_complete_graph(3), "all", 0),
    (quasi_complete_graph(3), quasi_complete_graph(3), "bij", 2),
    (complete_graph(3), quasi_complete_graph(4), "all", 12),
])
def test_count_by_class_examples(g, h, cls, expected):
    assert count_by_class(g, h, cls) == expected


@pytest.mark.parametrize("spec,m,expected", [
    (("path", 3), 3, [6, 4, 2]),
    (("complete", 3), 3, [0, 6, 0, 0]),
    (("cycle", 4), 3, [8, 0, 8, 0, 2]),
])
def test_histogram_examples(spec, m, expected):
    assert exceptional_histogram(make_family(spec), m) == expected


def test_histogram_rejects_small_target():
    with pytest.raises(ValueError):
        exceptional_histogram(make_family(("path", 3)), 2)


@pytest.mark.parametrize("spec", [("path", 4), ("cycle", 4), ("wheel", 3), ("broken_wheel", 4),
                                  ("quasi_complete", 4)])
@pytest.mark.parametrize("m", [3, 4])
def test_backtracking_matches_naive_enumeration(spec, m):
    g, h = make_family(spec), quasi_complete_graph(m)
    assert count_by_class(g, h) == naive_count(g, h)


def test_class_counts_nest():
    g, h = make_family(("quasi_complete", 4)), quasi_complete_graph(4)
    c = {cls: count_by_class(g, h, cls) for cls in HomClass}
    assert c[HomClass.BIJECTIVE] <= c[HomClass.INJECTIVE] <= c[HomClass.ALL]
    assert c[HomClass.BIJECTIVE] <= c[HomClass.SURJECTIVE] <= c[HomClass.ALL]


def test_transfer_examples():
    k3, k4 = quasi_complete_graph(3), quasi_complete_graph(4)
    assert linear_hom_count(k3, 3) == 6
    assert linear_hom_count(k4, 2) == 10
    assert cyclic_hom_count(k3, 4) == 8
    assert cyclic_hom_count(k3, 5) == 0
    assert cyclic_hom_count(k4, 4) == 50
    assert hub_conditioned_count(k4, 3, "path") == 16
    assert hub_conditioned_count(k4, 4, "cycle") == 20
    for n in range(3, 9):
        assert hub_conditioned_count(k3, n, "cycle") == 0


@pytest.mark.parametrize("m", range(3, 7))
def test_transfer_on_complete_targets(m):
    for n in range(2, 11):
        assert linear_hom_count(complete_graph(m), n) == m * (m - 1) ** (n - 1)


@pytest.mark.parametrize("spec", [("path", 5), ("cycle", 5), ("broken_wheel", 4), ("wheel", 4)])
def test_transfer_matches_backtracking(spec):
    fam, n = spec
    for m in (3, 4, 5):
        h = quasi_complete_graph(m)
        want = count_by_class(make_family(spec), h)
        got = {"path": lambda: linear_hom_count(h, n),
               "cycle": lambda: cyclic_hom_count(h, n),
               "broken_wheel": lambda: hub_conditioned_count(h, n, "path"),
               "wheel": lambda: hub_conditioned_count(h, n, "cycle")}[fam]()
        assert got == want
