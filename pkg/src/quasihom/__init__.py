"""Exact homomorphism counts into the complete graph with one edge removed.

Closed forms for complete, quasi-complete, path, cycle, broken-wheel and
wheel sources, checked against a backtracking oracle and a transfer-matrix
oracle.
"""
from .bruteforce import count_by_class, exceptional_histogram
from .closed_form import (
    NotCoveredError,
    ProfileRow,
    ProfileTable,
    bad_term_broken_wheel,
    bad_term_cycle,
    bad_term_path,
    bad_term_wheel,
    count,
    hom_broken_wheel,
    hom_complete,
    hom_cycle,
    hom_path,
    hom_quasi_complete,
    hom_wheel,
    partial_profile,
    quasi_chromatic_polynomial,
)
from .errata import as_printed_term, errata_rows
from .graphs import (
    Family,
    FamilySpec,
    Graph,
    HomClass,
    broken_wheel_graph,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    make_family,
    path_graph,
    quasi_complete_graph,
    wheel_graph,
)
from .poly import IntPolynomial, gap_polynomial, gap_polynomial_rec, level_graph
from .transfer import cyclic_hom_count, hub_conditioned_count, linear_hom_count

__version__ = "0.1.0"
