from fractions import Fraction

import pytest

from quasihom import closed_form as cf
from quasihom.errata import (
    as_printed_term, errata_csv, errata_rows, quasi_complete_printed,
    quasi_complete_printed_binomial, quasi_complete_printed_factorial, summand_deltas,
)


def test_literal_values():
    assert as_printed_term("path", 4, 3, 3) == 2
    assert as_printed_term("path", 4, 3, 1) == 6
    assert as_printed_term("cycle", 4, 4, 1) == 32


def test_literal_and_counted_agree_at_forced_values():
    for n in range(4, 9):
        assert as_printed_term("path", n, 5, n - 1) == cf.bad_term_path(n, 5, n - 1)
        assert as_printed_term("cycle", n, 5, n) == cf.bad_term_cycle(n, 5, n)


def test_deltas_confined_to_known_summands():
    for n in range(4, 10):
        for m in range(3, 7):
            for k in range(1, n - 1):
                path = summand_deltas("path", n, m, k)
                cycle = summand_deltas("cycle", n, m, k)
                assert not path[3]
                assert not (cycle[0] or cycle[1] or cycle[3])


def test_half_integer_survives():
    # the 1/2 in front of the first path summand can leave a fraction
    values = [as_printed_term("path", n, m, k) for n in range(4, 9) for m in range(3, 6)
              for k in range(1, n - 1)]
    assert all(isinstance(v, Fraction) for v in values)


def test_quasi_complete_forms():
    for n in range(3, 8):
        for m in range(n + 2, 12):
            assert quasi_complete_printed_binomial(n, m) == quasi_complete_printed_factorial(n, m)
    assert quasi_complete_printed(3, 4) != cf.hom_quasi_complete(3, 4)
    assert quasi_complete_printed(4, 4) == cf.hom_quasi_complete(4, 4)
    with pytest.raises(ValueError):
        quasi_complete_printed_factorial(4, 5)


def test_report_contains_known_row():
    rows = errata_rows([4], [4], [3], [3, 4])
    text = errata_csv(rows)
    lines = text.split("\n")
    assert lines[0] == "family,n,m,k,printed_value,normative_value,oracle_value"
    assert "path,4,3,1,6,10,10" in lines
    assert "\r" not in text
    assert all(r.consistent for r in rows)
    assert any(r.family == "quasi-complete" and r.k is None for r in rows)
