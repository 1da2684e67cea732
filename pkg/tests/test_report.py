from fractions import Fraction

import pytest

from hurwitz.partitions import Partition
from hurwitz.report import (
    fit_exponential,
    printed_coefficients,
    resolve_small_degree,
    solve_exact,
    table_csv,
    value_table,
    write_resolution_report,
)


def test_solve_exact():
    assert solve_exact([[0, 1], [2, 0]], [3, 4]) == [2, 3]


def test_fit_recovers_coefficients():
    values = [Fraction(1, 3) * 4 ** (2 * g) - 5 * 1 ** (2 * g) for g in range(2)]
    assert fit_exponential(values, [4, 1], 0) == [Fraction(1, 3), -5]


def test_printed_coefficients_degree5():
    assert printed_coefficients("deg5") == [
        Fraction(1, 7200), Fraction(-1, 288), Fraction(1, 450), Fraction(-1, 72),
        Fraction(1, 18), Fraction(1, 12), Fraction(-5, 9),
    ]


def test_value_table_csv():
    table = value_table(2, 1)
    assert table_csv(table) == 'profile,g=0,g=1\n2,1/2,1/2\n"1,1",1/2,1/2\n'


def test_resolution_degree5_ties():
    res = resolve_small_degree("deg5", 3)
    assert res.matches == [Partition([2, 1, 1, 1]), Partition([1] * 5)]
    assert all(p == f for _, p, f in res.diagnosis)


def test_resolution_degree6_diagnosis():
    res = resolve_small_degree("deg6", 3)
    assert res.matches == []
    assert res.closest == Partition([2, 1, 1, 1, 1])
    differing = [(b, p, f) for b, p, f in res.diagnosis if p != f]
    assert differing == [(6, Fraction(1, 2592), Fraction(7, 2592))]
    assert "formula" in res.comparison_table()


def test_report_files(tmp_path):
    write_resolution_report(tmp_path, gmax=2)
    md = (tmp_path / "resolution.md").read_text()
    assert "exact matches: (2,1,1,1), (1,1,1,1,1)" in md
    assert "closest profile: (2,1,1,1,1)" in md
    assert (tmp_path / "resolution.png").read_bytes()[:4] == b"\x89PNG"
    rows = (tmp_path / "resolution.csv").read_text().splitlines()
    assert rows[0] == "formula,profile,genus,formula_value,backend_value,match"
    assert len(rows) == 1 + 7 * 3 + 11 * 3
