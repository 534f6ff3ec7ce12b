import json
from fractions import Fraction

import pytest

import zeta2k.bench as bench
from zeta2k.bench import BackendMismatchError, BenchReport, bench_compare


def test_structural_two_rows_per_k():
    report = bench_compare([10], reps=3)
    assert len(report.rows) == 2
    assert {row.backend for row in report.rows} == {"recursive", "bernoulli"}
    for row in report.rows:
        assert row.k == 10
        assert row.wall_time_ns > 0
        assert row.reps == 3
    digits = {row.coeff_digits for row in report.rows}
    assert len(digits) == 1  # same rational, same digit count


def test_single_k1_run():
    report = bench_compare([1], reps=1)
    # c_1 = 1/6: one digit of numerator plus one of denominator
    assert all(row.coeff_digits == 2 for row in report.rows)


def test_rows_cover_every_requested_k():
    report = bench_compare([1, 3, 7], reps=1)
    assert [row.k for row in report.rows] == [1, 1, 3, 3, 7, 7]


def test_csv_header_and_shape():
    report = bench_compare([2], reps=1)
    lines = report.to_csv().splitlines()
    assert lines[0] == "k,backend,wall_time_ns,coeff_digits,reps"
    assert len(lines) == 3
    assert lines[1].startswith("2,recursive,")
    assert lines[2].startswith("2,bernoulli,")


def test_json_rows():
    payload = json.loads(bench_compare([2], reps=1).to_json())
    assert len(payload) == 2
    assert payload[0]["backend"] == "recursive"
    assert set(payload[0]) == {"k", "backend", "wall_time_ns", "coeff_digits", "reps"}


def test_input_validation():
    with pytest.raises(ValueError):
        bench_compare([3], reps=0)
    with pytest.raises(ValueError):
        bench_compare([], reps=1)
    with pytest.raises(ValueError):
        bench_compare([0, 3], reps=1)


def test_mismatch_aborts_report(monkeypatch):
    """Correctness gates timing: a disagreeing backend is a hard error."""

    def broken(k, table):
        return Fraction(1, 7)

    monkeypatch.setattr(bench, "zeta_coeff_via_bernoulli", broken)
    with pytest.raises(BackendMismatchError) as info:
        bench_compare([3], reps=1)
    assert info.value.k == 3


def test_report_is_plain_data():
    report = bench_compare([1], reps=1)
    assert isinstance(report, BenchReport)
    rebuilt = BenchReport(rows=report.rows)
    assert rebuilt.to_csv() == report.to_csv()
