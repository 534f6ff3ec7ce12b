import json
import os
from fractions import Fraction

import pytest

import zeta2k.cli as cli
from zeta2k.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_coeff_plain(capsys):
    assert run(capsys, ["coeff", "-k", "2"]) == (0, "1/90\n", "")
    assert run(capsys, ["coeff", "-k", "1"]) == (0, "1/6\n", "")


def test_coeff_json(capsys):
    code, out, _ = run(capsys, ["coeff", "-k", "6", "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"k": 6, "num": "691", "den": "638512875"}


def test_coeff_rejects_k_zero(capsys):
    code, out, err = run(capsys, ["coeff", "-k", "0"])
    assert code == 2
    assert "usage" in err


def test_eval_known_digit_strings(capsys):
    assert run(capsys, ["eval", "-k", "1", "-d", "10"])[:2] == (0, "1.6449340668\n")
    assert run(capsys, ["eval", "-k", "2", "-d", "10"])[:2] == (0, "1.0823232337\n")


def test_eval_rejects_zero_digits(capsys):
    code, _, err = run(capsys, ["eval", "-k", "1", "-d", "0"])
    assert code == 2
    assert "usage" in err


def test_verify_ok(capsys):
    code, out, _ = run(capsys, ["verify", "--max-k", "20"])
    assert code == 0
    assert out == "OK 20/20\n"


def test_verify_min_scope(capsys):
    assert run(capsys, ["verify", "--max-k", "1"])[:2] == (0, "OK 1/1\n")


def test_verify_reports_fault_injection(capsys, monkeypatch):
    """A corrupted backend must surface as exit 1 naming the failing k."""

    real = cli.zeta_coeff_via_bernoulli

    def broken(k, table):
        if k == 4:
            return Fraction(1, 7)
        return real(k, table)

    monkeypatch.setattr(cli, "zeta_coeff_via_bernoulli", broken)
    code, out, _ = run(capsys, ["verify", "--max-k", "6"])
    assert code == 1
    assert out.startswith("FAIL k=4:")
    assert "mismatch" in out


def test_table_csv(capsys):
    code, out, _ = run(capsys, ["table", "--max-k", "3"])
    assert code == 0
    assert out == "k,num,den\n1,1,6\n2,1,90\n3,1,945\n"


def test_table_json(capsys):
    code, out, _ = run(capsys, ["table", "--max-k", "2", "--format", "json"])
    assert json.loads(out) == [
        {"k": 1, "num": "1", "den": "6"},
        {"k": 2, "num": "1", "den": "90"},
    ]


def test_bernoulli_csv(capsys):
    code, out, _ = run(capsys, ["bernoulli", "--max-index", "2"])
    assert code == 0
    assert out == "m,num,den\n0,1,1\n1,-1,2\n2,1,6\n"


def test_fourier_sweep_layout(capsys):
    code, out, _ = run(capsys, ["fourier", "-k", "2", "-n", "3"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,n,source,value"
    assert len(lines) == 1 + 2 * 3 * 3  # (k,n) pairs x three sources
    assert lines[1].startswith("1,1,closed,")
    sources = {line.split(",")[2] for line in lines[1:]}
    assert sources == {"closed", "recursive", "quadrature"}
    # closed and recursive rows must agree digit for digit
    for i in range(1, len(lines), 3):
        assert lines[i].split(",")[3] == lines[i + 1].split(",")[3]


def test_fourier_values_match_known(capsys):
    _, out, _ = run(capsys, ["fourier", "-k", "1", "-n", "2"])
    rows = [line.split(",") for line in out.splitlines()[1:]]
    n1_closed = float(rows[0][3])
    n2_closed = float(rows[3][3])
    assert abs(n1_closed - 4.0) < 1e-12
    assert abs(n2_closed - 1.0) < 1e-12


def test_bench_csv(capsys):
    code, out, _ = run(capsys, ["bench", "--k-list", "1,2", "--reps", "1"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,backend,wall_time_ns,coeff_digits,reps"
    assert len(lines) == 5


def test_bench_json(capsys):
    code, out, _ = run(capsys, ["bench", "--k-list", "2", "--reps", "2", "--format", "json"])
    payload = json.loads(out)
    assert len(payload) == 2 and payload[0]["reps"] == 2


def test_bench_rejects_bad_k_list(capsys):
    assert run(capsys, ["bench", "--k-list", "0,2"])[0] == 2
    assert run(capsys, ["bench", "--k-list", ""])[0] == 2
    assert run(capsys, ["bench", "--k-list", "2,x"])[0] == 2


def test_bench_mismatch_exits_one(capsys, monkeypatch):
    import zeta2k.bench as bench

    monkeypatch.setattr(bench, "zeta_coeff_via_bernoulli", lambda k, t: Fraction(1, 7))
    code, _, err = run(capsys, ["bench", "--k-list", "2", "--reps", "1"])
    assert code == 1
    assert "disagree" in err


def test_output_writes_file_atomically(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out, _ = run(capsys, ["table", "--max-k", "2", "--output", str(target)])
    assert code == 0
    assert out == ""  # nothing on stdout when writing a file
    assert target.read_text() == "k,num,den\n1,1,6\n2,1,90\n"
    leftovers = [p for p in os.listdir(tmp_path) if p != "table.csv"]
    assert leftovers == []  # no temp files left behind


def test_output_plain_value_gets_newline(capsys, tmp_path):
    target = tmp_path / "c.txt"
    run(capsys, ["coeff", "-k", "2", "--output", str(target)])
    assert target.read_text() == "1/90\n"


def test_missing_subcommand_is_usage_error(capsys):
    assert run(capsys, [])[0] == 2


def test_unknown_flag_is_usage_error(capsys):
    assert run(capsys, ["coeff", "-k", "2", "--bogus"])[0] == 2
