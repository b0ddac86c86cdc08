import json
import subprocess
import sys
from pathlib import Path

import pytest

from qcumulative.cli import main
from qcumulative.core import is_cumulative
from qcumulative.enumeration import brute_count

DATA = Path(__file__).parent / "data"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_plain(capsys):
    code, out, _ = run_cli(capsys, "count", "--partition", "3,1,1", "--modulus", "3")
    assert code == 0
    assert out == "2\n"


def test_count_json(capsys):
    code, out, _ = run_cli(capsys, "count", "--partition", "3,1,1", "--modulus", "3", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record == {"partition": [3, 1, 1], "modulus": 3, "c": "2", "nonzero": True}


def test_count_empty_partition(capsys):
    code, out, _ = run_cli(capsys, "count", "--partition", "", "--modulus", "3")
    assert code == 0 and out == "0\n"


def test_count_accepts_unsorted_with_flag(capsys):
    code, out, _ = run_cli(capsys, "count", "--partition", "1,1,3", "--modulus", "3", "--sort")
    assert code == 0 and out == "2\n"


def test_exists_negative(capsys):
    code, out, _ = run_cli(capsys, "exists", "--partition", "1,1,1,1", "--prime", "3")
    assert code == 1
    assert "(i) pass" in out
    assert "(ii) fail: max 4 > 2" in out
    assert "nonzero: false" in out


def test_exists_positive(capsys):
    code, out, _ = run_cli(capsys, "exists", "--partition", "2,1,1", "--prime", "3")
    assert code == 0
    assert "(i) pass" in out
    assert "(ii) pass: max 2 <= 3 (a=1, b=1)" in out
    assert "nonzero: true" in out


def test_exists_size_divisible(capsys):
    code, out, _ = run_cli(capsys, "exists", "--partition", "2,1", "--prime", "3")
    assert code == 1
    assert "(i) fail: 3 divides |lambda| = 3" in out


def test_exists_json(capsys):
    code, out, _ = run_cli(capsys, "exists", "--partition", "5,5,2", "--prime", "5", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["nonzero"] is True and record["size_divisible"] is False
    assert {"a": 2, "b": 3, "scaled_weight": 4, "passed": True} in record["maximizers"]


def test_witness(capsys):
    code, out, _ = run_cli(capsys, "witness", "--partition", "5,5,2", "--modulus", "5")
    assert code == 0 and out == "2,5,5\n"
    code, out, _ = run_cli(capsys, "witness", "--partition", "1,1,1,1", "--modulus", "3")
    assert code == 1 and out == "none\n"


def test_witness_json(capsys):
    code, out, _ = run_cli(capsys, "witness", "--partition", "3,1,1", "--modulus", "3", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["witness"] == [1, 1, 3]
    assert record["method"] == "guarded-construction"


def test_enumerate(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--partition", "3,1,1", "--modulus", "3")
    assert code == 0
    assert out.splitlines() == ["1,1,3", "1,3,1"]
    code, out, _ = run_cli(capsys, "enumerate", "--partition", "1,1,1,1", "--modulus", "3")
    assert code == 0 and out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ("count", "--partition", "3,x,1", "--modulus", "3"),
        ("count", "--partition", "3,0,1", "--modulus", "3"),
        ("count", "--partition", "1,3", "--modulus", "3"),  # unsorted without --sort
        ("count", "--partition", "3,1", "--modulus", "0"),
        ("exists", "--partition", "3,1", "--prime", "4"),  # composite
        ("witness", "--partition", "3,1", "--modulus", "1"),
        ("sweep", "--n", "-1", "--modulus", "3"),
        ("check", "--max-n", "3", "--moduli", "2,x"),
        ("count", "--partition", "3,1"),  # missing --modulus
        ("nonsense",),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code = main(list(argv))
    capsys.readouterr()  # argparse noise
    assert code == 2


def test_sweep_csv_rows_validate_against_brute_force(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--n", "7", "--modulus", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "partition;modulus;c;nonzero;witness"
    assert len(lines) == 1 + 15  # p(7) = 15
    for line in lines[1:]:
        part_field, modulus, c, nonzero, witness_field = line.split(";")
        lam = tuple(int(p) for p in part_field.split())
        assert int(modulus) == 3
        oracle = brute_count(lam, 3)
        assert int(c) == oracle
        assert (nonzero == "true") == (oracle > 0)
        if nonzero == "true":
            arranged = tuple(int(p) for p in witness_field.split())
            assert tuple(sorted(arranged, reverse=True)) == lam
            assert is_cumulative(arranged, 3)
        else:
            assert witness_field == ""


def test_sweep_json_records(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--n", "6", "--modulus", "3", "--format", "json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 11  # p(6) = 11
    for record in records:
        assert record["c"] == "0" and record["nonzero"] is False  # 3 divides 6
        assert "witness" not in record
        assert record["conditions"]["size_divisible"] is True


def test_sweep_matches_golden_file(capsys):
    for n, name in ((6, "sweep_n6_q3.csv"), (7, "sweep_n7_q3.csv")):
        first = run_cli(capsys, "sweep", "--n", str(n), "--modulus", "3", "--format", "csv")[1]
        second = run_cli(capsys, "sweep", "--n", str(n), "--modulus", "3", "--format", "csv")[1]
        assert first == second  # byte-stable across runs
        assert first == (DATA / name).read_text()


def test_check_clean(capsys):
    code, out, _ = run_cli(capsys, "check", "--max-n", "6")
    assert code == 0
    assert out.splitlines()[-1].startswith("checked=")
    assert out.splitlines()[-1].endswith("mismatches=0")


def test_check_primes_only(capsys):
    code, out, _ = run_cli(capsys, "check", "--max-n", "5", "--moduli", "2,3,4,6", "--primes-only")
    assert code == 0
    assert "mismatches=0" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qcumulative", "count", "--partition", "3,1,1", "--modulus", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "2\n"
