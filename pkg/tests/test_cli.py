"""CLI surface: output schemas, determinism, exit codes."""

import json
import subprocess
import sys

import pytest

from cyclolcm import cli as cli_module
from cyclolcm.cli import TRIALS_CSV_HEADER, main
from cyclolcm.growth import GROWTH_CSV_HEADER
from cyclolcm.verify import CheckResult


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "cyclolcm", *args],
        capture_output=True,
        text=True,
        timeout=300,
    )


def test_constant_known_values():
    out = run_cli("constant", "--pattern", "--+")
    assert out.returncode == 0
    assert out.stdout.split()[0] == "13/4"
    out = run_cli("constant", "--pattern", "-")
    assert out.stdout.split()[0] == "3"


def test_constant_explain_includes_cover():
    out = run_cli("constant", "--pattern", "+-", "--explain")
    obj = json.loads(out.stdout)
    assert obj["schema"] == 1
    assert obj["C"] == {"num": 3, "den": 1}
    assert obj["cover"]["modulus"] == 4
    thetas = {c["t"]: (c["theta"]["num"], c["theta"]["den"]) for c in obj["cover"]["classes"]}
    assert thetas == {1: (1, 2), 2: (2, 1), 3: (1, 2), 4: (1, 1)}


def test_constant_usage_errors():
    assert run_cli("constant", "--pattern", "").returncode == 1
    out = run_cli("constant", "--pattern", "+?")
    assert out.returncode == 1
    assert "position 2" in out.stderr


def test_table_period_one():
    out = run_cli("table", "--max-period", "1")
    assert out.returncode == 0
    lines = out.stdout.strip().split("\n")
    assert len(lines) == 2
    assert lines[0].startswith("-\t3")
    assert lines[1].startswith("+\t4")


def test_table_period_five_contains_all_reference_rows():
    from cyclolcm.verify import REFERENCE_CONSTANTS

    out = run_cli("table", "--max-period", "5")
    lines = out.stdout.strip().split("\n")
    assert len(lines) == 62
    assert any(line.startswith("-++++\t2219/576") for line in lines)
    rows = {line.split("\t")[0]: line.split("\t")[1] for line in lines}
    for word, expected in REFERENCE_CONSTANTS.items():
        assert rows[word] == str(expected)


def test_table_range_error():
    assert run_cli("table", "--max-period", "9").returncode == 1
    assert run_cli("table", "--max-period", "0").returncode == 1


def test_growth_csv_and_cross_engine():
    out = run_cli(
        "growth", "--base", "2", "--pattern", "-", "--n-max", "100",
        "--step", "25", "--exact",
    )
    assert out.returncode == 0
    lines = out.stdout.strip().split("\n")
    assert lines[0] == GROWTH_CSV_HEADER
    # last row recomputable by an independent naive lcm fold
    import math

    acc = 1
    power = 1
    for k in range(1, 101):
        power *= 2
        term = power - 1
        acc = acc // math.gcd(acc, term) * term
    last = lines[-1].split(",")
    assert last[0] == "100"
    assert float(last[1]) == pytest.approx(math.log(acc), rel=1e-10)
    assert "constant=" in out.stderr


def test_growth_usage_errors():
    assert run_cli("growth", "--base", "1", "--pattern", "-", "--n-max", "10").returncode == 1
    out = run_cli(
        "growth", "--base", "2", "--pattern", "-", "--n-max", "5000", "--exact"
    )
    assert out.returncode == 1
    assert "--force-exact" in out.stderr
    # both or neither of --pattern/--random
    assert run_cli("growth", "--base", "2", "--n-max", "10").returncode == 1


def test_growth_deterministic():
    args = ("growth", "--base", "2", "--pattern", "+", "--n-max", "200", "--step", "50")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.stdout == b.stdout and a.stderr == b.stderr


def test_random_csv_header_and_determinism():
    args = ("random", "--base", "2", "--n", "50", "--trials", "8", "--seed", "0x2A")
    a = run_cli(*args)
    assert a.returncode == 0
    lines = a.stdout.strip().split("\n")
    assert lines[0] == TRIALS_CSV_HEADER
    assert len(lines) == 9
    summary = json.loads(a.stderr.strip().split("\n")[-1])
    assert summary["schema"] == 1
    assert summary["trials"] == 8
    b = run_cli(*args)
    assert a.stdout == b.stdout and a.stderr == b.stderr
    # hex and decimal seeds agree
    c = run_cli("random", "--base", "2", "--n", "50", "--trials", "8", "--seed", "42")
    assert c.stdout == a.stdout


def test_random_json_format():
    out = run_cli(
        "random", "--n", "30", "--trials", "4", "--seed", "5", "--format", "json"
    )
    obj = json.loads(out.stdout)
    assert obj["schema"] == 1
    assert len(obj["trials"]) == 4
    assert set(obj["summary"]) == {
        "n", "trials", "mean_X", "var_X", "mean_ratio", "theory_ratio", "abs_gap",
    }


def test_expect_values():
    out = run_cli("expect", "--n", "1", "--exact")
    assert out.stdout.strip() == "1"
    out = run_cli("expect", "--n", "3", "--exact")
    assert out.stdout.strip() == "19/4"
    out = run_cli("expect", "--n", "3")
    assert float(out.stdout) == pytest.approx(4.75)
    assert run_cli("expect", "--n", "3000", "--exact").returncode == 1


def test_verify_table1():
    out = run_cli("verify", "--suite", "table1")
    assert out.returncode == 0
    lines = out.stdout.strip().split("\n")
    assert len(lines) == 52
    assert all(line.startswith("PASS") for line in lines)


def test_verify_unknown_suite():
    assert run_cli("verify", "--suite", "nope").returncode == 1


@pytest.mark.parametrize("suite", ["cover-oracle", "cyclotomic", "stochastic-oracle"])
def test_verify_other_suites_pass(suite):
    out = run_cli("verify", "--suite", suite)
    assert out.returncode == 0
    assert all(line.startswith("PASS") for line in out.stdout.strip().split("\n"))
    if suite == "cover-oracle":
        assert len(out.stdout.strip().split("\n")) == 62


def test_verify_failure_exits_two(monkeypatch, capsys):
    # exercise the exit-code contract without breaking real suites
    monkeypatch.setitem(
        cli_module.SUITES, "stub", lambda: [CheckResult("always-fails", False, "x")]
    )
    assert main(["verify", "--suite", "stub"]) == 2
    captured = capsys.readouterr()
    assert "FAIL always-fails" in captured.out


def test_invalid_seed_rejected():
    assert run_cli("random", "--n", "10", "--trials", "2", "--seed", "zzz").returncode == 1
    assert run_cli(
        "random", "--n", "10", "--trials", "2", "--seed", str(2**64)
    ).returncode == 1
