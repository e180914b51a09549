import json
import os
import subprocess
import sys

import pytest

from planar_count.cli import main
from planar_count.oracle import CLAIMS

CLEAN = [c for c in CLAIMS if c != "factorised_walks_doubleprime"]


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr().out
    return code, out


def parse(out):
    return json.loads(out)


@pytest.mark.parametrize(
    "args, count",
    [
        (["--n", "2", "--r", "2", "--d", "2", "--method", "walks"], "3"),
        (["--n", "1", "--r", "2", "--d", "2", "--method", "tableaux"], "1"),
        (["--n", "0", "--r", "1", "--d", "1", "--method", "brute"], "1"),
    ],
)
def test_count_examples(capsys, args, count):
    code, out = run(capsys, "count", *args)
    assert code == 0
    record = parse(out)
    assert record["count"] == count
    assert set(record) == {"n", "r", "d", "method", "variant", "count"}


@pytest.mark.parametrize("variant", ["matching", "subgraph"])
def test_count_methods_agree(capsys, variant):
    methods = ["brute", "walks", "tableaux"] + (["chamber"] if variant == "matching" else [])
    for n, r, d in [(3, 2, 2), (2, 3, 3), (4, 1, 2), (0, 2, 0), (2, 2, 0)]:
        counts = set()
        for method in methods:
            code, out = run(capsys, "count", "--n", str(n), "--r", str(r), "--d", str(d),
                            "--method", method, "--variant", variant)
            assert code == 0
            counts.add(parse(out)["count"])
        assert len(counts) == 1, (n, r, d, counts)


def test_count_formats(capsys):
    _, text = run(capsys, "count", "--n", "2", "--r", "2", "--d", "2", "--format", "text")
    assert text.strip() == "n=2 r=2 d=2 method=walks variant=matching count=3"
    _, csv_out = run(capsys, "count", "--n", "2", "--r", "2", "--d", "2", "--format", "csv")
    assert csv_out.splitlines() == ["n,r,d,method,variant,count", "2,2,2,walks,matching,3"]


@pytest.mark.parametrize(
    "args",
    [
        ["count", "--n", "-1", "--r", "1", "--d", "1"],
        ["count", "--n", "1", "--r", "1"],
        ["count", "--n", "1", "--r", "1", "--d", "1", "--bogus"],
        ["count", "--n", "1", "--r", "1", "--d", "1", "--method", "chamber", "--variant", "subgraph"],
        ["series", "bessel", "--xmax", "4"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(capsys, args):
    with pytest.raises(SystemExit) as exc:
        main(args)
    assert exc.value.code == 2


def test_budget_overflow_exit_3(capsys, monkeypatch):
    assert main(["count", "--n", "1", "--r", "1", "--d", "9"]) == 3
    monkeypatch.setenv("PLANAR_COUNT_BUDGET", "5")
    assert main(["count", "--n", "3", "--r", "2", "--d", "2", "--method", "tableaux"]) == 3
    monkeypatch.delenv("PLANAR_COUNT_BUDGET")
    assert main(["count", "--n", "3", "--r", "2", "--d", "2", "--method", "tableaux", "--budget", "5"]) == 3
    assert "PLANAR_COUNT_BUDGET" not in os.environ


def test_series_examples(capsys):
    code, out = run(capsys, "series", "gessel", "--d", "2", "--xmax", "4")
    assert code == 0
    coeffs = {c["power"]: (c["num"], c["den"]) for c in parse(out)["coefficients"]}
    assert coeffs == {0: ("1", "1"), 2: ("1", "1"), 4: ("1", "2")}
    _, out = run(capsys, "series", "theorem8", "--xmax", "4")
    coeffs = {c["power"]: (c["num"], c["den"]) for c in parse(out)["coefficients"]}
    assert coeffs[0] == ("1", "1") and coeffs[4] == ("1", "4")
    _, out = run(capsys, "series", "gessel", "--d", "1", "--xmax", "2", "--format", "text")
    assert out.splitlines() == ["x^0: 1", "x^2: 1"]
    _, out = run(capsys, "series", "gessel-alt", "--xmax", "4", "--format", "csv")
    assert out.splitlines() == ["power,num,den", "0,1,1", "2,1,1", "4,1,2"]


def test_verify_clean_claims_exit_0(capsys, tmp_path):
    target = tmp_path / "report.csv"
    code, out = run(capsys, "verify", "--max-rn", "4", "--claims", *CLEAN, "--format", "csv", "--out", str(target))
    assert code == 0
    assert parse(out)["failed"] == 0
    assert target.read_text().startswith("claim,params,method,value,pass\n")


def test_verify_corrupted_exit_1(capsys):
    code, out = run(capsys, "verify", "--max-rn", "4", "--claims", *CLEAN, "--corrupt", "rsk")
    assert code == 1
    assert parse(out)["summary"]["failed"] == 1


def test_verify_default_reports_interleaved_failures(capsys):
    code, out = run(capsys, "verify")
    report = parse(out)
    failing = {row["claim"] for row in report["rows"] if not row["pass"]}
    assert failing == {"factorised_walks_doubleprime"}
    assert code == 1


@pytest.mark.xfail(strict=True, reason="interleaved flavor of the two-dimensional identity does not hold; see notes")
@pytest.mark.parametrize("args", [[], ["--max-rn", "4"]])
def test_verify_exit_0(capsys, args):
    code, _ = run(capsys, "verify", *args)
    assert code == 0


def test_output_is_byte_deterministic():
    cmd = [sys.executable, "-m", "planar_count", "verify", "--max-rn", "3", "--max-d", "2", "--xmax", "4"]
    first = subprocess.run(cmd, capture_output=True).stdout
    second = subprocess.run(cmd, capture_output=True).stdout
    assert first == second and first
    cmd = [sys.executable, "-m", "planar_count", "series", "theorem8", "--xmax", "8"]
    assert subprocess.run(cmd, capture_output=True).stdout == subprocess.run(cmd, capture_output=True).stdout
