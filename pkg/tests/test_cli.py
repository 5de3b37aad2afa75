import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from yfgraph.cli import main

from example_tables import F_21221_Z0, F_TABLES


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestLevel:
    def test_level_2(self):
        code, out, _ = run("level", "2", "--format=csv")
        assert code == 0
        assert [r["word"] for r in csv_rows(out)] == ["11", "2"]

    def test_level_4(self):
        code, out, _ = run("level", "4", "--format=json")
        doc = json.loads(out)
        assert doc["schema"] == "yfgraph/1"
        assert len(doc["rows"]) == 5
        assert {r["word"]: r["d"] for r in doc["rows"]}["22"] == "3"

    def test_level_0(self):
        code, out, _ = run("level", "0", "--format=csv")
        assert [r["word"] for r in csv_rows(out)] == ["e"]

    def test_invalid_n(self):
        code, _, err = run("level", "-1")
        assert code == 2
        code, _, _ = run("level", "x")
        assert code == 2


class TestCount:
    def test_both(self):
        code, out, err = run("count", "e", "22", "--method=both", "--format=json")
        assert code == 0
        doc = json.loads(out)
        assert [r["count"] for r in doc["rows"]] == ["3", "3"]
        assert doc["equal"] is True
        assert "brute:" in err and "closed:" in err

    def test_single(self):
        code, out, _ = run("count", "1", "21", "--format=csv")
        assert csv_rows(out)[0]["count"] == "2"

    def test_lower_rank(self):
        code, out, _ = run("count", "22", "11", "--format=csv")
        assert code == 0
        assert csv_rows(out)[0]["count"] == "0"

    def test_big_count_is_decimal_string(self):
        code, out, _ = run("count", "e", "2" * 20, "--format=json")
        assert json.loads(out)["rows"][0]["count"] == "319830986772877770815625"

    def test_brute_refused_at_scale(self):
        code, _, err = run("count", "e", "2" * 20, "--method=brute")
        assert code == 3
        assert "exceeds" in err

    def test_parse_error(self):
        assert run("count", "3", "21")[0] == 2


class TestFtable:
    def test_grid_21(self):
        code, out, _ = run("ftable", "21", "--format=json")
        rows = json.loads(out)["rows"]
        assert [r["values"] for r in rows] == F_TABLES["21"]

    def test_empty_word(self):
        code, out, _ = run("ftable", "e", "--format=csv")
        assert out.splitlines() == ["z,y=0", "0,1"]

    def test_example_row(self):
        code, out, _ = run("ftable", "21221", "--z=0", "--format=csv")
        (row,) = csv_rows(out)
        assert [row[f"y={y}"] for y in range(9)] == F_21221_Z0

    def test_z_out_of_range(self):
        assert run("ftable", "21", "--z=5")[0] == 3

    def test_approx_digits(self):
        code, out, _ = run("ftable", "21", "--z=0", "--format=csv", "--approx-digits=4")
        assert out.splitlines()[1] == "0,0.3333,-0.5,0,0.1667"


class TestMeasure:
    def test_finite_stage(self):
        code, out, _ = run("measure", "finite:21221", "4", "--m=6", "--format=csv")
        assert code == 0
        rows = csv_rows(out)
        assert len(rows) == 5
        assert sum(Fraction(r["mu_lo"]) for r in rows) == 1
        assert all(r["mu_lo"] == r["mu_hi"] for r in rows)

    def test_level_zero_limit(self):
        code, out, _ = run("measure", "geometric:1", "0", "--limit", "--format=json")
        doc = json.loads(out)
        assert doc["rows"][0]["mu"] == {"lo": "1", "hi": "1"}

    def test_limit_enclosure(self):
        code, out, _ = run("measure", "geometric:1", "3", "--tol=1/1000000", "--format=json")
        doc = json.loads(out)
        for row in doc["rows"]:
            lo, hi = Fraction(row["mu"]["lo"]), Fraction(row["mu"]["hi"])
            assert 0 <= lo <= hi <= 1
            assert hi - lo <= Fraction(1, 10**6)
        assert Fraction(doc["pi_w"]["lo"]) <= Fraction(doc["pi_w"]["hi"])

    def test_non_positive_word(self):
        code, out, err = run("measure", "const:0", "3", "--limit", "--format=csv")
        assert code == 3
        assert "not a positive boundary" in err
        rows = csv_rows(out)
        assert len(rows) == 3
        assert sum(Fraction(r["mu_lo"]) for r in rows) == 1
        assert all(r["in_R"] == "" for r in rows)

    def test_bad_spec(self):
        assert run("measure", "spiral:2", "3")[0] == 2

    def test_bad_delta(self):
        assert run("measure", "geometric:1", "3", "--delta=1")[0] == 3

    def test_stage_too_short(self):
        assert run("measure", "ones", "5", "--m=2")[0] == 3


class TestConcentrate:
    def test_columns(self):
        code, out, _ = run("concentrate", "geometric:1", "--delta=1/2", "--n-from=4", "--n-to=8")
        assert code == 0
        header = out.splitlines()[0]
        assert header == "n,pbar_mass_lo,pbar_mass_hi,bound"
        rows = csv_rows(out)
        assert [int(r["n"]) for r in rows] == [4, 5, 6, 7, 8]
        for r in rows:
            assert Fraction(r["pbar_mass_lo"]) <= Fraction(r["pbar_mass_hi"])

    def test_reversed_range(self):
        code, _, err = run("concentrate", "geometric:1", "--n-from=5", "--n-to=4")
        assert code == 2

    def test_refusal(self):
        code, _, err = run("concentrate", "const:0", "--n-from=1", "--n-to=3")
        assert code == 3
        assert "positive boundary" in err

    def test_budget_emits_partial(self):
        code, out, err = run("concentrate", "geometric:1", "--n-from=1", "--n-to=20", "--budget=0")
        assert code == 3
        assert out.splitlines() == ["n,pbar_mass_lo,pbar_mass_hi,bound"]


@pytest.mark.parametrize(
    "argv",
    [
        ["level", "6"],
        ["count", "e", "2121", "--method=both", "--format=json"],
        ["ftable", "1111", "--format=csv"],
        ["measure", "geometric:1", "4", "--format=json"],
        ["concentrate", "geometric:1", "--n-from=2", "--n-to=6"],
    ],
)
def test_deterministic_subprocess(argv):
    cmd = [sys.executable, "-m", "yfgraph", *argv]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout


def test_help_lists_subcommands():
    out = subprocess.run(
        [sys.executable, "-m", "yfgraph", "--help"], capture_output=True, text=True, check=True
    ).stdout
    for name in ("level", "count", "ftable", "measure", "concentrate"):
        assert name in out
