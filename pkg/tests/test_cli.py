import csv
import io
import json
import time
from fractions import Fraction

import pytest
from click.testing import CliRunner

from genlaguerre import Params, Poly
from genlaguerre.cli import cli, main
from genlaguerre.laguerre import Method
from genlaguerre.methods import construct


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, [str(a) for a in args])

    return invoke


def test_coeffs_json(run):
    r = run("coeffs", "--alpha", 1, "--beta", 0, "--q", 1, "--n", 2, "--method", "closed", "--format", "json")
    assert r.exit_code == 0
    assert json.loads(r.output) == {"alpha": 1, "beta": "0", "q": 1, "n": 2, "method": "closed",
                                    "coeffs": ["1", "-2", "1/2"]}


@pytest.mark.parametrize("method", [m.value for m in Method])
def test_coeffs_n0(run, method):
    r = run("coeffs", "--alpha", 2, "--beta", "1/2", "--n", 0, "--method", method)
    assert r.exit_code == 0
    assert json.loads(r.output)["coeffs"] == ["1"]


def test_coeffs_q2_series(run):
    r = run("coeffs", "--alpha", 1, "--beta", 0, "--q", 2, "--n", 2, "--method", "series")
    assert json.loads(r.output)["coeffs"] == ["1", "2"]


def test_coeffs_csv_and_plain(run):
    r = run("coeffs", "--n", 2, "--format", "csv")
    assert list(csv.reader(io.StringIO(r.output))) == [["k", "coeff"], ["0", "1"], ["1", "-2"], ["2", "1/2"]]
    r = run("coeffs", "--n", 2, "--format", "plain")
    assert r.output.strip() == "1 - 2*z + 1/2*z^2"


@pytest.mark.parametrize("args", [
    ("coeffs", "--n", 2, "--q", 2, "--method", "determinant"),
    ("coeffs", "--n", 2, "--q", 2, "--method", "recurrence"),
    ("coeffs", "--n", -1),
    ("coeffs", "--n", 2, "--beta", -1),
    ("coeffs", "--n", 2, "--beta", "x"),
    ("coeffs", "--n", 2, "--alpha", "1.5"),
    ("coeffs", "--n", 2, "--alpha", 0),
    ("coeffs", "--n", 2, "--method", "nope"),
    ("coeffs", "--n", 15, "--method", "composition"),
    ("coeffs", "--bogus"),
    ("eval", "--n", 1, "--z", "1/0"),
    ("eval", "--n", 1, "--z", 1, "--alpha", "1.5"),
    ("eval", "--n", 1, "--z", "abc", "--float"),
    ("table", "--nmax", 3, "--q", 2, "--method", "determinant"),
    ("verify", "--methods", "series,bogus"),
    ("verify", "--alphas", "a"),
    ("verify", "--betas", "-2"),
    ("bench", "--methods", "composition", "--nmax", 15),
    ("bench", "--q", 2, "--methods", "determinant"),
])
def test_usage_errors_exit_2(run, args):
    assert run(*args).exit_code == 2


def test_composition_cap_override(run):
    r = run("coeffs", "--n", 15, "--method", "composition", "--composition-cap", 15)
    assert r.exit_code == 0
    assert Poly.from_strings(json.loads(r.output)["coeffs"]) == construct("closed", Params(1, 0), 15).poly


def test_eval_exact(run):
    assert run("eval", "--alpha", 1, "--beta", 0, "--n", 1, "--z", 1).output.strip() == "0"
    assert run("eval", "--alpha", 1, "--beta", 0, "--n", 2, "--z", 2).output.strip() == "-1"
    r = run("eval", "--alpha", 2, "--beta", "0.5", "--n", 3, "--z", "1/2", "--format", "json",
            "--method", "determinant")
    d = json.loads(r.output)
    assert d["beta"] == "1/2" and d["z"] == "1/2"
    assert Fraction(d["value"]) == construct("series", Params(2, Fraction(1, 2)), 3).poly(Fraction(1, 2))


def test_eval_float(run):
    r = run("eval", "--alpha", 1.5, "--beta", 0, "--n", 3, "--z", 1, "--float", "--format", "json")
    assert r.exit_code == 0
    d = json.loads(r.output)
    assert {"value", "abs_term_sum", "condition"} <= d.keys()
    assert d["abs_term_sum"] >= abs(d["value"])
    r = run("eval", "--alpha", 1.5, "--beta", 0, "--n", 3, "--z", 1, "--float")
    assert [line.split()[0] for line in r.output.splitlines()] == ["value", "abs_term_sum", "condition"]
    r = run("eval", "--n", 1, "--z", 1, "--float", "--format", "json")
    assert json.loads(r.output)["condition"] == "inf"


def test_table(run):
    r = run("table", "--alpha", 3, "--beta", "-1/3", "--nmax", 4, "--method", "recurrence")
    rows = json.loads(r.output)
    assert [row["n"] for row in rows] == [0, 1, 2, 3, 4]
    p = Params(3, Fraction(-1, 3))
    for row in rows:
        assert Poly.from_strings(row["coeffs"]) == construct("closed", p, row["n"]).poly
    r = run("table", "--nmax", 2, "--format", "csv")
    assert r.output.splitlines()[0] == "n,k,coeff"
    assert len(r.output.splitlines()) == 1 + 1 + 2 + 3


@pytest.mark.parametrize("method", [m.value for m in Method])
def test_structured_output_roundtrip(run, method):
    p = Params(2, Fraction(7, 2))
    for n in (0, 3, 7):
        r = run("coeffs", "--alpha", 2, "--beta", "7/2", "--n", n, "--method", method)
        d = json.loads(r.output)
        assert Poly.from_strings(d["coeffs"]) == construct(method, p, n).poly
        assert d["method"] == method and d["beta"] == "7/2"


def test_verify_default_passes(run):
    r = run("verify")
    assert r.exit_code == 0
    d = json.loads(r.output)
    assert d["status"] == "pass" and d["first_discrepancy"] is None
    assert d["points"] == 3 * 4 * 13


def test_verify_detects_injected_fault(run):
    r = run("verify", "--inject-fault", "determinant:2:1/2:7:3")
    assert r.exit_code == 1
    fd = json.loads(r.output)["first_discrepancy"]
    assert fd["alpha"] == 2 and fd["beta"] == "1/2" and fd["n"] == 7 and fd["index"] == 3
    assert fd["pair"] == ["series", "determinant"]
    assert Fraction(fd["actual"]) - Fraction(fd["expected"]) == 1


def test_verify_plain_and_csv(run):
    r = run("verify", "--alphas", 1, "--betas", 0, "--nmax", 3, "--format", "plain")
    assert r.output.startswith("status pass")
    r = run("verify", "--alphas", 1, "--betas", 0, "--nmax", 3, "--format", "csv")
    assert r.output.splitlines()[0] == "alpha,beta,q,n,pair,status"


def test_verify_q3_series_closed(run):
    r = run("verify", "--qs", "3", "--methods", "series,closed", "--nmax", 20)
    assert r.exit_code == 0


def test_verify_q2_series_closed_reports_sign(run):
    # the binomial closed form has (-1)^j where the series has (-1)^(2j): odd powers differ
    r = run("verify", "--qs", "2", "--methods", "series,closed", "--nmax", 20)
    assert r.exit_code == 1
    fd = json.loads(r.output)["first_discrepancy"]
    assert fd["index"] % 2 == 1
    assert Fraction(fd["expected"]) == -Fraction(fd["actual"])


def test_bench_csv(run):
    r = run("bench", "--nmax", 3, "--format", "csv", "--repeat", 1)
    lines = r.output.splitlines()
    assert lines[0] == "method,n,nanos"
    assert len(lines) == 1 + 5 * 4


def test_bench_composition_grows(run):
    r = run("bench", "--nmax", 12, "--methods", "composition", "--format", "json")
    times = [row["nanos"] for row in json.loads(r.output)]
    # 2^(n-1) terms: each step roughly doubles, well above timer noise from n = 6 on
    assert all(b >= a for a, b in zip(times[6:], times[7:]))


def test_bench_closed_recurrence_fast(run):
    t0 = time.perf_counter()
    r = run("bench", "--methods", "closed,recurrence", "--nmax", 30, "--repeat", 1)
    assert r.exit_code == 0
    assert time.perf_counter() - t0 < 10


def test_main_returns_exit_codes():
    assert main(["coeffs", "--n", "1"]) == 0
    assert main(["coeffs", "--n", "1", "--q", "2", "--method", "determinant"]) == 2
    assert main(["verify", "--alphas", "1", "--betas", "0", "--nmax", "3",
                 "--inject-fault", "series:1:0:2:0"]) == 1
