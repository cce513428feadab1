import json
import re
import subprocess
import sys
from fractions import Fraction

import pytest

from bellbern.bernoulli import BernoulliCache
from bellbern.cli import main

RATIONAL = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?")


def run(capsys, *argv, **kw):
    code = main(list(argv), **kw)
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_bell_symbolic(capsys):
    assert run(capsys, "bell", "--r", "2")[:2] == (0, "x1^2 + x2")
    assert run(capsys, "bell", "--r", "0")[:2] == (0, "1")
    code, out, _ = run(capsys, "bell", "--r", "4")
    assert out == "x1^4 + 6*x1^2*x2 + 4*x1*x3 + 3*x2^2 + x4"


def test_bell_latex(capsys):
    code, out, _ = run(capsys, "bell", "--r", "3", "--format", "latex")
    assert out == "x_1^3 + 3x_1x_2 + x_3"
    code, out, _ = run(capsys, "bell", "--r", "12", "--format", "latex")
    assert out.startswith("x_1^{12} + ") and out.endswith("x_{12}")


def test_bell_eval(capsys):
    assert run(capsys, "bell", "--r", "3", "--eval", "1,1,1")[:2] == (0, "5")
    assert run(capsys, "bell", "--r", "2", "--eval", "-1/2,-1/12")[:2] == (0, "1/6")


def test_bell_json(capsys):
    code, out, _ = run(capsys, "bell", "--r", "3", "--format", "json")
    doc = json.loads(out)
    assert set(doc) == {"op", "params", "result", "report"}
    assert doc["result"] == [
        {"coefficient": "1", "exponents": [3]},
        {"coefficient": "3", "exponents": [1, 1]},
        {"coefficient": "1", "exponents": [0, 0, 1]},
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ["bell", "--r", "31"],
        ["bell", "--r", "3", "--eval", "1,2"],
        ["bell", "--r", "x"],
        ["bell", "--r", "2", "--eval", "0.5,1"],
        ["bernoulli", "--n", "-1"],
        ["gbernoulli", "--n", "2", "--alpha", "1/0"],
        ["verify", "--identity", "1.1", "--max", "3"],
        ["verify", "--identity", "3.5", "--max", "100000"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_bernoulli_table(capsys):
    assert run(capsys, "bernoulli", "--n", "0")[1] == "0  1"
    assert run(capsys, "bernoulli", "--n", "4")[1].endswith("-1/30")
    assert run(capsys, "bernoulli", "--n", "12")[1].endswith("-691/2730")
    doc = json.loads(run(capsys, "bernoulli", "--n", "12", "--format", "json")[1])
    assert doc["result"][-1] == "-691/2730" and len(doc["result"]) == 13
    assert all(RATIONAL.fullmatch(v) for v in doc["result"])
    latex = run(capsys, "bernoulli", "--n", "2", "--format", "latex")[1]
    assert latex.splitlines()[1] == r"B_1 = -\frac{1}{2}"


@pytest.mark.parametrize("n, alpha, value", [("2", "2", "5/6"), ("5", "1", "0"), ("0", "7/3", "1")])
def test_gbernoulli(capsys, n, alpha, value):
    assert run(capsys, "gbernoulli", "--n", n, "--alpha", alpha)[:2] == (0, value)
    assert run(capsys, "gbernoulli", "--n", n, "--alpha", alpha, "--oracle")[:2] == (0, value)


def test_gbernoulli_both(capsys):
    code, out, _ = run(capsys, "gbernoulli", "--n", "6", "--alpha=-1/2", "--both", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["report"]["agree"] is True
    assert doc["report"]["bell"] == doc["report"]["oracle"] == doc["result"]


def test_gbernoulli_both_disagreement_exits_1(capsys):
    code, out, _ = run(capsys, "gbernoulli", "--n", "3", "--alpha", "2", "--both", cache=BernoulliCache({2: Fraction(1, 5)}))
    assert code == 1 and "agree: no" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--identity", "3.5", "--max", "30"],
        ["verify", "--identity", "4.1", "--max", "20"],
        ["verify", "--identity", "2.2", "--max", "10", "--seed", "42"],
        ["verify", "--identity", "3.7", "--max", "60"],
        ["verify", "--identity", "3.1", "--max", "20"],
        ["verify", "--identity", "2.3", "--max", "10", "--seed", "5"],
        ["verify", "--identity", "2.5", "--max", "6", "--seed", "5"],
        ["verify", "--identity", "2.6", "--max", "5", "--seed", "5"],
    ],
)
def test_verify_passes(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and "PASS" in out


def test_verify_corrupted_table(capsys):
    cache = BernoulliCache({4: Fraction(-1, 31)})
    code, out, _ = run(capsys, "verify", "--identity", "3.5", "--max", "30", "--format", "json", cache=cache)
    assert code == 1
    doc = json.loads(out)
    assert doc["result"] == "fail"
    cx = doc["report"]["counterexample"]
    assert cx["index"] == 4 and cx["lhs"] == "-1/31"
    assert RATIONAL.fullmatch(cx["rhs"])


def test_determinism_and_out_file(capsys, tmp_path):
    argv = ["verify", "--identity", "2.6", "--max", "5", "--seed", "99", "--format", "json"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
    target = tmp_path / "report.json"
    code = main([*argv, "--out", str(target)])
    stdout = capsys.readouterr().out
    assert code == 0 and target.read_bytes() == stdout.encode()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bellbern", "gbernoulli", "--n", "2", "--alpha", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "5/6\n"
    proc = subprocess.run([sys.executable, "-m", "bellbern", "bell"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2
