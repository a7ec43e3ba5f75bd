import json
from io import StringIO
from os.path import dirname, join

import pytest

from affwreath.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run

LEVEL_TWO = join(dirname(__file__), "clifford-level-two.yaml")


def _run(*argv):
    out, err = StringIO(), StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_algebra_verify():
    code, out, _ = _run("algebra", "verify", "clifford")
    assert code == EXIT_OK
    assert "theta: 2" in out
    assert "double_dual: True" in out


def test_algebra_verify_json():
    code, out, _ = _run("algebra", "verify", "taft:q=3", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["theta"] == 3
    assert data["conductor"] == 3


def test_mul():
    code, out, _ = _run("mul", "--algebra", "trivial", "--n", "2",
                        "s[2,1]", "x1")
    assert code == EXIT_OK
    assert out == "x2*s[2,1] - 1\n"

    code, out, _ = _run("mul", "--n", "2", "--json", "s1", "x1")
    assert json.loads(out) == {"product": "x2*s[2,1] - 1"}


def test_normal_form():
    code, out, _ = _run("nf", "--algebra", "clifford", "--n", "2", "s1*x1")
    assert code == EXIT_OK
    assert out == "x2*s[2,1] - b(c,c) - 1\n"


def test_algebra_queries():
    code, out, _ = _run("grdim", "--algebra", "dual_numbers", "--n", "1")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "counts:   1 0 2 0 2"

    code, out, _ = _run("dual-basis", "--algebra", "dual_numbers")
    assert out.splitlines() == ["1^vee = z", "z^vee = 1"]

    code, out, _ = _run("nakayama", "--algebra", "clifford")
    assert out.splitlines() == ["theta = 2", "psi(1) = 1", "psi(c) = -c"]

    code, out, _ = _run("center", "--n", "2", "--degree", "1")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 2

    code, out, _ = _run("jm", "--n", "3", "--k", "3")
    assert out == "s[3,2,1] + s[1,3,2]\n"


def test_suite():
    argv = ("suite", "--n", "2", "--algebra", "clifford", "--seed", "7",
            "--instances", "2")
    code, out, _ = _run(*argv)
    assert code == EXIT_OK
    assert out.splitlines()[0] == "suite Cl n=2 seed=7"
    assert all(not line.startswith("FAIL") for line in out.splitlines())
    assert _run(*argv)[1] == out


def test_suite_with_parameters():
    code, out, _ = _run("suite", "--n", "1", "--params", LEVEL_TWO,
                        "--only", "cyclotomic_basis",
                        "--only", "cyclotomic_frobenius",
                        "--instances", "3")
    assert code == EXIT_OK
    assert out.splitlines()[1:] == [
        "PASS cyclotomic_basis (3 instances)",
        "PASS cyclotomic_frobenius (3 instances)",
    ]


def test_cyclotomic():
    code, out, _ = _run("cyclotomic", "gram", "--params", LEVEL_TWO,
                        "--n", "1")
    assert code == EXIT_OK
    assert out == "Gram matrix 4x4, rank 4\n"

    code, out, _ = _run("cyclotomic", "basis", "--params", LEVEL_TWO,
                        "--n", "1")
    assert out.splitlines()[0] == "dimension 4"

    code, out, _ = _run("cyclotomic", "nakayama", "--params", LEVEL_TWO,
                        "--n", "1", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["holds"] is True
    assert data["images"]["c_1"] == "b(c)"


@pytest.mark.parametrize("argv", [
    (),
    ("mul",),
    ("frobnicate",),
    ("mul", "--n", "two", "x1", "x1"),
    ("mul", "--algebra", "zigzag", "--n", "2", "x1", "x1"),
    ("mul", "--n", "2", "x1", "s3"),
    ("cyclotomic", "gram", "--params", "clifford", "--n", "1"),
])
def test_usage_errors(argv):
    code, out, err = _run(*argv)
    assert code == EXIT_USAGE
    assert out == ""
    assert err


def test_failed_checks_exit_with_one(tmpdir):
    spec = tmpdir.join("degenerate.yaml")
    spec.write("basis: ['1']\ndegrees: [0]\nparities: [0]\n"
               "mult: [[[1]]]\ntrace: [0]\n")
    code, out, _ = _run("algebra", "verify", str(spec))
    assert code == EXIT_FAILED
    assert out.startswith("FAIL: ")
