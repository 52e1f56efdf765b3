import json
import subprocess
import sys

import pytest

from weldbraid.cli import main
from weldbraid.galgebra import RepMatrix
from weldbraid.gassner import gassner_evaluated, iterate


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gassner_text(capsys):
    code, out, _ = run(capsys, "gassner", "--n", "3", "--i", "1", "--j", "2", "--mode", "evaluated")
    assert code == 0
    assert out.splitlines()[0] == "[ t2  1 - t1  0 ]"


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "--group", "vb", "--n", "3", "--rep", "burau-evaluated")[0] == 0
    assert run(capsys, "verify", "--group", "wb", "--n", "3", "--rep", "burau-evaluated")[0] == 1
    assert run(capsys, "verify", "--group", "wb", "--n", "3", "--rep", "burau-evaluated", "--subst", "b=1")[0] == 0


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--group", "pwb", "--n", "3", "--rep", "gassner-symbolic", "--json")
    data = json.loads(out)
    assert code == 0 and data["all_pass"] and len(data["relators"]) == 9


def test_iterate_matches_library(capsys):
    code, out, _ = run(capsys, "iterate", "--n", "4", "--r", "2", "--i", "1", "--j", "2")
    assert code == 0 and out.rstrip("\n") == iterate(4, 2, 1, 2).render()
    code, out, _ = run(capsys, "iterate", "--n", "4", "--r", "2", "--i", "1", "--j", "2", "--reduce", "4,8,12", "--json")
    assert RepMatrix.from_json(json.loads(out)).size == 9


@pytest.mark.parametrize(
    "argv",
    [
        ["gassner", "--n", "3", "--i", "2", "--j", "1", "--mode", "symbolic", "--json"],
        ["gassner", "--n", "3", "--i", "2", "--j", "1", "--json"],
        ["burau", "--n", "3", "--word", "s1 T2", "--mode", "symbolic", "--json"],
        ["burau", "--n", "3", "--word", "s1 T2", "--subst", "b=a", "--json"],
        ["foxmat", "--n", "3", "--elem", "q1.2 x3", "--json"],
        ["iterate", "--n", "3", "--r", "2", "--i", "2", "--j", "1", "--json"],
    ],
)
def test_matrix_json_round_trip_and_determinism(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    m = RepMatrix.from_json(json.loads(first))
    assert json.loads(json.dumps(m.to_json(), sort_keys=True)) == json.loads(first)


def test_evaluated_json_values(capsys):
    _, out, _ = run(capsys, "gassner", "--n", "3", "--i", "1", "--j", "2", "--json")
    assert RepMatrix.from_json(json.loads(out)) == gassner_evaluated(1, 2, 3)


def test_relators_json(capsys):
    code, out, _ = run(capsys, "relators", "--group", "wb", "--n", "3", "--json")
    data = json.loads(out)
    assert code == 0
    assert data[-1] == {"label": "Forbidden[1]", "lhs": "t1 s2 s1", "rhs": "s2 s1 t2"}


def test_relators_text(capsys):
    _, out, _ = run(capsys, "relators", "--group", "sym", "--n", "2")
    assert out == "V3[1]: t1 t1 = 1\n"


def test_artin(capsys):
    _, out, _ = run(capsys, "artin", "--n", "3", "--word", "s1")
    assert out.splitlines() == ["x1 -> x1 x2 X1", "x2 -> x1", "x3 -> x3"]
    _, out, _ = run(capsys, "artin", "--n", "3", "--word", "q1.2", "--json")
    assert json.loads(out) == {"rank": 3, "images": ["x2 x1 X2", "x2", "x3"]}


def test_fox(capsys):
    _, out, _ = run(capsys, "fox", "--n", "2", "--word", "x1 x2 X1", "--wrt", "2")
    assert out == "x1\n"
    _, out, _ = run(capsys, "fox", "--n", "2", "--word", "X1", "--wrt", "1", "--json")
    assert json.loads(out)["value"]["terms"][0]["group"] == "X1"


@pytest.mark.parametrize(
    "argv",
    [
        ["gassner", "--n", "3", "--i", "1", "--j", "1"],
        ["burau", "--n", "2", "--word", "s2"],
        ["burau", "--n", "2", "--word", "zz"],
        ["verify", "--group", "pwb", "--n", "3", "--rep", "burau-evaluated"],
        ["iterate", "--n", "4", "--r", "2", "--i", "1", "--j", "2", "--reduce", "13"],
        ["burau", "--n", "2", "--word", "s1", "--subst", "b"],
        ["nonsense"],
        ["gassner", "--n", "3", "--bogus"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.strip()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "weldbraid", "verify", "--group", "vb", "--n", "3", "--rep", "burau-symbolic"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "5/5 relators pass"
