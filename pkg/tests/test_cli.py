import json
import subprocess
import sys

import pytest

from matroid_chow.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def b2(tmp_matroid):
    return tmp_matroid(json.dumps({"type": "linear", "matrix": [[1, 0, 0, 1, 1], [0, 1, 0, 1, 1],
                                                                [0, 0, 1, 1, 0]]}), "b2.json")


@pytest.fixture
def k5(tmp_matroid):
    return tmp_matroid(json.dumps({"type": "named", "id": "K5"}), "k5.json")


def test_mixed_eulerian(capsys):
    assert run(["mixed-eulerian", "2,0,1"], capsys)[:2] == (0, "3\n")
    code, out, _ = run(["mixed-eulerian", "--poly", "2,1", "--json"], capsys)
    assert code == 0 and json.loads(out) == {"composition": [2, 1], "polynomial": [2, 4]}


def test_mixed_eulerian_domain_error(capsys):
    code, _, err = run(["mixed-eulerian", "2,2"], capsys)
    assert code == 2 and "summing" in err


def test_delta_degree_with_oracle(b2, capsys):
    code, out, _ = run(["delta-degree", b2, "--composition", "2,2,1", "--oracle", "--json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["degree"] == data["oracle"] == 8 and data["subset"] == [2, 4]


def test_delta_degree_bad_composition(b2, capsys):
    code, _, err = run(["delta-degree", b2, "--composition", "4,1"], capsys)
    assert code == 2 and "crk(M)+1" in err


def test_tutte_and_evaluation(b2, capsys):
    code, out, _ = run(["tutte", b2, "--at", "1,1"], capsys)
    assert code == 0 and out == "8\n"
    code, out, _ = run(["tutte", b2, "--at", "1/2,3", "--json"], capsys)
    assert json.loads(out)["x"] == "1/2"


def test_hvector_reliability_hpoly(b2, k5, capsys):
    assert run(["hvector", b2], capsys)[1] == "1 2 3 2\n"
    code, out, _ = run(["reliability", k5, "--json"], capsys)
    assert json.loads(out)["reliability"] == [1, 0, 0, 0, -5, 0, -10, 20, 30, -60, 24]
    code, out, _ = run(["hpoly", b2], capsys)
    assert out.strip() == "4*z1^2 + 8*z1*z2 + 4*z1*z3 + 3*z2^2 + 3*z2*z3 + z3^2"


def test_phi(k5, capsys):
    code, out, _ = run(["phi", k5, "--json"], capsys)
    assert code == 0 and json.loads(out)["degrees"] == [24, 36, 30, 20, 10, 4, 1]


def test_schubert_degrees(k5, capsys):
    code, out, _ = run(["schubert-degrees", k5, "--partition", "2,1", "--json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert data["degrees"] == [0, 2, 8, 20, 40, 60, 72, 48, 0]


def test_verify_file_and_theorem_filter(b2, capsys):
    code, out, _ = run(["verify", b2, "--theorem", "phi-tutte", "--json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["total"] == 1 and data["failed"] == 0


def test_verify_needs_a_target(capsys):
    assert run(["verify"], capsys)[0] == 2


def test_parse_error_exit_code(tmp_matroid, capsys):
    path = tmp_matroid('{"type": "uniform", "rank": -1, "size": 2}')
    code, _, err = run(["hvector", path], capsys)
    assert code == 2 and "$.rank" in err


def test_missing_file(capsys):
    assert run(["hvector", "/nonexistent/file.json"], capsys)[0] == 2


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_output_is_deterministic(k5, capsys):
    first = run(["verify", k5, "--json"], capsys)[1]
    second = run(["verify", k5, "--json"], capsys)[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "matroid_chow", "mixed-eulerian", "0,2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\n"
