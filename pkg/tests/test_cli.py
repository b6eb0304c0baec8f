import io
import json

import pytest

from cli import main


@pytest.fixture
def cube_file(tmp_path, capsys):
    path = tmp_path / "cube.json"
    assert main(["catalog", "hypercube", "--n", "3", "--lambda", "1", "--output", str(path)]) == 0
    capsys.readouterr()
    return path


@pytest.fixture
def petersen_file(tmp_path, capsys):
    path = tmp_path / "petersen.json"
    assert main(["catalog", "petersen", "--output", str(path)]) == 0
    capsys.readouterr()
    return path


def _run(capsys, argv: list[str]) -> tuple[int, dict]:
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_build_graph(capsys, petersen_file):
    code, payload = _run(capsys, ["build-graph", "--group", str(petersen_file), "--H", "h0,h1", "--J", "g"])
    assert code == 0
    assert (len(payload["vertices"]), len(payload["edges"])) == (10, 30)
    assert payload["params"]["k"] == 3
    assert payload["params"]["lambda"] == 2
    assert payload["params"]["edges_formula"] == 30


def test_base_graph_as_dot(capsys, petersen_file):
    assert main(["base-graph", "--group", str(petersen_file), "--H", "h0,h1", "--J", "g", "--format", "dot"]) == 0
    assert "--" in capsys.readouterr().out


def test_rotamap_from_stdin(capsys, cube_file, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(cube_file.read_text()))
    code, payload = _run(capsys, ["rotamap", "--pair", "a,z"])
    assert code == 0
    assert payload["counts"]["faces"] == 4
    assert payload["counts"]["face_lengths"] == [6]
    assert payload["chi"] == 0


def test_regmap_check(capsys, cube_file):
    code, payload = _run(capsys, ["check", "--group", str(cube_file), "--map", "regmap", "--triple", "x,y,z"])
    assert code == 0
    assert (payload["chi"], payload["flags"]) == (2, 48)
    assert payload["orientable"] and payload["flag_graph_bipartite"]


def test_classify(capsys, cube_file):
    code, payload = _run(capsys, ["classify", "--group", str(cube_file), "--map", "biromap", "--pair", "a,z"])
    assert code == 0
    assert payload["kind"] == "BiRotary"
    assert payload["type"] == "2*ex"


@pytest.mark.parametrize(
    "argv, error",
    [
        (["rotamap", "--pair", "a,a"], "ZNotInvolution"),
        (["rotamap", "--pair", "a,w"], "UnknownName"),
        (["rotamap", "--pair", "a"], "ParseError"),
        (["rotamap"], "ParseError"),
    ],
)
def test_errors_exit_with_payload(capsys, cube_file, argv, error):
    code, payload = _run(capsys, [*argv, "--group", str(cube_file)])
    assert code == 2
    assert payload["error"] == error


def test_knn_table(capsys):
    code, payload = _run(capsys, ["catalog", "knn", "--n", "5", "--lambda", "6", "--table"])
    assert code == 0
    assert payload["lambda"] == 6
    assert payload["agrees"]


def test_ill_defined_family(capsys):
    code, payload = _run(capsys, ["catalog", "knn", "--n", "3", "--lambda", "10"])
    assert code == 2
    assert payload["error"] == "IllDefined"


def test_verify(capsys):
    code, payload = _run(capsys, ["verify", "petersen", "--no-progress"])
    assert code == 0
    assert [row["check"] for row in payload] == sorted(row["check"] for row in payload)
    assert all(row["passed"] for row in payload)


@pytest.mark.parametrize("argv", [["rotamap", "--bogus"], ["catalog", "nonesuch"], ["catalog", "knn", "--n", "three"], []])
def test_usage_errors_exit_with_payload(capsys, argv):
    code, payload = _run(capsys, argv)
    assert code == 2
    assert payload["error"] == "ParseError"
    assert payload["message"]
