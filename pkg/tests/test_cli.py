import json

import pytest

from hyperconv.cli import main


def test_enumerate_count(capsys):
    assert main(["enumerate", "--points", "3", "--t0", "--count"]) == 0
    assert capsys.readouterr().out.strip() == "19"
    assert main(["enumerate", "--points", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4 and all(json.loads(line)["points"] == 2 for line in lines)


def test_enumerate_too_large(capsys):
    assert main(["enumerate", "--points", "6", "--count"]) == 2
    assert "error" in capsys.readouterr().err


def test_laws_json_report(capsys, tmp_path):
    out = tmp_path / "report.json"
    code = main(["laws", "--only", "mesh,prop-refine", "--max-points", "2", "--report", "json",
                 "--output", str(out)])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] and [law["id"] for law in data["laws"]] == ["mesh", "prop-refine"]
    assert json.loads(out.read_text()) == data


def test_laws_skip_is_nonzero(capsys):
    assert main(["laws", "--only", "discrete-example", "--max-points", "1"]) == 1
    assert "SKIPPED" in capsys.readouterr().out
    code = main(["laws", "--only", "discrete-example", "--max-points", "1",
                 "--exclude", "discrete-example=needs two points"])
    assert code == 0


def test_laws_unknown_id(capsys):
    assert main(["laws", "--only", "deliberately-broken-oracle"]) == 2
    with pytest.raises(SystemExit):
        main(["laws", "--exclude", "missing-reason"])


def test_invariants(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"points": 2, "opens": [[], [1], [0, 1]]}))
    assert main(["invariants", str(path)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["opens"] == 3
    assert data["separation"]["t0"] and not data["separation"]["t1"]
    assert data["alpha"]["kappa"]["lindelof"]["[0, 1]"] == 1
    assert data["alpha"]["s"]["solidity"]["solid"]


def test_invariants_bad_input(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"points": 2, "opens": [[0]]}))
    assert main(["invariants", str(path)]) == 2
    assert main(["invariants", str(tmp_path / "missing.json")]) == 2


def test_explore(capsys):
    assert main(["explore", "--points", "1", "--targets", "sierpinski"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data) == 1 and data[0]["matches"] >= 1
