from __future__ import annotations

import json

import pytest

from sdhall.cli import EXIT_ABORT, EXIT_CONFIG, EXIT_OK, EXIT_VIOLATION, SUITES, RunConfig, run
from sdhall.backends import ConfigError


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


@pytest.fixture
def a2_file(tmp_path):
    p = tmp_path / "a2.json"
    p.write_text(json.dumps({"vertices": 2, "arrows": [[0, 1]]}))
    return str(p)


def test_objects(capsys, a2_file):
    code, data = run_json(capsys, ["objects", "--backend", "quiver", "--quiver", a2_file])
    assert code == EXIT_OK
    assert [o["label"] for o in data["objects"]] == ["(0,0)#0", "(0,1)#0", "(1,0)#0", "(1,1)#0", "(1,1)#1"]
    assert data["config"]["bound"] == [1, 1]


def test_hall_table_and_fault(capsys):
    code, data = run_json(capsys, ["hall-table", "--bound", "2"])
    assert code == EXIT_OK
    row = next(r for r in data["rows"] if (r["M"], r["N"], r["R"]) == ("V1", "V1", "V2"))
    assert row["h"]["rat"] == "1/2"
    code, data = run_json(capsys, ["hall-table", "--bound", "2", "--inject-fault"])
    assert code == EXIT_VIOLATION
    assert any(not r["agree"] for r in data["rows"])


def test_verify_default_suites(capsys):
    code, data = run_json(capsys, ["verify", "--bound", "1"])
    assert code == EXIT_OK
    assert {s["name"] for s in data["suites"]} >= {"hall_double_entry", "sdh_product_oracle", "double_D4"}


def test_verify_fault_is_a_violation(capsys):
    code, data = run_json(capsys, ["verify", "--suite", "double-entry", "--inject-fault"])
    assert code == EXIT_VIOLATION
    assert data["suites"][0]["failure_count"] > 0


def test_verify_output_is_deterministic(capsys, tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"out{i}.json"
        assert run(["verify", "--suite", "green,pairing", "--out", str(path)]) == EXIT_OK
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_verify_jobs(capsys):
    code, data = run_json(capsys, ["verify", "--bound", "1", "--suite", "green,pairing", "--jobs", "2"])
    assert code == EXIT_OK
    assert len(data["suites"]) >= 2


def test_verify_list(capsys):
    assert run(["verify", "--list"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "sensitivity (not default)" in out
    assert all(name in out for name in SUITES)


def test_sdh_mul_and_coprod(capsys):
    code, data = run_json(capsys, ["sdh", "mul", "0:0:0:1", "0:0:1:0"])
    assert code == EXIT_OK
    keys = {(tuple(t["key"]["beta"]), t["key"]["A"], t["key"]["B"]) for t in data["terms"]}
    assert keys == {((1,), "V0", "V0"), ((0,), "V1", "V1")}
    code, data = run_json(capsys, ["sdh", "mul", "unit", "unit"])
    assert code == EXIT_OK and len(data["terms"]) == 1
    code, data = run_json(capsys, ["sdh", "coprod", "1:0:0:0"])
    assert code == EXIT_OK and len(data["terms"]) == 1


def test_truncation_aborts(capsys):
    assert run(["sdh", "mul", "--bound", "1", "0:0:1:0", "0:0:1:0"]) == EXIT_ABORT


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--q", "4"],
        ["verify", "--suite", "nope"],
        ["verify", "--bogus"],
        ["verify", "--bound", "1,1"],
        ["verify", "--backend", "quiver"],
        ["objects", "--quiver", "x.json"],
        ["sdh", "mul", "0:0:1", "unit"],
        ["sdh", "mul", "0:0:9#3:0", "unit"],
    ],
)
def test_config_errors(capsys, argv):
    assert run(argv) == EXIT_CONFIG


def test_missing_quiver_file(capsys, tmp_path):
    assert run(["objects", "--backend", "quiver", "--quiver", str(tmp_path / "none.json")]) == EXIT_CONFIG


def test_run_config_defaults(a2_file):
    assert RunConfig.build("vect", None, None, None).bound == (2,)
    cfg = RunConfig.build("quiver", 3, None, a2_file)
    assert cfg.bound == (1, 1) and cfg.q == 3
    with pytest.raises(ConfigError):
        RunConfig.build("vect", 2, "-1", None)
