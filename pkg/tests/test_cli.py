from __future__ import annotations

import json
import subprocess
import sys

import pytest

from extrilab.cli import COMMANDS, SCHEMA, ScenarioError, main, parse_scenario

from conftest import SCENARIO_DIR


def _scenario(name: str) -> dict:
    return json.loads((SCENARIO_DIR / f"{name}.json").read_text())


def _write(tmp_path, doc: dict):
    path = tmp_path / "sc.json"
    path.write_text(json.dumps(doc))
    return str(path)


def _run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_check_ct_report_shape(capsys):
    code, out, _ = _run(["check", "ct", str(SCENARIO_DIR / "cyclic4_ct.json")], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == SCHEMA
    assert [c["name"] for c in doc["checks"]] == COMMANDS["check ct"]
    assert doc["summary"]["ok"] and not doc["summary"]["failed"]


def test_report_is_byte_identical_across_processes(tmp_path):
    outs = []
    for k in range(2):
        target = tmp_path / f"r{k}.json"
        cmd = [sys.executable, "-m", "extrilab.cli", "quotient", "ks", str(SCENARIO_DIR / "linear3_mod.json"), "--out", str(target)]
        assert subprocess.run(cmd, check=False).returncode == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]


def test_unknown_command(capsys):
    code, out, err = _run(["check", "bogus", str(SCENARIO_DIR / "cyclic4_ct.json")], capsys)
    assert code == 2 and not out
    assert json.loads(err)["error"] == "unknown-command"


def test_bad_label_is_structured_error(tmp_path, capsys):
    doc = _scenario("cyclic4_ct")
    doc["X"] = ["M[9,9]"]
    code, _, err = _run(["check", "rigid", _write(tmp_path, doc)], capsys)
    rec = json.loads(err)
    assert code == 2 and rec["error"] == "bad-label" and rec["where"] == "X[0]"


def test_missing_field_rejected():
    doc = _scenario("cyclic4_ct")
    del doc["algebra"]
    with pytest.raises(ScenarioError):
        parse_scenario(doc)


def test_empty_x_fails_cluster_tilting(tmp_path, capsys):
    doc = _scenario("cyclic4_ct")
    doc["X"] = []
    code, out, _ = _run(["check", "ct", _write(tmp_path, doc)], capsys)
    doc = json.loads(out)
    assert code == 1 and "cluster-tilting" in doc["summary"]["failed"]
    ct = next(c for c in doc["checks"] if c["name"] == "cluster-tilting")
    assert {"CT2-right", "CT2-left"} <= {v["condition"] for v in ct["payload"]["violations"]}


def test_search_ct_finds_both_tilting_subcategories(capsys):
    code, out, _ = _run(["search", "ct", str(SCENARIO_DIR / "cyclic4_ct.json")], capsys)
    payload = json.loads(out)["checks"][0]["payload"]
    assert code == 0
    assert payload["hits"] == [["M[1,1]", "M[3,1]"], ["M[2,1]", "M[4,1]"]]


def test_seed_override_recorded(capsys):
    code, out, _ = _run(["check", "rigid", str(SCENARIO_DIR / "cyclic4_ct.json"), "--seed", "7"], capsys)
    assert code == 0 and json.loads(out)["scenario"]["seed"] == 7
