"""The command-line interface: output shapes, determinism, exit codes."""

import json
from pathlib import Path

import pytest

from qscheme.cli import main

GOLDEN_DOT = Path(__file__).parent / "data" / "scheme.dot"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list_contains_top_family(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert "1a" in out and "Askey-Wilson" in out
    assert out.count("\n") >= 18


def test_list_filter_by_node(capsys):
    code, out, _ = run(capsys, "list", "--node", "4d")
    assert code == 0
    assert "little q-Laguerre" in out
    assert "Askey-Wilson" not in out


def test_list_unknown_node_empty_table(capsys):
    code, out, _ = run(capsys, "list", "--node", "9z")
    assert code == 0
    assert "9z" not in out  # header only


def test_eval_power_factorial_family(capsys):
    code, out, _ = run(capsys, "eval", "5b", "-n", "2", "--xs=2")
    assert code == 0
    assert "x^2 - 3/2 x + 1/2" in out
    assert "3/2" in out


def test_eval_degree_zero(capsys):
    code, out, _ = run(capsys, "eval", "5a", "-n", "0")
    assert code == 0
    rows = [line for line in out.splitlines() if line.strip().startswith("0")]
    assert rows and rows[0].split()[1] == "1"


def test_eval_first_recurrence_coefficient(capsys):
    code, out, _ = run(capsys, "eval", "3a", "-n", "1")
    assert code == 0
    first = next(line for line in out.splitlines() if line.strip().startswith("0"))
    assert "9/4" in first


def test_eval_json_payload(capsys, tmp_path):
    target = tmp_path / "eval.json"
    code, _, _ = run(capsys, "eval", "5b", "-n", "2", "--json", str(target))
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["vector"]["q"] == "1/2"
    assert payload["rows"][2]["poly"] == "x^2 - 3/2 x + 1/2"
    assert payload["vector"]["check"]["h_separation_ok"] is True


def test_eval_rejects_inadmissible_params(capsys):
    code, _, err = run(capsys, "eval", "3d", "--param", "b=0")
    assert code == 2
    assert "violates" in err


def test_eval_unknown_family(capsys):
    code, _, err = run(capsys, "eval", "9z")
    assert code == 2
    assert "unknown family" in err


def test_eval_respects_hard_cap(capsys, monkeypatch):
    code, _, err = run(capsys, "eval", "5a", "-n", "30")
    assert code == 2 and "hard cap" in err
    monkeypatch.setenv("QSCHEME_HARD_CAP", "40")
    code, out, _ = run(capsys, "eval", "5a", "-n", "30")
    assert code == 0
    monkeypatch.setenv("QSCHEME_HARD_CAP", "oops")
    code, _, err = run(capsys, "eval", "5a", "-n", "3")
    assert code == 2 and "QSCHEME_HARD_CAP" in err


def test_config_presets_parameters(capsys, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"q": "1/3", "families": {"3a": {"a": "3"}}}))
    code, out, _ = run(capsys, "--config", str(config), "eval", "3a", "-n", "1")
    assert code == 0
    assert "q = 1/3" in out and "a=3" in out
    # flags beat the config file
    code, out, _ = run(
        capsys, "--config", str(config), "eval", "3a", "-n", "1", "-q", "1/2"
    )
    assert code == 0 and "q = 1/2" in out


def test_config_must_be_valid_json(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    code, _, err = run(capsys, "--config", str(bad), "list")
    assert code == 2 and "config" in err


def test_graph_dot_matches_golden_file(capsys, tmp_path):
    target = tmp_path / "scheme.dot"
    code, out, _ = run(capsys, "graph", "--format", "dot", "-o", str(target))
    assert code == 0
    assert "34 labeled nodes (+27 unlisted), 170 arrows" in out
    assert target.read_bytes() == GOLDEN_DOT.read_bytes()


def test_graph_emission_is_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "graph", "--format", "json", "-o", str(a))
    run(capsys, "graph", "--format", "json", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_graph_json_round_trips(capsys, tmp_path):
    target = tmp_path / "scheme.json"
    run(capsys, "graph", "--format", "json", "-o", str(target))
    payload = json.loads(target.read_text())
    assert payload["counts"] == {"labeled": 34, "unlisted": 27, "arrows": 170}
    labels = {node["label"] for node in payload["nodes"]}
    assert {"1a", "3b'", "5c", "X-01"} <= labels
    assert ["1a", "2a"] in payload["arrows"]


def test_verify_charts_passes_with_warnings(capsys):
    code, out, _ = run(capsys, "verify", "charts")
    assert code == 0
    assert "[warn]" in out
    assert "35/35 checks passed" in out


def test_verify_constraints(capsys):
    code, out, _ = run(capsys, "verify", "constraints")
    assert code == 0
    assert "[pass] constraints/1a" in out


def test_verify_small_run_with_json_report(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        "verify",
        "recurrence",
        "--n-max",
        "4",
        "--count",
        "3",
        "--json",
        str(target),
    )
    assert code == 0
    assert "seed = " in out
    payload = json.loads(target.read_text())
    assert payload[0]["suite"] == "recurrence"
    assert payload[0]["pass"] is True


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "everything"])
    assert exc.value.code == 2
