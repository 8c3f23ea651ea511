import json
import subprocess
import sys

import jsonschema
import pytest

from dendchar import cli
from dendchar.poly import FactoredForm
from dendchar.report import REPORT_SCHEMA

COMMANDS = [
    ["seq", "b", "--upto", "14"],
    ["tamari", "--leaves", "4", "--export", "json"],
    ["charpoly", "--leaves", "4", "--matrix", "tau", "--method", "both"],
    ["verify", "theorem", "--upto", "5"],
    ["verify", "conjecture", "--n", "4"],
    ["verify", "crux", "--upto", "12"],
    ["verify", "compat", "--upto", "8"],
    ["verify", "dend", "--upto", "6"],
    ["symcheck", "--degree", "6"],
    ["taylor", "--order", "12"],
    ["series", "--order", "12"],
]


def _json(argv, capsys):
    code = cli.main([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def _text(argv, capsys):
    code = cli.main([*argv, "--format", "text"])
    return code, capsys.readouterr().out


def test_seq_text_is_bare_values(capsys):
    code, out = _text(["seq", "a", "--upto", "10"], capsys)
    assert code == 0
    assert out.strip() == "1,1,3,8,25,75,245,800,2700,9225"


def test_verify_theorem_json(capsys):
    code, data = _json(["verify", "theorem", "--n", "3"], capsys)
    assert code == 0
    assert data["status"] == "PASS"
    assert data["payload"]["results"][0]["polynomial"] == [1, 1, 1]


def test_taylor_six_pass_lines(capsys):
    code, out = _text(["taylor", "--order", "30"], capsys)
    lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert code == 0
    assert len(lines) == 6 and all(ln.startswith("PASS\t") for ln in lines)


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a[:2]))
def test_schema_and_text_json_agree(argv, capsys):
    code_j, data = _json(argv, capsys)
    jsonschema.validate(data, REPORT_SCHEMA)
    code_t, out = _text(argv, capsys)
    assert code_j == code_t == 0
    if argv[0] != "seq":
        text_statuses = [ln.split("\t")[0] for ln in out.splitlines() if not ln.startswith("#")]
        assert text_statuses == [c["status"] for c in data["checks"]]
        assert out.splitlines()[-1].endswith(f"{data['status']} ({len(data['checks'])} checks)")


def test_output_is_deterministic(capsys):
    argv = ["verify", "conjecture", "--upto", "5", "--workers", "3"]
    _, first = _json(argv, capsys)
    _, second = _json(argv[:-2], capsys)
    first["parameters"].pop("workers")
    second["parameters"].pop("workers")
    assert first == second
    assert [r["n"] for r in first["payload"]["results"]] == [2, 3, 4, 5]
    assert "timings_ms" not in first["payload"]["results"][0]


def test_timings_opt_in(capsys):
    _, data = _json(["charpoly", "--leaves", "4", "--timings"], capsys)
    assert set(data["payload"]["timings_ms"]) == {"traces", "direct"}


def test_max_dim_refusal_exits_2(capsys):
    code, data = _json(["tamari", "--leaves", "6", "--max-dim", "10"], capsys)
    assert code == 2 and data["status"] == "ERROR"
    jsonschema.validate(data, REPORT_SCHEMA)


def test_berkowitz_refusal_exits_2(capsys):
    code, _ = _json(["charpoly", "--leaves", "6", "--method", "direct", "--berkowitz-max", "10"], capsys)
    assert code == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "theorem"])
    assert exc.value.code == 2


def test_fail_exits_1_with_mismatch(monkeypatch, capsys):
    import dendchar.spectra as sp

    monkeypatch.setattr(sp, "theorem_form", lambda n: FactoredForm({2: 1}))
    code, data = _json(["verify", "theorem", "--n", "3"], capsys)
    assert code == 1 and data["status"] == "FAIL"
    assert data["checks"][0]["data"]["mismatch"]["index"] == 0


def test_conjecture_fail_exits_0(monkeypatch, capsys):
    import dendchar.spectra as sp

    monkeypatch.setattr(sp, "conjecture_form", lambda n: FactoredForm({2: 1}))
    code, data = _json(["verify", "conjecture", "--n", "3"], capsys)
    assert code == 0 and data["status"] == "CONJECTURE-FAIL"


def test_export_path(tmp_path, capsys):
    path = tmp_path / "t.json"
    assert cli.main(["tamari", "--leaves", "3", "--export-path", str(path)]) == 0
    capsys.readouterr()
    assert json.loads(path.read_text())["covers"] == [[0, 1]]


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "dendchar", "seq", "catalan", "--upto", "5"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "1,1,2,5,14,42"
