import json

import jsonschema
import pytest

from chromabound.cli import main
from chromabound.schemas import (
    BOUND_REPORT_SCHEMA,
    SERIES_OUTPUT_SCHEMA,
    TABLE_ROW_SCHEMA,
    VERIFY_OUTPUT_SCHEMA,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_default_csv(capsys):
    code, out, err = run(capsys, "table")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "delta,sokal,cstar_delta,cstar_complete,exact"
    assert len(lines) == 6
    assert lines[1].startswith("2,13.23,")
    assert lines[-1].split(",")[0] == "any"


def test_table_json_validates(capsys):
    code, out, _ = run(capsys, "table", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 5
    for row in rows:
        jsonschema.validate(row, TABLE_ROW_SCHEMA)
    assert rows[1] == {
        "delta": 3,
        "sokal": "21.14",
        "cstar_delta": "17.56",
        "cstar_complete": "15.75",
        "exact": "3",
    }


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "--format", "text")
    assert code == 0
    assert "delta" in out and "44.98" in out


def test_format_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("CHROMABOUND_FORMAT", "json")
    code, out, _ = run(capsys, "table")
    assert code == 0
    assert isinstance(json.loads(out), list)
    monkeypatch.setenv("CHROMABOUND_FORMAT", "yaml")
    with pytest.raises(SystemExit):
        main(["table"])
    capsys.readouterr()


def test_explicit_format_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("CHROMABOUND_FORMAT", "text")
    code, out, _ = run(capsys, "table", "--format", "csv")
    assert code == 0
    assert out.startswith("delta,sokal")


def test_bounds_degree_only(capsys):
    code, out, _ = run(capsys, "bounds", "--delta", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["delta"] == 4
    assert payload["c_sokal_rounded"] == "29.08"
    assert payload["c_star_delta_rounded"] == "24.44"


def test_bounds_family(capsys):
    code, out, _ = run(capsys, "bounds", "--family", "petersen")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, BOUND_REPORT_SCHEMA)
    assert payload["graph_id"] == "petersen"
    assert payload["delta"] == 3
    assert payload["c_star_graph"] == pytest.approx(17.5628, abs=1e-3)


def test_bounds_with_series_column(capsys):
    code, out, _ = run(
        capsys, "bounds", "--family", "complete", "--n", "3", "--order", "48"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["c_star_graph_series"] == pytest.approx(
        payload["c_star_graph"], abs=1e-3
    )


def test_bounds_from_file(capsys, tmp_path):
    path = tmp_path / "triangle.txt"
    path.write_text("3 3\n0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "bounds", "--graph", str(path), "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[0] == "graph_id"
    assert lines[1].split(",")[0] == "triangle"


def test_bounds_from_dimacs_file(capsys, tmp_path):
    path = tmp_path / "square.col"
    path.write_text("c four cycle\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
    code, out, _ = run(capsys, "bounds", "--graph", str(path))
    assert code == 0
    assert json.loads(out)["delta"] == 2


def test_bounds_requires_source_or_delta(capsys):
    with pytest.raises(SystemExit):
        main(["bounds"])
    capsys.readouterr()


def test_missing_file_is_reported(capsys):
    code, out, err = run(capsys, "bounds", "--graph", "/nonexistent/g.txt")
    assert code == 1
    assert "error:" in err


def test_unknown_family_is_reported(capsys):
    code, _, err = run(capsys, "verify", "--family", "klein-bottle")
    assert code == 1
    assert "error:" in err


def test_verify_petersen(capsys):
    code, out, _ = run(capsys, "verify", "--family", "petersen")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, VERIFY_OUTPUT_SCHEMA)
    assert payload["ok"] is True
    by_name = {c["name"]: c["status"] for c in payload["checks"]}
    assert by_name["penrose-identity"] == "PASS"
    assert by_name["partition-identity"] == "SKIP"
    assert by_name["activity-bound"] == "PASS"
    assert by_name["zero-free"] == "PASS"


def test_verify_small_graph_all_checks_run(capsys):
    code, out, _ = run(capsys, "verify", "--family", "cycle", "--n", "5")
    assert code == 0
    payload = json.loads(out)
    statuses = {c["name"]: c["status"] for c in payload["checks"]}
    assert set(statuses.values()) == {"PASS"}


def test_verify_failure_exits_nonzero(capsys):
    # A vertex cap below the graph size makes the root check error out,
    # which must surface as a failed check, not a crash.
    code, out, _ = run(
        capsys, "verify", "--family", "petersen", "--max-vertices", "3"
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["ok"] is False
    statuses = {c["name"]: c["status"] for c in payload["checks"]}
    assert statuses["zero-free"] == "FAIL"


def test_verify_text_format(capsys):
    code, out, _ = run(
        capsys, "verify", "--family", "complete", "--n", "4", "--format", "text"
    )
    assert code == 0
    assert "result: ok" in out


def test_verify_with_fp_check(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--family", "complete", "--n", "3",
        "--q", "11.0", "--a", "0.597", "--order", "64",
    )
    assert code == 0
    payload = json.loads(out)
    statuses = {c["name"]: c["status"] for c in payload["checks"]}
    assert statuses["fp-condition"] == "PASS"


def test_series_degree_mode(capsys):
    code, out, _ = run(capsys, "series", "--delta", "3", "--order", "6")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, SERIES_OUTPUT_SCHEMA)
    assert payload["coefficients"] == ["1", "3", "9", "28", "90", "297"]
    # Growth is governed by the child series, whose profile is the
    # square binomial: radius 1/4.
    assert payload["radius"] == pytest.approx(0.25)


def test_series_with_threshold(capsys):
    code, out, _ = run(
        capsys, "series", "--delta", "2", "--order", "5", "--b", "2.0"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["threshold_x"] == pytest.approx(1.0 - 2.0**-0.5, abs=1e-9)


def test_series_graph_mode_csv(capsys):
    code, out, _ = run(
        capsys,
        "series", "--family", "complete", "--n", "3",
        "--order", "4", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,coefficient"
    assert [l.split(",")[1] for l in lines[1:]] == ["1", "2", "2", "2"]


def test_series_needs_a_source(capsys):
    with pytest.raises(SystemExit):
        main(["series"])
    capsys.readouterr()


def test_random_family_is_deterministic(capsys):
    args = ["bounds", "--family", "random-regular", "--n", "10",
            "--delta", "3", "--seed", "7"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
