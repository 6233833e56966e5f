import json
import subprocess
import sys

import pytest

from freecr.cli import main
from freecr.frame_io import parse_frame
from freecr.model import flat_frame

PY = [sys.executable, "-m", "freecr"]


def run(args, stdin=None):
    return subprocess.run(PY + args, input=stdin, capture_output=True, text=True, timeout=300)


def test_model_flat_emits_a_parsable_frame():
    out = run(["model", "flat", "--n", "3"])
    assert out.returncode == 0
    assert parse_frame(out.stdout).vector_fields() == flat_frame(3)


def test_invariant_pipe_is_byte_identical():
    frame = run(["model", "flat", "--n", "3"]).stdout
    first = run(["invariant", "-"], stdin=frame)
    second = run(["invariant", "-"], stdin=frame)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert "verdict: flat" in first.stdout


def test_deformed_json():
    frame = run(["model", "flat", "--n", "4", "--deform"]).stdout
    out = run(["invariant", "--format", "json", "-"], stdin=frame)
    doc = json.loads(out.stdout)
    assert out.returncode == 0
    assert doc["verdict"] == "not_flat"
    assert [(e["index"], e["value"]) for e in doc["P_independent"]] == [([3, 4, 1, 2, 1], "-1")]


def test_check_file(tmp_path):
    path = tmp_path / "flat.frame"
    path.write_text(run(["model", "flat", "--n", "2"]).stdout)
    out = run(["check", str(path)])
    assert out.returncode == 0 and "verdict: accepted" in out.stdout


def test_rejected_frame_exits_one(tmp_path):
    path = tmp_path / "twice.frame"
    path.write_text("format: 1\nn: 2\nfield A\n  z1 = 1\nfield B\n  z1 = 1\n")
    out = run(["invariant", str(path)])
    assert out.returncode == 1
    assert "verdict: rejected" in out.stdout and "rejected_by: nondegenerate" in out.stdout
    assert run(["check", str(path)]).returncode == 1


def test_parse_error_exits_two(tmp_path):
    path = tmp_path / "bad.frame"
    path.write_text("format: 1\nn: 2\nfield A\n  z1 = z1^^2\n")
    out = run(["invariant", str(path)])
    assert out.returncode == 2
    assert "line 4, column 11" in out.stderr
    assert out.stdout == ""


def test_missing_file_exits_two():
    assert run(["check", "/nonexistent/frame"]).returncode == 2


def test_deform_needs_n4():
    out = run(["model", "flat", "--n", "3", "--deform"])
    assert out.returncode == 2 and "n >= 4" in out.stderr


def test_usage_error_exits_two():
    assert run(["model", "flat"]).returncode == 2
    assert run(["algebra", "verify", "--n", "1"]).returncode == 2


@pytest.mark.parametrize("args", [
    ["algebra", "verify", "--n", "2"],
    ["fefferman", "verify", "--n", "2"],
    ["model", "verify", "--n", "2", "--planes", "5"],
])
def test_verify_suites_in_process(args, capsys):
    assert main(args) == 0
    assert "verdict: passed" in capsys.readouterr().out


def test_verify_json(capsys):
    assert main(["fefferman", "verify", "--n", "3", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert all(c["passed"] for c in doc["checks"])
