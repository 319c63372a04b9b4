"""
Tests for the command-line front end
"""
import json
import pytest
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

from src.cli import MACHINE_NAMES, main
from src.treecalc import generator

def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err

def test_encode(capsys):
    payload = json.dumps(generator("x0").to_json())
    code, out, _ = run(capsys, "encode", payload)
    assert code == 0
    assert out.strip() == "re,er"

def test_encode_rejects_bad_json(capsys):
    code, _, err = run(capsys, "encode", "{oops")
    assert code == 2
    assert "PARSE_ERROR" in err

def test_decode(capsys):
    code, out, _ = run(capsys, "decode", "re,er")
    assert code == 0
    assert json.loads(out) == generator("x0").to_json()

    code, out, _ = run(capsys, "decode", "r,r")
    assert code == 0
    assert json.loads(out) == {"domain": {"left": None, "right": None},
                               "range": {"left": None, "right": None}}

def test_decode_unreduced(capsys):
    word = "eea()(ab)raee,eea()(ab)raee"
    code, _, err = run(capsys, "decode", word)
    assert code == 1
    assert "not a normal form" in err
    code, out, _ = run(capsys, "decode", "--unreduced", word)
    assert code == 0
    code, again, _ = run(capsys, "encode", out)
    assert again.strip() == word

def test_decode_reports_position(capsys):
    code, _, err = run(capsys, "decode", "rr,rr")
    assert code == 2
    assert "position" in err
    code, _, _ = run(capsys, "decode", "re,e")
    assert code == 2

def test_accept(capsys):
    assert run(capsys, "accept", "ree,rae")[:2] == (0, "ACCEPT\n")
    assert run(capsys, "accept", "er,er")[:2] == (1, "REJECT\n")
    assert run(capsys, "accept", "rr,rr")[:2] == (1, "REJECT\n")

def test_accept_trace_json(capsys):
    code, out, _ = run(capsys, "--json", "accept", "--trace", "re,er")
    assert code == 0
    payload = json.loads(out)
    assert payload["accepted"] is True
    assert len(payload["trace"]) == 3
    assert payload["trace"][-1]["counters"] == [0, 0]

def test_mult(capsys):
    assert run(capsys, "mult", "r,r", "x0")[1].strip() == "re,er"
    assert run(capsys, "mult", "r,r", "x1", "x1inv")[1].strip() == "r,r"
    assert run(capsys, "mult", "r,r", "x1")[1].strip() == "ree,rae"
    assert run(capsys, "mult", "r,r", "x9")[0] == 2

def test_check_mult(capsys):
    assert run(capsys, "check-mult", "-s", "x0", "r,r", "re,er")[:2] == (0, "ACCEPT\n")
    assert run(capsys, "check-mult", "-s", "x1", "r,r", "re,er")[:2] == (1, "REJECT\n")
    assert run(capsys, "check-mult", "-s", "x1inv", "ree,rae", "r,r")[0] == 0

def test_ball(capsys):
    code, out, _ = run(capsys, "ball", "0")
    assert code == 0
    assert out == "r,r\t0\n"
    code, out, _ = run(capsys, "--json", "ball", "1")
    assert len(json.loads(out)["elements"]) == 5

def test_output_is_deterministic(capsys):
    first = run(capsys, "ball", "2")
    second = run(capsys, "ball", "2")
    assert first == second

def test_export_dot(capsys):
    code, out, _ = run(capsys, "export-dot", "case5b")
    assert code == 0
    for state in ("q0", "q1", "q2", "q3", "q4", "q5"):
        assert f'"{state}"' in out
    assert '"q4" [shape=doublecircle]' in out
    assert "case5b" in MACHINE_NAMES

def test_export_dot_unknown_machine(capsys):
    with pytest.raises(SystemExit) as info:
        main(["export-dot", "nope"])
    assert info.value.code == 2

def test_verify_small(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--max-carets", "2", "--radius", "1", "--seed", "4",
                       "--wrong-samples", "8", "--qg-radius", "2", "--json", str(target))
    assert code == 0, out
    assert out.strip().endswith("checks passed")
    report = json.loads(target.read_text())
    assert report["seed"] == 4
    assert all(check["passed"] for check in report["checks"])

if __name__ == "__main__":
    pytest.main([__file__, "-v"])
