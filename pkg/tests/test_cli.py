import json
import subprocess
import sys

import pytest

from lensfib import parse, unparse
from lensfib.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct(capsys):
    code, out, _ = invoke(capsys, "construct", "--lens", "7,2", "--weights", "5,2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("fibration M(")
    assert lines[1] == "canonical M(0;(14,1),(35,33),(1,-1))"
    assert lines[2] == "lens L(7,2)"
    assert "u=1" in lines[3] and "s=4" in lines[3] and "r=-1" in lines[3]
    # every printed fibration reparses
    for line in lines:
        if line.split()[-1].startswith("M("):
            parse(line.split()[-1])


def test_construct_json_stable(capsys):
    args = ("--json", "construct", "--lens", "7,2", "--weights", "5,2")
    code, out1, _ = invoke(capsys, *args)
    assert code == 0
    code, out2, _ = invoke(capsys, *args)
    assert out1 == out2
    env = json.loads(out1)
    assert env["command"] == "construct"
    assert env["status"] == "ok"
    assert env["input"] == {"lens": [7, 2], "weights": [5, 2]}
    assert env["result"]["lens"] == {"p": 7, "q": 2}
    assert env["trace"]["u"] == 1 and env["trace"]["s"] == 4
    fib = parse(env["result"]["fibration"]["text"])
    assert unparse(fib) == env["result"]["fibration"]["text"]


def test_recognize(capsys):
    code, out, _ = invoke(capsys, "recognize", "M(-1;(1,1))")
    assert code == 0 and out.strip() == "L(4,1)"


def test_recognize_error(capsys):
    code, out, err = invoke(capsys, "recognize", "M(0;(2,1),(2,1),(2,1))")
    assert code == 1
    assert out == ""
    assert "too many singular fibres" in err


def test_recognize_error_json(capsys):
    code, out, err = invoke(capsys, "--json", "recognize", "M(0;(2,1),(2,1),(2,1))")
    assert code == 1
    env = json.loads(out)
    assert env["status"] == "error"
    assert "too many singular fibres" in env["error"]


def test_normalize(capsys):
    code, out, _ = invoke(capsys, "--json", "normalize", "M(0;(35,-2),(14,1))")
    assert code == 0
    env = json.loads(out)
    assert env["result"]["genus"] == 0
    assert env["result"]["b"] == -1
    assert env["result"]["pairs"] == [[14, 1], [35, 33]]
    assert env["result"]["euler"] == {"num": -1, "den": 70}
    assert json.loads(out) == json.loads(out)


def test_iso(capsys):
    code, out, _ = invoke(
        capsys, "iso", "M(0;(15,2),(10,-1))", "M(0;(15,-2),(10,1))"
    )
    assert code == 0 and out.strip() == "reversing"
    code, out, _ = invoke(capsys, "iso", "M(0;(1,1))", "M(0;(1,1))")
    assert out.strip() == "oriented"


def test_classify(capsys):
    code, out, _ = invoke(capsys, "classify", "--lens", "2,1", "--pair", "5,3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "case ii-4"
    assert lines[1] == "classes 2"
    assert lines[-1] == "reversing pairs (0,1)"

    code, out, _ = invoke(capsys, "--json", "classify", "--lens", "7,2", "--pair", "5,2")
    env = json.loads(out)
    assert env["result"]["case"] == "ii-1"
    assert env["result"]["class_count"] == 4
    assert env["result"]["reversing_pairs"] == []


def test_enumerate(capsys):
    code, out, _ = invoke(capsys, "enumerate", "--lens", "0,1", "--max-mult", "2")
    assert code == 0
    fibs = [parse(line) for line in out.splitlines()]
    assert len(fibs) == 2


def test_model_and_isotropy(capsys):
    code, out, _ = invoke(capsys, "model", "--lens", "7,2", "--weights", "2,5")
    assert code == 0
    assert "lens L(7,2)" in out

    code, out, _ = invoke(capsys, "isotropy", "--lens", "6,5", "--weights", "3,1")
    assert code == 0 and out.strip() == "2"
    code, out, _ = invoke(capsys, "--json", "isotropy", "--lens", "6,5", "--weights", "3,1")
    assert json.loads(out)["result"] == {"u": 2}


def test_pi1_and_homology(capsys):
    code, out, _ = invoke(capsys, "pi1", "M(-1;(1,1))")
    assert code == 0
    assert "a1^-1 h a1 h" in out
    assert "base RP2" in out

    code, out, _ = invoke(capsys, "homology", "M(0;(35,-2),(14,1))")
    assert code == 0 and out.strip() == "7"
    code, out, _ = invoke(capsys, "homology", "M(0;(1,0),(1,1))")
    assert out.strip() == "trivial"
    code, out, _ = invoke(capsys, "--json", "homology", "M(0;)")
    assert json.loads(out)["result"]["invariant_factors"] == [0]


def test_parse_check(capsys):
    code, out, _ = invoke(capsys, "parse-check", "M( 0 ; (3,-1), (3,2) )")
    assert code == 0 and out.strip() == "ok"
    code, out, err = invoke(capsys, "parse-check", "M(0;(3,-1)")
    assert code == 1 and "position" in err
    code, out, err = invoke(capsys, "parse-check", "M(0;(4,2))")
    assert code == 1 and "coprime" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["construct", "--lens", "7,2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == 2


def test_bad_pair_syntax_is_domain_error(capsys):
    code, _, err = invoke(capsys, "construct", "--lens", "7;2", "--weights", "5,2")
    assert code == 1 and "comma" in err


def test_env_guard(capsys, monkeypatch):
    monkeypatch.setenv("SEIFERT_MAX_INT_GUARD", "50")
    code, _, err = invoke(capsys, "construct", "--lens", "47,13", "--weights", "11,7")
    assert code == 1
    assert "guard" in err
    monkeypatch.delenv("SEIFERT_MAX_INT_GUARD")
    code, _, _ = invoke(capsys, "construct", "--lens", "47,13", "--weights", "11,7")
    assert code == 0


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "lensfib.cli", "recognize", "M(0;(3,-1),(3,2))"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "L(3,2)"
