import io
import json
import subprocess
import sys

import pytest

from trivial_limits.cli import run

CURVE = '{"p":7,"f":[0,-1,0,0,0,1]}'


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue().strip(), err.getvalue().strip()


def test_classify_limit_json():
    code, out, _ = call("classify-limit", "--curve", CURVE, "--class", "H^1", "--json")
    assert code == 0
    assert out == '{"is_limit":true,"reason":"PowerOfH","k":1}'


def test_classify_limit_human():
    code, out, _ = call("classify-limit", "--curve", CURVE, "--class", "H^1")
    assert code == 0 and out == "is_limit=true reason=PowerOfH k=1"


def test_classify_limit_from_divisor():
    code, out, _ = call("classify-limit", "--curve", CURVE, "--divisor", '[["inf",3]]', "--json")
    assert code == 0 and json.loads(out) == {"is_limit": True, "reason": "DegreeAtLeastGPlus1"}


def test_h0():
    assert call("h0", "--curve", CURVE, "--divisor", '[["inf",2]]')[:2] == (0, "2")
    code, out, _ = call("h0", "--curve", CURVE, "--divisor", '[["inf",6]]', "--json")
    assert json.loads(out)["dimension"] == 5


def test_prop4():
    code, out, _ = call("prop4", "--d", "5", "--k", "1", "--json")
    assert code == 0 and json.loads(out)["verdict"] is True
    code, out, _ = call("prop4", "--d", "4", "--k", "1")
    assert code == 0 and "not certified" in out


def test_rho():
    assert call("rho", "--g", "4", "--r", "1", "--d", "3")[:2] == (0, "0")
    assert call("rho", "--g", "4", "--r", "1", "--d", "3", "--json")[1] == '{"rho":0}'


def test_divisor_of_decompose_gg():
    code, out, _ = call("divisor-of", "--curve", CURVE, "--function", '{"a":[0,1]}', "--json")
    assert json.loads(out) == [[[0, 0], 2], ["inf", -2]]
    code, out, _ = call("decompose", "--curve", CURVE, "--divisor", '[["inf",3]]', "--json")
    obj = json.loads(out)
    assert obj["k"] == 1 and obj["D"] == [["inf", 1]]
    assert call("gg", "--curve", CURVE, "--divisor", '[["inf",2]]', "--json")[1] == '{"globally_generated":true}'
    assert call("gg", "--curve", CURVE, "--divisor", '[["inf",1]]', "--json")[1] == '{"globally_generated":false}'


def test_ext_split():
    assert call("ext-split", "--curve", CURVE, "--class", "H", "--json")[1] == '{"splits":true}'
    g3 = '{"p":7,"f":[0,1,0,0,0,0,0,1]}'
    assert call("ext-split", "--curve", g3, "--class", "H", "--json")[1] == '{"splits":false}'


def test_pairings():
    args = ["--curve", CURVE, "--divisor", '[["inf",2]]', "--s", '{"a":[1]}', "--t", '{"a":[0,1]}']
    code, out, _ = call("koszul-pair", *args, "--json")
    values = json.loads(out)["values"]
    assert code == 0 and len(values) == 5 and any(values)
    code, out, _ = call("koszul-pair", *args, "--w", '{"b":[1]}', "--json")
    assert json.loads(out) == {"values": [2]}
    code, out, _ = call("u2e", *args, "--u", '{"a":[0,1]}', "--json")
    assert json.loads(out) == {"values": [], "splits": True}


def test_domain_errors_exit_1():
    code, _, err = call("h0", "--curve", '{"p":7,"f":[0,0,0,0,0,1]}', "--divisor", "[]")
    assert code == 1 and "squarefree" in err
    code, _, err = call("h0", "--curve", CURVE, "--divisor", '[[[3,2],1]]')
    assert code == 1 and "not a rational place" in err
    assert call("h0", "--curve", "{oops", "--divisor", "[]")[0] == 1


def test_usage_errors_exit_2():
    assert call("bogus")[0] == 2
    assert call()[0] == 2
    assert call("h0", "--divisor", "[]")[0] == 2
    assert call("prop4", "--d", "x")[0] == 2
    assert call("rho", "--g", "2")[0] == 2


def test_outputs_round_trip():
    for argv in (
        ["h0", "--curve", CURVE, "--divisor", '[["inf",4],[[3,3],-1]]'],
        ["decompose", "--curve", CURVE, "--divisor", '[[[3,3],1],[[3,4],1]]'],
        ["classify-limit", "--curve", CURVE, "--class", "K"],
    ):
        code, out, _ = call(*argv, "--json")
        assert code == 0
        assert json.dumps(json.loads(out), separators=(",", ":")) == out


def test_survey_small_is_deterministic():
    argv = ["survey", "--seed", "7", "--trials", "2", "--genera", "2", "--json"]
    a, b = call(*argv), call(*argv)
    assert a == b and a[0] == 0
    assert json.loads(a[1])["total_violations"] == 0


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "trivial_limits.cli", "rho", "--g", "2", "--r", "1", "--d", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "0"
