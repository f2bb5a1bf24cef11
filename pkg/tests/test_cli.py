import json
import subprocess
import sys

import jsonschema
import pytest

from corpus import OPERATORS, STATES
from fockspace import schemas
from fockspace.cli import main
from fockspace.dsl import parse_operator, parse_state
from fockspace.fock import evaluate
from fockspace.symfunc import format_elt, from_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


# --- examples --------------------------------------------------------------------------

def test_apply_example(capsys):
    assert run(capsys, "apply", "f_2", "s[2]", "--p", "3")[:2] == (0, "s[3] + s[2,1]")


def test_inner_example(capsys):
    assert run(capsys, "inner", "s[2,1]", "s[2,1]")[:2] == (0, "1")
    assert run(capsys, "inner", "p[2]", "p[2]")[:2] == (0, "2")


def test_basic_rep_example(capsys):
    code, out, _ = run(capsys, "basic-rep", "--p", "2", "--max-degree", "4", "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schemas.SPAN)
    assert [d["dimension"] for d in payload["degrees"]] == [1, 1, 1, 2, 2]
    assert [d["n"] for d in payload["degrees"]] == list(range(5))


def test_basic_rep_text(capsys):
    code, out, _ = run(capsys, "basic-rep", "--p", "3", "--max-degree", "2")
    assert code == 0
    assert out.splitlines()[0] == "degree 0: dimension 1"
    assert "degree 2: dimension 2" in out


def test_convert_and_twist(capsys):
    assert run(capsys, "convert", "p[2]", "s")[:2] == (0, "s[2] - s[1,1]")
    assert run(capsys, "convert", "s[2]", "power")[:2] == (0, "1/2*p[2] + 1/2*p[1,1]")
    assert run(capsys, "twist", "p[2,1]", "--p", "3")[:2] == (0, "p[6,3]")


def test_convert_json(capsys):
    code, out, _ = run(capsys, "convert", "s[2]", "p", "--json")
    payload = json.loads(out)
    jsonschema.validate(payload, schemas.SYMELT)
    assert format_elt(from_json(payload)) == "1/2*p[2] + 1/2*p[1,1]"


def test_core(capsys):
    code, out, _ = run(capsys, "core", "[4,4,2,1]", "--p", "3")
    assert code == 0 and out == "core [1,1]; quotient [1] [] [1,1]"
    code, out, _ = run(capsys, "core", "[4,4,2,1]", "--p", "3", "--json")
    payload = json.loads(out)
    assert payload["core"] == [1, 1] and payload["weight"] == 3


def test_blocks(capsys):
    code, out, _ = run(capsys, "blocks", "[2]", "[1,1]", "[3]", "--p", "2", "--json")
    assert code == 0
    blocks = json.loads(out)["blocks"]
    assert [b["partitions"] for b in blocks] == [[[2], [1, 1]], [[3]]]
    code, out, _ = run(capsys, "blocks", "[2]", "[1,1]", "--p", "3")
    assert len(out.splitlines()) == 2


def test_apply_json_schema(capsys):
    code, out, _ = run(capsys, "apply", "f_0*f_1", "s[1]", "--p", "2", "--json")
    payload = json.loads(out)
    jsonschema.validate(payload["result"], schemas.SYMELT)
    jsonschema.validate(payload["state"], schemas.SYMELT)
    assert payload["p"] == 2


# --- exit codes ---------------------------------------------------------------------------

def test_verify_pass_and_fail(capsys):
    args = ["verify", "chevalley", "--p", "2", "--max-degree", "4"]
    code, out, _ = run(capsys, *args)
    assert code == 0 and out.startswith("chevalley: PASS")
    code, out, _ = run(capsys, *args, "--negative-control")
    assert code == 1 and "FAIL" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "twisted_standard", "--p", "2", "--max-degree", "3",
                       "--bound", "n=2", "--bound", "m=2", "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schemas.REPORT)
    assert payload["config"]["generator_bounds"] == {"m": 2, "n": 2}


def test_verify_negative_control_json(capsys):
    code, out, _ = run(capsys, "verify", "serre", "--p", "3", "--max-degree", "4",
                       "--negative-control", "--json")
    assert code == 1
    payload = json.loads(out)
    jsonschema.validate(payload, schemas.REPORT)
    assert payload["pass"] is False


@pytest.mark.parametrize("argv", [
    ["verify", "frobnicate"],
    ["verify", "twisted_binomial", "--p", "0"],
    ["verify", "chevalley", "--bound", "oops"],
    ["apply", "tmul(e[1])", "s[]", "--p", "0"],
    ["apply", "f_0", "s[1,2]", "--p", "2"],
    ["apply", "f_0 +", "s[]", "--p", "2"],
    ["apply", "f_0", "s[]", "--p", "1"],
    ["core", "[1,3]", "--p", "2"],
    ["core", "[2,1]", "--p", "1"],
    ["convert", "s[1]", "m"],
    ["twist", "s[1]", "--p", "1"],
    ["blocks", "[1]", "--p", "0"],
    ["basic-rep", "--p", "0", "--max-degree", "2"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_p_is_never_defaulted(capsys):
    with pytest.raises(SystemExit) as info:
        main(["apply", "f_0", "s[]"])
    assert info.value.code == 2


def test_leading_minus_after_double_dash(capsys):
    assert run(capsys, "apply", "--p", "2", "--", "-f_0", "s[]")[:2] == (0, "-s[1]")


def test_help_states_composition_order(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    assert "right to left" in capsys.readouterr().out


# --- agreement with the library ------------------------------------------------------------

@pytest.mark.parametrize("expr", OPERATORS)
def test_apply_matches_library(capsys, expr):
    op = parse_operator(expr)
    for state in STATES:
        for pp in (2, 3):
            code, out, _ = run(capsys, "apply", "--p", str(pp), "--json", "--", expr, state)
            assert code == 0
            payload = json.loads(out)
            jsonschema.validate(payload["result"], schemas.SYMELT)
            assert from_json(payload["result"]) == evaluate(op, parse_state(state), pp)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fockspace", "inner", "s[1]", "s[1]"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
