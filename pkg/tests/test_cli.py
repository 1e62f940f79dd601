import io
import json
import subprocess
import sys

import pytest

from alexcircle.cli import run


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_eq_inequivalent():
    code, out, _ = call("eq", "(0;(o,0,0,0);[];[2,2])", "(0;(o,0,0,0);[];[4])")
    assert (code, out) == (1, "inequivalent\n")


def test_eq_equivalent_unless_oriented():
    a, b = "(1;(o,0,0,0);[(3,1)];[])", "(-2;(o,0,0,0);[(3,2)];[])"
    assert call("eq", a, b)[:2] == (0, "equivalent\n")
    assert call("eq", "--oriented", a, b)[:2] == (1, "inequivalent\n")


def test_decompose():
    code, out, _ = call("decompose", "(0;(o,0,0,0);[];[2,2])")
    assert code == 0
    obj = json.loads(out)
    assert obj["manifold"] == {"b": 0, "eps": "o", "g": 0, "f": 2, "t": 0, "pairs": [], "singular": []}
    assert obj["r"] == 2
    assert obj["name"] == "S^2 × S^1 # 2·Susp(RP^2)"
    assert list(obj) == ["manifold", "r", "name"]


def test_decompose_unknown_name_is_null():
    _, out, _ = call("decompose", "(2;(o,1,0,0);[(5,2)];[])")
    assert json.loads(out)["name"] is None


def test_count():
    code, out, _ = call("count", "--r", "2", "--s", "2")
    assert code == 0
    obj = json.loads(out)
    assert (obj["paper_count"], obj["enumerated_count"], obj["agree"]) == (1, 1, True)
    assert out == '{"r":2,"s":2,"paper_count":1,"enumerated_count":1,"agree":true}\n'


def test_count_domain_error():
    code, out, err = call("count", "--r", "1", "--s", "3")
    assert code == 1 and out == "" and err


def test_validate_exit_status():
    assert call("validate", "(0;(o,0,0,0);[];[2])")[:2] == (0, "ok\n")
    code, out, _ = call("validate", "--json", "(1;(o,0,0,0);[];[3])")
    assert code == 1
    rules = {v["rule"] for v in json.loads(out)["violations"]}
    assert rules == {"r_even", "b_boundary"}


def test_parse_error_exit_2():
    code, _, err = call("canon", "(0;(o,0,0,0);[])")
    assert code == 2 and "position" in err


def test_usage_error_exit_2(capsys):
    assert call("frobnicate")[0] == 2
    assert call("eq", "(0;(o,0,0,0);[];[])")[0] == 2


def test_canon_batch_from_stdin():
    lines = "(-2;(o,0,0,0);[(3,2)];[])\n\n(0;(o,0,1,0);[(5,3)];[])\n"
    code, out, _ = call("canon", stdin=lines)
    assert code == 0
    assert out == "(1;(o,0,0,0);[(3,1)];[])\n(0;(o,0,1,0);[(5,2)];[])\n"


def test_canon_fixed_point():
    _, first, _ = call("canon", "(-3;(o,1,0,0);[(5,4),(3,2)];[])")
    _, second, _ = call("canon", first.strip())
    assert first == second


def test_canon_invalid_is_domain_error():
    assert call("canon", "(1;(o,0,1,0);[];[])")[0] == 1


def test_canon_json():
    _, out, _ = call("canon", "--json", "(0;(o,0,1,0);[(5,3)];[])")
    obj = json.loads(out)
    assert obj["canonical"] is True and obj["pairs"] == [[5, 2]]


def test_census_jsonl_and_determinism():
    args = ["census", "--max-f", "1", "--max-s", "1", "--max-r", "1"]
    code, out, _ = call(*args)
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 4 and all(r["canonical"] for r in rows)
    assert call(*args)[1] == out
    assert call(*args, "--jobs", "2")[1] == out
    _, text, _ = call(*args, "--format", "tuple")
    assert text.splitlines()[1] == "(0;(o,0,0,0);[];[2])"


def test_census_bad_bound():
    assert call("census", "--max-pairs", "1", "--max-alpha", "1")[0] == 1


@pytest.mark.parametrize(
    "model, groups, singular",
    [
        ("rp2", [[1, []], [0, [2]], [0, []]], None),
        ("sus_rp2", [[1, []], [0, []], [0, [2]], [0, []]], 2),
        ("sus_rp2^2", [[1, []], [0, []], [1, [2]], [0, []]], 4),
        ("s3", [[1, []], [0, []], [0, []], [1, []]], 0),
        ("s2xs1", [[1, []], [1, []], [1, []], [1, []]], 0),
    ],
)
def test_homology_models(model, groups, singular):
    code, out, _ = call("homology", "--model", model)
    assert code == 0
    obj = json.loads(out)
    assert [[h["rank"], h["torsion"]] for h in obj["H"]] == groups
    assert obj["singular_vertices"] == singular


def test_homology_unknown_model():
    assert call("homology", "--model", "klein")[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "alexcircle", "eq", "(0;(o,0,0,0);[];[2,2])", "(0;(o,0,0,0);[];[4])"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1 and proc.stdout == "inequivalent\n"
