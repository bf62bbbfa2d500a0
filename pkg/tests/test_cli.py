import json

import pytest

from artifact.cli import run_command


def run(capsys, *argv):
    code = run_command(list(argv))
    return code, capsys.readouterr().out


def test_nf(capsys):
    code, out = run(capsys, "nf", "--system", "pos", "2 1 2")
    assert code == 0 and json.loads(out) == {"terms": [{"coeff": "1", "word": [1, 2, 1]}]}


def test_parse_error_exit_2(capsys):
    code, out = run(capsys, "nf", "--system", "pos", "2 x")
    assert code == 2 and "position" in json.loads(out)["error"]


def test_usage_error_exit_2(capsys):
    assert run_command(["frobnicate"]) == 2


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--system", "signed2")
    assert code == 0 and json.loads(out)["count"] == 20


def test_member(capsys):
    code, out = run(capsys, "member", "r2")
    assert code == 0 and json.loads(out)["member"] is True


def test_a4_apply(capsys):
    code, out = run(capsys, "a4", "apply", "--side", "left", "--word", "", "--vector", "e_4")
    assert code == 0 and json.loads(out)["vector"] == [{"coeff": "1", "basis": "e4"}]


def test_dims(capsys):
    code, out = run(capsys, "dims")
    assert json.loads(out) == {"Q3": 20, "Q4": 264, "H3": 24,
                               "K": {"2": 3, "3": 15, "4": 69, "5": 357}, "V3": 20}


@pytest.mark.parametrize("suite", ["rewrite", "handles", "weights"])
def test_verify_suite(capsys, suite):
    code, out = run(capsys, "verify", suite)
    rep = json.loads(out)
    assert code == 0 and rep["ok"] and rep["schema"] == 1


def test_verify_spec_point(capsys):
    code, out = run(capsys, "verify", "--suite", "h3", "--spec", "2,3,5")
    rep = json.loads(out)
    assert code == 0 and rep["points"][0] == {"a": "2", "b": "3", "c": "5"}


def test_bad_spec(capsys):
    code, _ = run(capsys, "verify", "--suite", "h3", "--spec", "2,3")
    assert code == 2


def test_trihecke_single_n(capsys):
    code, out = run(capsys, "verify", "trihecke", "--n", "3")
    rep = json.loads(out)
    assert code == 0 and [r["ranks"] for r in rep["checks"] if r["check"] == "k_rank_n3"] == [[15, 15, 15]]


def test_nf_output_reparses(capsys):
    _, first = run(capsys, "nf", "--system", "signed1", "2 2 2 1")
    _, second = run(capsys, "nf", "--system", "signed1", first.strip())
    assert json.loads(first) == json.loads(second)
