import pytest

from artifact.cli import SIGNED1_TABLE, SIGNED2_TABLE, printed_positive, printed_signed
from artifact.freealg import AlgElem
from artifact.rewrite import (StepCapExceeded, build_system, check_local_confluence, enumerate_avoiding,
                              normal_form, nf_word)

EXPECTED = {"positive": printed_positive(), "signed1": printed_signed(SIGNED1_TABLE),
            "signed2": printed_signed(SIGNED2_TABLE)}


@pytest.mark.parametrize("name,count", [("positive", 8), ("signed1", 23), ("signed2", 21)])
def test_rule_counts(name, count):
    assert len(build_system(name).rules) == count


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_enumeration(name):
    got = enumerate_avoiding(build_system(name))
    assert len(got) == 20 and set(got) == set(EXPECTED[name])


def test_pos_normal_form_of_braid():
    assert nf_word((2, 1, 2), build_system("pos")) == AlgElem.word((1, 2, 1))


@pytest.mark.parametrize("name", ["positive", "signed1", "signed2"])
def test_leftmost_rightmost_agree(name):
    sys_ = build_system(name)
    basis = enumerate_avoiding(sys_)
    samples = [u + v for u in basis for v in basis if len(u + v) <= 4]
    assert check_local_confluence(sys_, samples) == []


def test_nf_is_linear():
    sys_ = build_system("signed1")
    x, y = AlgElem.word((2, 1, 2, 1)), AlgElem.word((-1, -2, -1))
    assert normal_form(x + y, sys_) == normal_form(x, sys_) + normal_form(y, sys_)


def test_step_cap(monkeypatch):
    monkeypatch.setenv("ARTIFACT_STEP_CAP", "1")
    with pytest.raises(StepCapExceeded):
        normal_form(AlgElem.word((2, 1, 2, 1, 2, 1)), build_system("pos"))


def test_rejects_foreign_letters():
    with pytest.raises(ValueError):
        normal_form(AlgElem.word((3,), strands=4), build_system("pos"))
