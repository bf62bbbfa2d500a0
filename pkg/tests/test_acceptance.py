"""Acceptance criteria 1-10.

Each criterion prints one PASS/FAIL line (in the pytest terminal summary, or
on stdout when run as a script).  Criteria 3 and 9 each contain one printed
statement that is false as written; the corrected statement is asserted and
the literal one is kept as a strict xfail.
"""
import time

import pytest

from artifact.cli import run_suite
from artifact.freealg import AlgElem, defining_relations
from artifact.h3reps import phi_h3_eval
from artifact.ring import ring_env
from artifact.weights import ALL_BRICKS, brick_report


def _rows(report, names=None):
    rows = report["checks"]
    return [r for r in rows if names is None or r["check"] in names]


def criterion_1():
    t0 = time.perf_counter()
    rep = run_suite("rewrite")
    names = {"enumerate_positive", "enumerate_signed1", "enumerate_signed2", "signed_lists_braid_equal"}
    rows = _rows(rep, names)
    dt = time.perf_counter() - t0
    return dict(ok=all(r["ok"] for r in rows) and len(rows) == 4 and dt < 1.0, seconds=dt)


def criterion_2():
    t0 = time.perf_counter()
    rep = run_suite("membership")
    rows = [r for r in rep["checks"] if r["check"].startswith("rules_in_ideal")]
    total = sum(r["rules"] for r in rows)
    dt = time.perf_counter() - t0
    return dict(ok=all(r["ok"] for r in rows) and total == 52 and dt < 30, rules=total, seconds=dt)


def literal_conjugation_scalar():
    """s2 r1 s1^-1 s2^-1 = ab^2c^2 r2, as printed."""
    e = ring_env()
    a, b, c = e["a"], e["b"], e["c"]
    r1, r2 = defining_relations()
    lhs = AlgElem.word((2,)) * r1 * AlgElem.word((-1, -2))
    return phi_h3_eval(lhs - r2.scale(a * b * b * c * c)).is_zero()


def criterion_3():
    rep = run_suite("h3")
    names = {"phi_r1_block", "phi_r2_block", "phi_r1_other_blocks_zero", "phi_r2_other_blocks_zero",
             "s2_r1_conj", "phi_r1", "psi_r1"}
    rows = _rows(rep, names)
    corrected = all(r["ok"] for r in rows) and len(rows) == len(names)
    literal = literal_conjugation_scalar()
    return dict(ok=corrected and literal, corrected_ok=corrected, literal_ok=literal,
                note="printed scalar ab^2c^2 fails; its inverse holds")


def criterion_4():
    rep = run_suite("h3")
    row = _rows(rep, {"h3_rank_24"})[0]
    return dict(ok=row["ok"] and len(rep["points"]) >= 3, ranks=row["ranks"])


def criterion_5():
    rep = run_suite("q3")
    return dict(ok=rep["ok"], checks=len(rep["checks"]), failures=rep["failures"])


def criterion_6():
    rep = run_suite("a4")
    return dict(ok=rep["ok"] and rep["seconds"] < 60, seconds=rep["seconds"], failures=rep["failures"])


def criterion_7():
    rep = run_suite("trihecke")
    ranks = {r["check"]: r["ranks"] for r in rep["checks"] if r["check"].startswith("k_rank")}
    return dict(ok=rep["ok"], ranks=ranks, failures=rep["failures"])


def criterion_8():
    rep = run_suite("vogel")
    return dict(ok=rep["ok"] and len(rep["parameters"]) >= 2 and rep["seconds"] < 60,
                seconds=rep["seconds"], parameters=rep["parameters"], failures=rep["failures"])


def literal_w_entries():
    """Every printed W' spectrum equals the computed one."""
    return all(brick_report(b)["printed_w_matches"] for b in ALL_BRICKS)


def criterion_9():
    rep = run_suite("weights")
    literal = literal_w_entries()
    return dict(ok=rep["ok"] and literal, corrected_ok=rep["ok"], literal_ok=literal,
                note="one printed W' pair has the wrong trace; computed pair used")


def criterion_10():
    rep = run_suite("handles")
    return dict(ok=rep["ok"] and len(rep["checks"]) == 9, checks=len(rep["checks"]))


CRITERIA = {i: globals()["criterion_%d" % i] for i in range(1, 11)}


def acceptance_line(n, res):
    extra = ", ".join("%s=%s" % (k, v) for k, v in res.items() if k != "ok")
    return "criterion %2d: %s  %s" % (n, "PASS" if res["ok"] else "FAIL", extra)


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, record_line):
    res = CRITERIA[n]()
    record_line(n, acceptance_line(n, res))
    print(acceptance_line(n, res))
    assert res.get("corrected_ok", res["ok"]), res


@pytest.mark.xfail(strict=True, reason="printed conjugation scalar is the inverse of the true one")
def test_literal_conjugation_scalar():
    assert literal_conjugation_scalar()


@pytest.mark.xfail(strict=True, reason="one printed W' pair violates the trace identity")
def test_literal_w_entries():
    assert literal_w_entries()


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        print(acceptance_line(n, CRITERIA[n]()))
