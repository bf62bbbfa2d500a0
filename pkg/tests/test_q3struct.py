from artifact.h3reps import verify_alt_basis
from artifact.q3struct import verify_q3_structure


def test_alt_basis():
    rows = verify_alt_basis()
    assert rows and all(r["ok"] for r in rows), [r for r in rows if not r["ok"]]


def test_structure():
    rows = verify_q3_structure()
    assert rows and all(r["ok"] for r in rows), [r for r in rows if not r["ok"]]
