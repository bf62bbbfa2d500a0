import pytest

from artifact.a4tilde import (a4_apply, a4_consistency_check, build_action_tables, cardinality_ledger,
                              parse_vector, unit)


@pytest.fixture(scope="module")
def tables():
    return build_action_tables()


def test_consistency(tables):
    rows = a4_consistency_check(tables)
    assert rows and all(r["ok"] for r in rows), [r["check"] for r in rows if not r["ok"]]


def test_left_braid_on_vectors(tables):
    for i in (1, 7, 25):
        v = unit(i)
        assert a4_apply((1, 2, 1), "left", v, tables) == a4_apply((2, 1, 2), "left", v, tables)


def test_inverse_letters(tables):
    v = parse_vector("e_4")
    assert a4_apply((1, -1), "right", v, tables) == v


def test_cardinalities():
    rows = cardinality_ledger()
    assert [r["count"] for r in rows] == [20, 136, 201, 219, 239, 264]
    assert all(r["ok"] for r in rows)
