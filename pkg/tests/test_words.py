import pytest

from artifact.words import (braid_equal_bfs, format_word, free_reduce, handle_identity, handle_template,
                            inverse_rev, parse_word, perm_image, writhe)


def test_parse_forms():
    assert parse_word("1 -2 1") == (1, -2, 1)
    assert parse_word("e") == ()
    assert format_word((1, -2)) == "1 -2"
    with pytest.raises(ValueError):
        parse_word("1 x")


def test_free_reduce():
    assert free_reduce((1, 2, -2, -1, 1)) == (1,)
    assert free_reduce((1, 2) + inverse_rev((1, 2))) == ()


def test_invariants():
    assert perm_image((1, 2, 1), 3) == perm_image((2, 1, 2), 3)
    assert writhe((1, -2, 1)) == 1


def test_braid_relation_found():
    assert braid_equal_bfs((1, 2, 1), (2, 1, 2)) == "equal"
    assert braid_equal_bfs((2, 1, -2), (-1, 2, 1)) == "equal"
    assert braid_equal_bfs((1, 3), (3, 1)) == "equal"


def test_distinct_braids_not_equal():
    assert braid_equal_bfs((1, 2), (2, 1)) == "unknown"
    assert braid_equal_bfs((1,), (-1,)) == "unknown"


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("side", "AB")
def test_handle_identities(n, side):
    lhs, rhs = handle_identity(n, side)
    assert braid_equal_bfs(lhs, rhs) == "equal"


def test_handle_template_rejects_high_letters():
    with pytest.raises(ValueError):
        handle_template(3, [(2,)])
    lhs, rhs = handle_template(3, [(1,), (-1,)])
    assert braid_equal_bfs(lhs, rhs) == "equal"
