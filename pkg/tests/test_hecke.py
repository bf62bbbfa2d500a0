from fractions import Fraction

import pytest

from artifact.freealg import AlgElem
from artifact.hecke import (bracket_b, fiber_check, hecke_eval_word, k_basis, k_dimension, k_span_rank,
                            triple_embed, verify_bracket_b, verify_ternary_relations)
from artifact.ring import LaurentDomain, ModPDomain, random_points


def test_quadratic_relation():
    dom = LaurentDomain()
    x, y = dom.var("a"), dom.var("b")
    s = hecke_eval_word((1,), x, y, n=3, dom=dom)
    one = hecke_eval_word((), x, y, n=3, dom=dom)
    assert (s * s - s.scale(x + y) + one.scale(x * y)).is_zero()


def test_braid_relation():
    dom = LaurentDomain()
    x, y = dom.var("a"), dom.var("c")
    assert hecke_eval_word((1, 2, 1), x, y, dom=dom) == hecke_eval_word((2, 1, 2), x, y, dom=dom)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_k_rank(n):
    assert len(k_basis(n)) == k_dimension(n) == 3 * (1 if n < 2 else __import__("math").factorial(n) - 1)
    assert k_span_rank(n, ModPDomain(random_points(1, seed=2)[0])) == k_dimension(n)


def test_fiber_and_b():
    assert fiber_check(triple_embed(AlgElem.word((1, -2, 1))))
    assert triple_embed(bracket_b()).is_zero()
    assert all(r["ok"] for r in verify_bracket_b())


def test_ternary_relations():
    assert all(all(r["zero"]) for r in verify_ternary_relations())
