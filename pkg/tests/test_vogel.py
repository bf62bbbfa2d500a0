from fractions import Fraction

import pytest

from artifact.vogel import (BrauerDiagram, b3_span_check, brauer_mul, factor_criterion, model_eight,
                            model_six, model_v3, morphism_factor_check, verify_v2, verify_vogel_relations)

PARAMS = [(Fraction(3), Fraction(-1)), (Fraction(5), Fraction(-2))]


def test_brauer_loop_factor():
    e = BrauerDiagram.p(2, 0, 1)
    d, factor = brauer_mul(e, e, m=5)
    assert d == e and factor == 5


def test_brauer_permutations_compose():
    s = BrauerDiagram.transposition(3, 0, 1)
    d, factor = brauer_mul(s, s)
    assert d == BrauerDiagram.identity(3) and factor == 1


@pytest.mark.parametrize("alpha,beta", PARAMS)
@pytest.mark.parametrize("model", [model_v3, model_six, model_eight])
def test_models(model, alpha, beta):
    rep = model(alpha, beta)
    rows = verify_vogel_relations(rep, alpha, beta)
    assert all(r["ok"] for r in rows), [r["check"] for r in rows if not r["ok"]]


@pytest.mark.parametrize("alpha,beta", PARAMS)
def test_v2_and_span(alpha, beta):
    assert all(r["ok"] for r in verify_v2(alpha, beta))
    assert all(r["ok"] for r in b3_span_check(alpha, beta))


@pytest.mark.parametrize("kind", ["phi", "psi"])
def test_morphism_criterion_sample(kind):
    alpha, beta = PARAMS[0]
    for u, v, m in [(1, 0, 2), (Fraction(1, 2), 1, 3), (2, -1, -2)]:
        assert morphism_factor_check(kind, u, v, m, alpha, beta) == factor_criterion(kind, u, v, m, alpha, beta)
