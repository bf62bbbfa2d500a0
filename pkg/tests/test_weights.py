import pytest

from artifact.weights import (ALL_BRICKS, TAU_PRINTED, NPoly, W_, brick_report, casimir, check_exp_identity,
                              never_equal, tau_eigenvalue)


def test_casimir_of_zero_and_fundamental():
    assert casimir(W_("0")) == NPoly()
    # (w1, w1 + 2 rho) = 1 - 1/n + n - 1
    assert casimir(W_("w1")) == NPoly({1: 1, -1: -1})


@pytest.mark.parametrize("lam", sorted(TAU_PRINTED))
def test_tau(lam):
    assert tau_eigenvalue(W_(lam)) == TAU_PRINTED[lam]


def test_never_equal():
    assert never_equal(NPoly({1: 1}), NPoly({0: 3}))
    assert not never_equal(NPoly({1: 1}), NPoly({0: 8}))


def test_bricks_irreducible():
    for b in ALL_BRICKS:
        r = brick_report(b)
        assert r["irreducible"] and r["reflection"] and r["trace_balanced"], r["check"]


def test_exp_identity():
    assert all(check_exp_identity(9).values())
