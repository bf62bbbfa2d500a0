from artifact.freealg import AlgElem, cubic, defining_relations
from artifact.h3reps import express_in_basis, h3_rank_at, ideal_membership, phi_h3_eval, signed_basis
from artifact.ring import random_points


def test_cubic_relation_vanishes():
    assert phi_h3_eval(cubic(1)).is_zero() and phi_h3_eval(cubic(2)).is_zero()


def test_membership_and_witness():
    r1, r2 = defining_relations()
    assert ideal_membership(r1) and ideal_membership(r2 * AlgElem.word((1, -2)))
    ok, witness = ideal_membership(AlgElem.word((1,)) - AlgElem.word((2,)), with_witness=True)
    assert not ok and witness is not None


def test_rank_24():
    assert h3_rank_at(random_points(1, seed=11)[0]) == 24


def test_express_in_basis_roundtrip():
    x = AlgElem.word((2, 1, 2, -1))
    coeffs = express_in_basis(x, signed_basis())
    y = AlgElem({w: c for w, c in coeffs.items()})
    assert ideal_membership(x - y)
