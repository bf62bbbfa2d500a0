from artifact.freealg import AlgElem, apply_symmetry, cubic, defining_relations
from artifact.ring import parse_laurent


def test_words_free_reduce_on_product():
    assert AlgElem.word((1,)) * AlgElem.word((-1,)) == AlgElem.one()


def test_json_roundtrip():
    r1, r2 = defining_relations()
    for x in (r1, r2, cubic(1)):
        assert AlgElem.from_json(x.to_json()) == x


def test_symmetries_are_involutions():
    r1, _ = defining_relations()
    for kind in ("phi", "psi"):
        assert apply_symmetry(apply_symmetry(r1, kind), kind) == r1


def test_scale_and_coeff():
    a = parse_laurent("a")
    x = AlgElem.word((1, 2)).scale(a)
    assert x.coeff((1, 2)) == a and len(x) == 1
