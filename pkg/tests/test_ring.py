import random
from fractions import Fraction

import pytest

from artifact.ring import (FractionDomain, LaurentPoly, ModPDomain, RingMatrix, format_laurent,
                           generic_guard, lp_divide_exact, mat_solve_bareiss, parse_laurent,
                           random_points, rank_fraction, rank_mod_p)


def rand_poly(rng):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        terms[tuple(rng.randint(-2, 2) for _ in range(3))] = rng.randint(-5, 5)
    return LaurentPoly(terms)


def test_ring_axioms_random():
    rng = random.Random(7)
    for _ in range(50):
        p, q, r = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert p * (q + r) == p * q + p * r
        assert (p * q) * r == p * (q * r)
        assert p - p == 0


def test_parse_format_roundtrip():
    for s in ["a^2*b^-1 - 3*c + 1", "-a^-1*b*c", "0", "7"]:
        p = parse_laurent(s)
        assert parse_laurent(format_laurent(p)) == p


def test_exact_division():
    a, b, c = (parse_laurent(v) for v in "abc")
    p = (a - b) * (a * a + b * c)
    assert lp_divide_exact(p, a - b) == a * a + b * c
    assert lp_divide_exact(p + 1, a - b) is None


def test_units():
    assert parse_laurent("-a^2*b^-1").is_unit()
    assert not parse_laurent("a+b").is_unit()


def test_specialize_matches_domains():
    p = parse_laurent("a^2*b^-1 - 3*c + a^-1")
    pt = {"a": Fraction(2), "b": Fraction(-3), "c": Fraction(5, 7)}
    assert FractionDomain(pt).from_lp(p) == p.specialize(pt)
    m = ModPDomain(pt)
    v = p.specialize(pt)
    assert m.from_lp(p) == m.const(v.numerator) / m.const(v.denominator)


def test_random_points_are_generic_and_seeded():
    pts = random_points(3, seed=4)
    assert pts == random_points(3, seed=4)
    assert all(generic_guard(p) != 0 for p in pts)


def test_ranks_agree():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank_fraction([[Fraction(x) for x in r] for r in rows]) == 2
    assert rank_mod_p(rows, 2 ** 31 - 1) == 2


def test_bareiss_solve_and_det():
    a, b = parse_laurent("a"), parse_laurent("b")
    M = RingMatrix([[a, b], [LaurentPoly.const(1), a]])
    rhs = RingMatrix([[a * a], [a]])
    sol = mat_solve_bareiss(M, rhs)
    assert M.det() == a * a - b
    assert sol.entry(0).to_poly() == a and sol.entry(1).to_poly() == 0
