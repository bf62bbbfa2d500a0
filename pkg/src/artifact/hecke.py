"""Quadratic Hecke algebras H_n(x, y) in the T_w basis, and their triple sum.

Elements are dicts permutation -> coefficient; the coefficient arithmetic
comes from a domain object (symbolic, rational or mod p, see ring.py).
"""
from __future__ import annotations

from itertools import permutations
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .freealg import AlgElem
from .ring import LaurentDomain, LaurentPoly, RingMatrix, ring_env, rank_mod_p
from .words import Word, shift

Perm = Tuple[int, ...]

PAIRS = (("a", "b"), ("a", "c"), ("b", "c"))


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def perm_length(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def all_perms(n: int) -> List[Perm]:
    return sorted(permutations(range(n)), key=lambda p: (perm_length(p), p))


class HeckeElem:
    __slots__ = ("terms", "n", "x", "y", "dom")

    def __init__(self, terms: Dict[Perm, object], n: int, x, y, dom):
        self.terms = {k: v for k, v in terms.items() if not dom.is_zero(v)}
        self.n, self.x, self.y, self.dom = n, x, y, dom

    @classmethod
    def one(cls, n, x, y, dom) -> "HeckeElem":
        return cls({identity_perm(n): dom.one}, n, x, y, dom)

    def _like(self, terms) -> "HeckeElem":
        return HeckeElem(terms, self.n, self.x, self.y, self.dom)

    def __add__(self, o: "HeckeElem") -> "HeckeElem":
        t = dict(self.terms)
        for k, v in o.terms.items():
            t[k] = t[k] + v if k in t else v
        return self._like(t)

    def __sub__(self, o: "HeckeElem") -> "HeckeElem":
        return self + o.scale(-self.dom.one)

    def scale(self, c) -> "HeckeElem":
        return self._like({k: v * c for k, v in self.terms.items()})

    def times_gen(self, i: int) -> "HeckeElem":
        """Right multiplication by T_{s_i} (1-based i), or its inverse if i < 0."""
        x, y, dom = self.x, self.y, self.dom
        s = x + y
        j = abs(i) - 1
        out: Dict[Perm, object] = {}

        def acc(k, v):
            if k in out:
                out[k] = out[k] + v
            else:
                out[k] = v

        if i > 0:
            xy = x * y
            for w, c in self.terms.items():
                ws = w[:j] + (w[j + 1], w[j]) + w[j + 2:]
                if w[j] < w[j + 1]:
                    acc(ws, c)
                else:
                    acc(w, c * s)
                    acc(ws, -(c * xy))
        else:
            # T^-1 = (x + y - T)/(xy); on a descent T_w T^-1 = T_{ws}
            ixy = dom.inv(x * y)
            for w, c in self.terms.items():
                ws = w[:j] + (w[j + 1], w[j]) + w[j + 2:]
                if w[j] < w[j + 1]:
                    acc(w, c * s * ixy)
                    acc(ws, -(c * ixy))
                else:
                    acc(ws, c)
        return self._like(out)

    def __mul__(self, o: "HeckeElem") -> "HeckeElem":
        out = self._like({})
        for w, c in o.terms.items():
            out = out + self.times_word(reduced_word(w)).scale(c)
        return out

    def times_word(self, word: Sequence[int]) -> "HeckeElem":
        e = self
        for i in word:
            e = e.times_gen(i)
        return e

    def coeff(self, w: Perm):
        return self.terms.get(w, self.dom.zero)

    def q(self, value):
        """Image under T_w -> value^len(w)."""
        tot = self.dom.zero
        for w, c in self.terms.items():
            tot = tot + c * value ** perm_length(w)
        return tot

    def vector(self) -> list:
        return [self.coeff(p) for p in all_perms(self.n)]

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, o):
        return isinstance(o, HeckeElem) and (self - o).is_zero()

    def __repr__(self):
        return "HeckeElem(n=%d, %r)" % (self.n, self.terms)


def reduced_word(p: Perm) -> Word:
    """A reduced word (1-based letters) for p, found by bubble sort."""
    p = list(p)
    out = []
    changed = True
    while changed:
        changed = False
        for j in range(len(p) - 1):
            if p[j] > p[j + 1]:
                p[j], p[j + 1] = p[j + 1], p[j]
                out.append(j + 1)
                changed = True
    return tuple(reversed(out))


def hecke_eval_word(w: Sequence[int], x, y, n: int = None, dom=None) -> HeckeElem:
    dom = dom or LaurentDomain()
    n = n or (max([abs(i) for i in w] + [1]) + 1)
    return HeckeElem.one(n, x, y, dom).times_word(w)


def hecke_eval(elem: AlgElem, x, y, dom=None, n: int = None) -> HeckeElem:
    dom = dom or LaurentDomain()
    n = n or elem.strands
    out = HeckeElem({}, n, x, y, dom)
    one = HeckeElem.one(n, x, y, dom)
    for w, c in elem.terms.items():
        out = out + one.times_word(w).scale(dom.from_lp(c))
    return out


def pair_params(dom, pair):
    return dom.var(pair[0]), dom.var(pair[1])


class TripleElem:
    """(z_c, z_b, z_a) in H_n(a,b) + H_n(a,c) + H_n(b,c)."""
    __slots__ = ("components",)

    def __init__(self, components: Sequence[HeckeElem]):
        if len({z.n for z in components}) != 1:
            raise ValueError("components on different strand counts")
        self.components = tuple(components)

    def is_zero(self) -> bool:
        return all(z.is_zero() for z in self.components)

    def vector(self) -> list:
        v = []
        for z in self.components:
            v.extend(z.vector())
        return v


def triple_embed(x: AlgElem, dom=None) -> TripleElem:
    dom = dom or LaurentDomain()
    return TripleElem([hecke_eval(x, *pair_params(dom, p), dom=dom) for p in PAIRS])


def fiber_check(t: TripleElem) -> bool:
    zc, zb, za = t.components
    dom = zc.dom
    a, b, c = dom.var("a"), dom.var("b"), dom.var("c")
    eq = lambda u, v: dom.is_zero(u - v)
    return eq(zc.q(a), zb.q(a)) and eq(zc.q(b), za.q(b)) and eq(zb.q(c), za.q(c))


def k_basis(n: int) -> List[Word]:
    """Recursive word basis of the tripled algebra on n strands."""
    if not 1 <= n <= 6:
        raise ValueError("n must be between 1 and 6")
    if n == 1:
        return [()]
    basis: List[Word] = [(), (1,), (-1,)]
    b2 = list(basis)
    for m in range(2, n):
        new: List[Word] = []
        for k in range(m + 1):
            s = tuple(range(m, m - k, -1))
            new.extend(w + s for w in basis)
        for k in range(1, m + 1):
            xp = tuple(range(m, m - k + 1, -1)) + (-(m - k + 1),)
            new.extend(w + xp for w in b2)
        basis = new
    return basis


def k_dimension(n: int) -> int:
    return 1 if n == 1 else 3 * (factorial(n) - 1)


def triple_vectors(words: Sequence[Word], n: int, dom) -> List[list]:
    """Coordinates of the triple images of words, sharing work over prefixes."""
    rows = []
    for pair in PAIRS:
        x, y = pair_params(dom, pair)
        cache: Dict[Word, HeckeElem] = {(): HeckeElem.one(n, x, y, dom)}

        def ev(w):
            if w not in cache:
                cache[w] = ev(w[:-1]).times_gen(w[-1])
            return cache[w]

        rows.append([ev(tuple(w)).vector() for w in words])
    return [r0 + r1 + r2 for r0, r1, r2 in zip(*rows)]


def k_span_rank(n: int, dom) -> int:
    """Rank of the triple images of k_basis(n); dom must be a mod-p domain."""
    rows = triple_vectors(k_basis(n), n, dom)
    return rank_mod_p([[x.v for x in r] for r in rows], dom.p)


def fiber_codimension(n: int, dom) -> int:
    """Number of independent linear conditions the fiber product imposes on
    the 3 n! coordinates (expected 3)."""
    a, b, c = dom.var("a"), dom.var("b"), dom.var("c")
    perms = all_perms(n)
    N = len(perms)
    ls = [perm_length(p) for p in perms]
    zero = [dom.zero] * N
    q = lambda t: [t ** l for l in ls]
    conds = [q(a) + [-x for x in q(a)] + zero,
             q(b) + zero + [-x for x in q(b)],
             zero + q(c) + [-x for x in q(c)]]
    return rank_mod_p([[x.v for x in r] for r in conds], dom.p)


# ---------------------------------------------------------------------------
# relations valid in every quadratic quotient

def bracket_b(strands: int = 3) -> AlgElem:
    """[s_2^2, s_1] - [s_2, s_1^2]."""
    return AlgElem.combo([(1, (2, 2, 1)), (-1, (1, 2, 2)), (-1, (2, 1, 1)), (1, (1, 1, 2))], strands)


def _cubic_gen(i: int, strands: int) -> AlgElem:
    env = ring_env()
    return AlgElem.combo([(1, (i, i, i)), (-env["u"], (i, i)), (env["v"], (i,)), (-env["w"], ())], strands)


def ternary_relations() -> List[Tuple[str, AlgElem]]:
    """Each relation as left side minus right side."""
    env = ring_env()
    u, v, w = env["u"], env["v"], env["w"]
    c3 = lambda pairs: AlgElem.combo(pairs, 3)
    c4 = lambda pairs: AlgElem.combo(pairs, 4)
    rels = [
        ("n3.1.s1", _cubic_gen(1, 3)),
        ("n3.1.s2", _cubic_gen(2, 3)),
        ("n3.2", c3([(1, (2, 2, 1)), (-1, (2, 1, 1)), (1, (1, 1, 2)), (-1, (1, 2, 2))])),
        ("n3.3", c3([(1, (2, 1, 1, 2)), (w, (1,)), (-v, (1, 2)), (-1, (1, 2, 1, 1)),
                     (u, (1, 2, 2)), (-1, (1, 1, 2, 2))])),
        ("n4.1", c4([(1, (2, 3, 3)), (1, (1, 1, 3)), (-1, (1, 1, 2)), (-1, (2, 2, 3)),
                     (1, (1, 2, 2)), (-1, (1, 3, 3))])),
        ("n4.2", c4([(1, (2, 2, 3, 1)), (-1, (2, 1, 1, 3)), (1, (1, 1, 2, 3)), (-1, (1, 2, 2, 3))])),
    ]
    common = [(w, (1,)), (-v, (1, 3)), (u, (1, 1, 3)), (-w, (2,)), (v, (2, 3)),
              (-u, (1, 1, 2)), (-u, (2, 2, 3)), (u, (1, 2, 2)), (-1, (1, 1, 3, 3))]
    rels.append(("n4.3", c4([(1, (2, 2, 3, 3))] + common +
                            [(1, (1, 1, 2, 3)), (-1, (1, 2, 2, 3))])))
    rels.append(("n4.4", c4([(1, (2, 2, 3, 3))] + common +
                            [(-1, (2, 2, 1, 3)), (1, (2, 1, 1, 3))])))
    return rels


def verify_ternary_relations(dom=None) -> List[dict]:
    """Evaluate every relation in the three quadratic Hecke algebras."""
    dom = dom or LaurentDomain()
    out = []
    for name, rel in ternary_relations():
        t = triple_embed(rel, dom)
        out.append({"relation": name, "strands": rel.strands,
                    "zero": [z.is_zero() for z in t.components]})
    return out


def shifted(x: AlgElem, k: int = 1) -> AlgElem:
    return AlgElem({shift(w, k): c for w, c in x.terms.items()}, x.strands + k)


def expected_b_vblock() -> RingMatrix:
    return RingMatrix.from_exprs([
        ["-(a-c)*(a*c+b^2)", "2*c*(a+b)-a*b-c^2", "(a-c)*(a*c+b^2)"],
        ["-(a*c+b^2)*(a^2+b*c-2*a*(b+c))", "2*(a-c)*(a*c+b^2)", "(a*c+b^2)*(a^2+b*c-2*a*(b+c))"],
        ["(a-c)*(a*c+b^2)", "a*b+c^2-2*c*(a+b)", "-(a-c)*(a*c+b^2)"],
    ])


def verify_bracket_b() -> List[dict]:
    """b vanishes in the three quadratic quotients; its V-block is the printed matrix."""
    from .h3reps import block_matrix, phi_h3_eval
    b = bracket_b()
    t = triple_embed(b)
    img = phi_h3_eval(b)
    vb = block_matrix(img, "V")
    return [
        dict(check="b_triple_zero", ok=all(z.is_zero() for z in t.components)),
        dict(check="b_fiber", ok=fiber_check(t)),
        dict(check="b_vblock_printed", ok=vb == expected_b_vblock()),
        dict(check="b_only_v_block", ok=img.nonzero_blocks() == ["V"]),
    ]
