"""Q_3 as a Q_2-bimodule: the filtration Q_2 = M_2 < M_1 < Q_3, the layer
M_+ generated by s_2, the spanning statements built from Q_2 s_2^k Q_2, and
the five-word spanning set of a quotient by a left ideal.

Coordinates are always signed1 normal-form coordinates, each certified a
second time through the 20 embedding coordinates (see express_in_basis).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import AlgElem
from .h3reps import (Evaluator, equal_in_q3, express_in_basis, phi_h3_eval, signed_basis)
from .ring import LaurentPoly, ModPDomain, format_laurent, random_points, rank_mod_p, ring_env
from .rewrite import build_system, normal_form
from .words import Word, braid_equal_bfs


@dataclass(frozen=True)
class FiltrationLayer:
    name: str
    words: Tuple[Word, ...]
    rank: int


LAYERS = (
    FiltrationLayer("M_2", ((), (1,), (-1,)), 3),
    FiltrationLayer("M_+", ((2,), (1, 2), (-1, 2), (2, -1), (2, 1), (1, 2, 1), (1, 2, -1),
                            (-1, 2, 1), (-1, 2, -1)), 9),
    FiltrationLayer("M'_1/M_+", ((-2,), (1, -2), (-1, -2), (-2, -1), (-2, 1), (1, -2, 1),
                                 (1, -2, -1)), 7),
    FiltrationLayer("Q_3/M_1", ((2, -1, 2),), 1),
)

TOP = (2, -1, 2)
TOP_ALT = (-2, 1, -2)


def _env():
    return ring_env()


def align(w: Word) -> Optional[Word]:
    """The signed1 basis word equal to w in the braid group, if any."""
    basis = signed_basis()
    if w in basis:
        return w
    for b in basis:
        if len(b) == len(w) and braid_equal_bfs(w, b, budget=10 ** 4) == "equal":
            return b
    return None


def layer_words(*names: str) -> List[Word]:
    """Basis words of the named layers (layer words aligned to the basis)."""
    out: List[Word] = []
    for l in LAYERS:
        if l.name in names:
            out.extend(align(w) for w in l.words)
    return out


def coords(x: AlgElem) -> Dict[Word, LaurentPoly]:
    return {w: v for w, v in express_in_basis(x, signed_basis()).items() if not v.is_zero()}


def kernel_elements() -> List[AlgElem]:
    """Two elements of the kernel of x (x) y -> x 2bar y onto M'_1/M_+."""
    e = _env()
    a, b, c, u, v, w = (e[k] for k in "abcuvw")
    k1 = AlgElem.combo([(1, (-1, -2, 1)), (-1, (1, -2, -1)), (a, (-2, -1)), (-a ** -1, (-2, 1)),
                        (-a, (-1, -2)), (a ** -1, (1, -2))])
    wi = w ** -1
    k2 = AlgElem.combo([(1, (-1, -2, -1)), ((b + c) * wi, (1, -2, -1)), (wi * a ** -1, (1, -2, 1)),
                        (-(v * wi), (-2, -1)), (-wi, (-2, 1)), (-a ** -1, (-1, -2)),
                        (-(u * wi * a ** -1), (1, -2)), ((a * a + v) * wi * a ** -1, (-2,))])
    return [k1, k2]


def _in_q2_s2k_q2(w: Word) -> bool:
    """w = x s_2^k y with x, y in {1, s_1, s_1^-1}, k in {0, 1, -1}."""
    q2 = ((), (1,), (-1,))
    for x in q2:
        for y in q2:
            for k in ((), (2,), (-2,)):
                if x + k + y == w:
                    return True
    return False


def verify_filtration() -> List[dict]:
    e = _env()
    a, b, c = e["a"], e["b"], e["c"]
    out = []

    def rec(name, ok, **kw):
        out.append(dict(check=name, ok=bool(ok), **kw))

    basis = signed_basis()
    allw = layer_words(*(l.name for l in LAYERS))
    rec("layers_partition_basis", None not in allw and sorted(allw) == sorted(basis)
        and len(set(allw)) == 20, ranks=[len(l.words) for l in LAYERS],
        aligned={" ".join(map(str, w)): " ".join(map(str, align(w)))
                 for l in LAYERS for w in l.words if align(w) != w})
    rec("layer_ranks", all(len(l.words) == l.rank for l in LAYERS))
    rec("q2_embeds", all(normal_form(AlgElem.word(w), build_system("signed1")) == AlgElem.word(w)
                         for w in layer_words("M_2")))
    m1 = set(layer_words("M_2", "M_+", "M'_1/M_+"))
    zero = LaurentPoly.const(0)
    for side, x in (("left", AlgElem.word((1,)) * AlgElem.word(TOP)),
                    ("right", AlgElem.word(TOP) * AlgElem.word((1,)))):
        cf = coords(x)
        top = cf.get(TOP, zero)
        rec("top_%s_eigenvalue_a" % side, top == a and set(cf) - {TOP} <= m1,
            value=format_laurent(top))
    cf = coords(AlgElem.word(TOP_ALT))
    top = cf.get(TOP, zero)
    rec("top_alt_coefficient_bc_inverse", top * b * c == 1 and set(cf) - {TOP} <= m1,
        value=format_laurent(top))
    low = set(layer_words("M_2", "M_+"))
    for i, k in enumerate(kernel_elements(), 1):
        cf = coords(k)
        rec("kernel_%d_in_M_plus" % i, set(cf) <= low, support=[list(w) for w in cf])
    # spanning statements: Q_2 + Q_2 s_2 Q_2 + Q_2 s_2^-1 Q_2 + R.top
    rec("span_with_top", all(_in_q2_s2k_q2(w) or w == TOP for l in LAYERS for w in l.words))
    # replacing the top word by s_2^-1 s_1 s_2^-1 is unitriangular with a unit pivot
    unit = top.is_unit()
    literal = {align(w): w for l in LAYERS for w in l.words}
    rec("span_with_top_alt", unit and all(_in_q2_s2k_q2(literal[w]) for w in cf if w != TOP))
    return out


# ---------------------------------------------------------------------------
# the quotient of Q_3 by the left ideal generated by (2 - a)1 and (2 - a)(1 - a 1bar)

FIVE = ((), (1,), (-1,), (2,), (-2,))


class Cert:
    """sum(coeff * v for v in FIVE) + q1 g1 + q2 g2, with q1, q2 left multipliers."""

    def __init__(self, v: Optional[Dict[Word, LaurentPoly]] = None, q1: AlgElem = None, q2: AlgElem = None):
        self.v = {k: c for k, c in (v or {}).items() if not c.is_zero()}
        self.q1 = q1 if q1 is not None else AlgElem.zero()
        self.q2 = q2 if q2 is not None else AlgElem.zero()

    def __add__(self, o: "Cert") -> "Cert":
        v = dict(self.v)
        for k, c in o.v.items():
            v[k] = v[k] + c if k in v else c
        return Cert(v, self.q1 + o.q1, self.q2 + o.q2)

    def scale(self, s) -> "Cert":
        return Cert({k: c * s for k, c in self.v.items()}, self.q1.scale(s), self.q2.scale(s))

    def value(self) -> AlgElem:
        g1, g2 = ideal_generators()
        out = AlgElem({k: c for k, c in self.v.items()})
        return out + self.q1 * g1 + self.q2 * g2


def ideal_generators() -> Tuple[AlgElem, AlgElem]:
    a = _env()["a"]
    t = AlgElem.word((2,)) - AlgElem.one().scale(a)
    return t * AlgElem.word((1,)), t * (AlgElem.one() - AlgElem.word((-1,)).scale(a))


class QuotientSpan:
    """Left multiplication on V + I, V the span of FIVE."""

    def __init__(self):
        self.memo: Dict[Tuple[int, Word], Cert] = {}

    def _base(self, g: int, v: Word) -> Optional[Cert]:
        e = _env()
        a, u, vv, w = e["a"], e["u"], e["v"], e["w"]
        one = LaurentPoly.const(1)
        if not v:
            return Cert({(g,): one})
        if v == (-g,):
            return Cert({(): one})
        if g in (1, 2) and v == (g,):
            # s^2 = u s - v + w s^-1
            return Cert({(g,): u, (): -vv, (-g,): w})
        if g in (-1, -2) and v == (g,):
            # s^-2 = (v/w) s^-1 + w^-1 s - u/w
            wi = w ** -1
            return Cert({(g,): vv * wi, (-g,): wi, (): -(u * wi)})
        if g == 2 and v == (1,):
            return Cert({(1,): a}, q1=AlgElem.one())
        if g == 2 and v == (-1,):
            ai = a ** -1
            return Cert({(2,): ai, (): -one, (-1,): a}, q2=AlgElem.one().scale(-ai))
        return None

    def mul(self, g: int, x: Cert) -> Cert:
        out = Cert(q1=AlgElem.word((g,)) * x.q1, q2=AlgElem.word((g,)) * x.q2)
        for v, c in x.v.items():
            out = out + self.letter(g, v).scale(c)
        return out

    def word(self, ws: Sequence[int], x: Cert) -> Cert:
        for g in reversed(tuple(ws)):
            x = self.mul(g, x)
        return x

    def letter(self, g: int, v: Word) -> Cert:
        key = (g, v)
        if key in self.memo:
            return self.memo[key]
        r = self._base(g, v)
        if r is None:
            e = _env()
            u, vv, w = e["u"], e["v"], e["w"]
            start = Cert({v: LaurentPoly.const(1)})
            if g == 1 and v == (2,):
                # 12 = 2bar 2 1 2 = 2bar 1 (2 1)
                r = self.word((-2, 1), self.mul(2, Cert({(1,): LaurentPoly.const(1)})))
            elif g == 1 and v == (-2,):
                # 1 2bar = 2bar 2 1 2bar = 2bar 1bar (2 1)
                r = self.word((-2, -1), self.mul(2, Cert({(1,): LaurentPoly.const(1)})))
            elif g < 0:
                # s^-1 = w^-1 (s^2 - u s + v)
                h = -g
                s1 = self.mul(h, start)
                r = (self.mul(h, s1) + s1.scale(-u) + start.scale(vv)).scale(w ** -1)
            else:
                raise KeyError(key)
        self.memo[key] = r
        return r


def verify_quotient_span(with_rank: bool = True, seed: int = 0) -> List[dict]:
    """For each letter g and each v in FIVE, g.v = (element of V) + q1 g1 + q2 g2,
    checked by signed1 normal form and independently on the embedding."""
    out = []
    qs = QuotientSpan()
    sys = build_system("signed1")
    for g in (1, 2, -1, -2):
        for v in FIVE:
            cert = qs.letter(g, v)
            diff = AlgElem.word((g,) + v) - cert.value()
            ok_nf = normal_form(diff, sys).is_zero()
            ok_phi = phi_h3_eval(diff).is_zero(quotient=True)
            out.append(dict(check="quotient_span_%d_times_%s" % (g, " ".join(map(str, v)) or "e"),
                            ok=ok_nf and ok_phi, nf=ok_nf, phi=ok_phi,
                            coeffs={" ".join(map(str, k)) or "e": format_laurent(c)
                                    for k, c in sorted(cert.v.items())}))
    if with_rank:
        out.extend(_quotient_rank(seed))
    return out


def _quotient_rank(seed: int) -> List[dict]:
    """At a generic point: the left ideal has rank 19, so the quotient is a
    line (only S_a survives), and the five words span it."""
    pt = random_points(1, seed)[0]
    dom = ModPDomain(pt)
    ev = Evaluator(dom)
    g1, g2 = ideal_generators()
    rows = [[x.v for x in phi_h3_eval(AlgElem.word(b) * g, ev).coords(quotient=True)]
            for b in signed_basis() for g in (g1, g2)]
    r_ideal = rank_mod_p(rows, dom.p)
    rows_v = [[x.v for x in phi_h3_eval(AlgElem.word(v), ev).coords(quotient=True)] for v in FIVE]
    r_all = rank_mod_p(rows + rows_v, dom.p)
    point = {k: str(x) for k, x in pt.items()}
    return [dict(check="left_ideal_rank_19", ok=r_ideal == 19, rank=r_ideal, point=point),
            dict(check="five_words_complement", ok=r_all == 20, rank=r_all, point=point)]


def verify_q3_structure() -> List[dict]:
    return verify_filtration() + verify_quotient_span()
