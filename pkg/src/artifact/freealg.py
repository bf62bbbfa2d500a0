"""Finite R-linear combinations of freely reduced signed words."""
from __future__ import annotations

import json
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .ring import LaurentPoly, VARS, eval_expr, format_laurent, parse_laurent, ring_env
from .words import Word, free_reduce, inverse_rev, mirror, reverse

Coeff = Union[LaurentPoly, int, str]


def _lp(c: Coeff) -> LaurentPoly:
    if isinstance(c, LaurentPoly):
        return c
    if isinstance(c, int):
        return LaurentPoly.const(c)
    return eval_expr(c)


class AlgElem:
    __slots__ = ("terms", "strands")

    def __init__(self, terms: Optional[Mapping[Sequence[int], Coeff]] = None, strands: int = 3):
        self.strands = strands
        self.terms: Dict[Word, LaurentPoly] = {}
        for w, c in (terms or {}).items():
            c = _lp(c)
            if c.is_zero():
                continue
            w = free_reduce(w)
            if any(abs(x) >= strands for x in w):
                raise ValueError("word %r needs more than %d strands" % (w, strands))
            s = self.terms.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                self.terms.pop(w, None)
            else:
                self.terms[w] = s

    @classmethod
    def _raw(cls, terms: Dict[Word, LaurentPoly], strands: int) -> "AlgElem":
        x = object.__new__(cls)
        x.terms = terms
        x.strands = strands
        return x

    @classmethod
    def word(cls, w: Sequence[int], coeff: Coeff = 1, strands: int = 3) -> "AlgElem":
        return cls({tuple(w): coeff}, strands)

    @classmethod
    def one(cls, strands: int = 3) -> "AlgElem":
        return cls({(): 1}, strands)

    @classmethod
    def zero(cls, strands: int = 3) -> "AlgElem":
        return cls._raw({}, strands)

    @classmethod
    def combo(cls, pairs: Iterable[Tuple[Coeff, Sequence[int]]], strands: int = 3) -> "AlgElem":
        out = cls.zero(strands)
        for c, w in pairs:
            out = out + cls.word(w, c, strands)
        return out

    def _check(self, o: "AlgElem"):
        if self.strands != o.strands:
            raise ValueError("strand mismatch: %d vs %d" % (self.strands, o.strands))

    def __add__(self, o: "AlgElem") -> "AlgElem":
        self._check(o)
        t = dict(self.terms)
        for w, c in o.terms.items():
            s = t.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                t.pop(w, None)
            else:
                t[w] = s
        return AlgElem._raw(t, self.strands)

    def __neg__(self):
        return AlgElem._raw({w: -c for w, c in self.terms.items()}, self.strands)

    def __sub__(self, o: "AlgElem") -> "AlgElem":
        return self + (-o)

    def scale(self, c: Coeff) -> "AlgElem":
        c = _lp(c)
        if c.is_zero():
            return AlgElem.zero(self.strands)
        return AlgElem._raw({w: x * c for w, x in self.terms.items()}, self.strands)

    def __mul__(self, o):
        if not isinstance(o, AlgElem):
            return self.scale(o)
        self._check(o)
        t: Dict[Word, LaurentPoly] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in o.terms.items():
                w = free_reduce(w1 + w2)
                p = c1 * c2
                s = t.get(w)
                t[w] = p if s is None else s + p
        return AlgElem._raw({w: c for w, c in t.items() if not c.is_zero()}, self.strands)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, o):
        return isinstance(o, AlgElem) and self.strands == o.strands and self.terms == o.terms

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: Sequence[int]) -> LaurentPoly:
        return self.terms.get(tuple(w), LaurentPoly.const(0))

    def __len__(self):
        return len(self.terms)

    def map_coeffs(self, f) -> "AlgElem":
        return AlgElem({w: f(c) for w, c in self.terms.items()}, self.strands)

    def to_json(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        return {"strands": self.strands,
                "terms": [{"coeff": format_laurent(c), "word": list(w)} for w, c in items]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data) -> "AlgElem":
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, list):
            data = {"terms": data}
        strands = int(data.get("strands", 3))
        out = cls.zero(strands)
        for t in data["terms"]:
            c = t["coeff"]
            c = parse_laurent(c) if isinstance(c, str) else LaurentPoly.const(int(c))
            out = out + cls.word(tuple(int(x) for x in t["word"]), c, strands)
        return out

    def __repr__(self):
        if not self.terms:
            return "AlgElem(0)"
        parts = ["(%s)*[%s]" % (format_laurent(c), " ".join(map(str, w)))
                 for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))]
        return "AlgElem(" + " + ".join(parts) + ")"


def apply_symmetry(x: AlgElem, kind: str) -> AlgElem:
    """phi: mirror words and invert a,b,c; psi: inverse-reverse words and
    invert a,b,c; phipsi: reverse words, coefficients unchanged."""
    if kind == "phi":
        return AlgElem({mirror(w): c.invert_vars() for w, c in x.terms.items()}, x.strands)
    if kind == "psi":
        return AlgElem({inverse_rev(w): c.invert_vars() for w, c in x.terms.items()}, x.strands)
    if kind == "phipsi":
        return AlgElem({reverse(w): c for w, c in x.terms.items()}, x.strands)
    raise ValueError("unknown symmetry %r" % kind)


def alg_mul(x: AlgElem, y: AlgElem) -> AlgElem:
    return x * y


def cubic(i: int = 1, strands: int = 3) -> AlgElem:
    """(s_i - a)(s_i - b)(s_i - c)."""
    env = ring_env()
    g = AlgElem.word((i,), 1, strands)
    out = AlgElem.one(strands)
    for v in ("a", "b", "c"):
        out = out * (g - AlgElem.one(strands).scale(env[v]))
    return out


def defining_relations() -> Tuple[AlgElem, AlgElem]:
    """r1 and r2, each written as left side minus right side."""
    r1 = AlgElem.combo([
        (1, (-1, 2, 1)),
        (-1, (1, 2, -1)), ("a^-1", (1, 2)), ("-a", (1, -2)), ("-a", (-1, 2)),
        ("a^3", (-1, -2)), ("-a^-1", (2, 1)), ("a", (2, -1)), ("a", (-2, 1)),
        ("-a^3", (-2, -1)), ("-a^2", (-1, -2, 1)), ("a^2", (1, -2, -1)),
    ])
    r2 = AlgElem.combo([
        (1, (1, 2, 1, 1, 2)),
        (-1, (1, 1, 2, 1, 1)), ("-a", (2, 1, 1, 2)), ("a", (1, 2, 2, 1)),
        ("-a^2", (2, 2, 1)), ("a^2", (2, 1, 1)), ("-a^2", (1, 2, 2)), ("a^2", (1, 1, 2)),
        ("a^3", (2, 2)), ("-a^3", (1, 1)), ("-a^4", (2,)), ("a^4", (1,)),
    ])
    return r1, r2
