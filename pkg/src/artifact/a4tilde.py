"""The 25-dimensional Q_3-bimodule Q_4 / Q_3 u_3 Q_3.

Basis e1..e25 (x = s_3 s_2^-1 s_3), the anti-involution f (reverse words),
left multiplication tables L1, L2 and right multiplication R_i = F L_i F.
Table entries that are not single basis vectors refer to named expressions
in data/a4tilde.txt, resolved by memoized substitution.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from .ring import LaurentPoly, RingMatrix, eval_expr, format_laurent, ring_env
from .words import Word

N = 25
Vec = Dict[int, LaurentPoly]

# e_i = left . x . right, None for the two elements not of that shape
BASIS_WORDS: Dict[int, Optional[Tuple[Word, Word]]] = {
    1: ((), ()), 2: ((1,), ()), 3: ((-1,), ()), 4: ((2, 1), ()), 5: ((2, -1), ()),
    6: ((-2, 1), ()), 7: ((-2, -1), ()), 8: ((), (1,)), 9: ((), (-1,)), 10: ((), (1, 2)),
    11: ((), (1, -2)), 12: ((), (-1, 2)), 13: ((), (-1, -2)), 14: ((2, 1), (1,)),
    15: ((-2, 1), (1,)), 16: ((1,), (1, 2)), 17: ((1,), (1, -2)), 18: ((1,), (-1,)),
    19: ((1,), (1,)), 20: ((2, 1), (1, 2)), 21: ((2, 1), (1, -2)), 22: None, 23: None,
    24: ((), (1, -2, 1)), 25: ((1, -2, 1), ()),
}

# the literal words on 4 strands
E_WORDS: Dict[int, Word] = {
    22: (3, 2, -1, 2, 3), 23: (-3, -2, 1, -2, -3),
}


def e_word(i: int) -> Word:
    if i in E_WORDS:
        return E_WORDS[i]
    l, r = BASIS_WORDS[i]
    return l + (3, -2, 3) + r


class ResolveError(RuntimeError):
    pass


@dataclass
class Term:
    coeff: LaurentPoly
    apply_f: bool
    kind: str          # "e" or "name"
    ref: object        # int or str


@dataclass
class Expr:
    name: str
    left: Word
    base: object       # "x" or basis index
    right: Word
    terms: List[Term] = field(default_factory=list)


def _word(text: str) -> Word:
    text = text.strip()
    return () if text in ("", "e") else tuple(int(t) for t in text.split())


def _symbol(text: str) -> Tuple[bool, str, object]:
    s = text.strip()
    f = False
    if s.startswith("f "):
        f, s = True, s[2:].strip()
    m = re.fullmatch(r"e(\d+)", s)
    if m:
        return f, "e", int(m.group(1))
    m = re.fullmatch(r"\{([^}]+)\}", s)
    if m:
        return f, "name", m.group(1)
    raise ValueError("bad symbol %r" % text)


@dataclass
class A4Data:
    sigma: Dict[int, int]
    fcols: Dict[int, List[Term]]
    exprs: Dict[str, Expr]
    cols: Dict[Tuple[str, int], List[Term]]


def parse_data(text: str) -> A4Data:
    env = ring_env()
    sigma = {i: i for i in range(1, N + 1)}
    fcols: Dict[int, List[Term]] = {}
    exprs: Dict[str, Expr] = {}
    cols: Dict[Tuple[str, int], List[Term]] = {}
    cur: Optional[List[Term]] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line.startswith("sigma"):
            for a, b in re.findall(r"\((\d+),(\d+)\)", line):
                sigma[int(a)], sigma[int(b)] = int(b), int(a)
            continue
        m = re.match(r"fcol e(\d+)$", line)
        if m:
            cur = fcols.setdefault(int(m.group(1)), [])
            continue
        m = re.match(r"expr (\S+) = (.*)$", line)
        if m:
            parts = [p.strip() for p in m.group(2).split(".")]
            if len(parts) == 3:
                e = Expr(m.group(1), _word(parts[0]), "x", _word(parts[2]))
            elif len(parts) == 2:
                e = Expr(m.group(1), _word(parts[0]), int(parts[1][1:]), ())
            else:
                raise ValueError("line %d: bad expression header" % lineno)
            if e.name in exprs:
                raise ValueError("line %d: duplicate expression %s" % (lineno, e.name))
            exprs[e.name] = e
            cur = e.terms
            continue
        m = re.match(r"col (L[12]) e(\d+)$", line)
        if m:
            key = (m.group(1), int(m.group(2)))
            if key in cols:
                raise ValueError("line %d: duplicate column %s" % (lineno, key))
            cur = cols[key] = []
            continue
        if cur is None or "|" not in line:
            raise ValueError("line %d: unexpected %r" % (lineno, line))
        ctext, stext = line.split("|", 1)
        f, kind, ref = _symbol(stext)
        cur.append(Term(eval_expr(ctext.strip(), env), f, kind, ref))
    return A4Data(sigma, fcols, exprs, cols)


def load_data() -> A4Data:
    return parse_data(resources.files("artifact").joinpath("data", "a4tilde.txt").read_text())


# ---------------------------------------------------------------------------
# vectors

def vec_add(x: Vec, y: Vec, c: Optional[LaurentPoly] = None) -> Vec:
    out = dict(x)
    for k, v in y.items():
        v = v * c if c is not None else v
        s = out.get(k)
        s = v if s is None else s + v
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def unit(i: int) -> Vec:
    return {i: LaurentPoly.const(1)}


def mat_vec(M: RingMatrix, v: Vec) -> Vec:
    out: Vec = {}
    for j, c in v.items():
        col = {i + 1: M.entries[i][j - 1] for i in range(N) if not M.entries[i][j - 1].is_zero()}
        out = vec_add(out, col, c)
    return out


def vec_list(v: Vec) -> List[LaurentPoly]:
    z = LaurentPoly.const(0)
    return [v.get(i, z) for i in range(1, N + 1)]


def from_columns(cols: Dict[int, Vec]) -> RingMatrix:
    z = LaurentPoly.const(0)
    return RingMatrix([[cols[j].get(i, z) for j in range(1, N + 1)] for i in range(1, N + 1)])


def format_vec(v: Vec) -> List[dict]:
    return [{"coeff": format_laurent(c), "basis": "e%d" % i} for i, c in sorted(v.items())]


# ---------------------------------------------------------------------------
# resolution

class Resolver:
    def __init__(self, data: A4Data):
        self.data = data
        self.memo: Dict[str, Vec] = {}
        self.active: List[str] = []
        self.F = self._build_f()

    def _build_f(self) -> RingMatrix:
        cols = {}
        for j in range(1, N + 1):
            if j in self.data.fcols:
                cols[j] = self._terms(self.data.fcols[j], allow_f=False)
            else:
                cols[j] = unit(self.data.sigma[j])
        return from_columns(cols)

    def f(self, v: Vec) -> Vec:
        return mat_vec(self.F, v)

    def name(self, n: str) -> Vec:
        if n in self.memo:
            return self.memo[n]
        if n not in self.data.exprs:
            raise ResolveError("unresolved reference {%s}" % n)
        if n in self.active:
            raise ResolveError("cyclic reference: %s" % " -> ".join(self.active + [n]))
        self.active.append(n)
        try:
            v = self._terms(self.data.exprs[n].terms)
        finally:
            self.active.pop()
        self.memo[n] = v
        return v

    def _terms(self, terms: Sequence[Term], allow_f: bool = True) -> Vec:
        out: Vec = {}
        for t in terms:
            if t.kind == "e":
                if not 1 <= t.ref <= N:
                    raise ResolveError("basis index e%d out of range" % t.ref)
                v = unit(t.ref)
            else:
                v = self.name(t.ref)
            if t.apply_f:
                if not allow_f:
                    raise ResolveError("f used inside the definition of f")
                v = self.f(v)
            out = vec_add(out, v, t.coeff)
        return out

    def column(self, which: str, j: int) -> Vec:
        key = (which, j)
        if key not in self.data.cols:
            raise ResolveError("missing column %s e%d" % key)
        return self._terms(self.data.cols[key])


@dataclass
class ActionTables:
    L1: RingMatrix
    L2: RingMatrix
    F: RingMatrix
    R1: RingMatrix
    R2: RingMatrix
    named: Dict[str, Vec]

    def inverse(self, M: RingMatrix) -> RingMatrix:
        """M^-1 = w^-1 (M^2 - u M + v) for a matrix killed by the cubic."""
        e = ring_env()
        I = RingMatrix.identity(N)
        return (M * M - M.scale(e["u"]) + I.scale(e["v"])).scale(e["w"] ** -1)

    def letter(self, x: int, side: str) -> RingMatrix:
        key = (x, side)
        cache = self.__dict__.setdefault("_cache", {})
        if key not in cache:
            base = {(1, "left"): self.L1, (2, "left"): self.L2,
                    (1, "right"): self.R1, (2, "right"): self.R2}.get((abs(x), side))
            if base is None:
                raise ValueError("letters must be +-1, +-2 and side left/right")
            cache[key] = base if x > 0 else self.inverse(base)
        return cache[key]


_TABLES: Optional[ActionTables] = None


def build_action_tables(data: Optional[A4Data] = None) -> ActionTables:
    global _TABLES
    if data is None and _TABLES is not None:
        return _TABLES
    res = Resolver(data or load_data())
    L1 = from_columns({j: res.column("L1", j) for j in range(1, N + 1)})
    L2 = from_columns({j: res.column("L2", j) for j in range(1, N + 1)})
    F = res.F
    named = {n: res.name(n) for n in res.data.exprs}
    t = ActionTables(L1, L2, F, F * L1 * F, F * L2 * F, named)
    if data is None:
        _TABLES = t
    return t


def a4_apply(word: Sequence[int], side: str, v: Vec, tables: Optional[ActionTables] = None) -> Vec:
    """Left action multiplies by the word from the left (last letter first);
    right action multiplies on the right (first letter first)."""
    t = tables or build_action_tables()
    if side not in ("left", "right"):
        raise ValueError("side must be left or right")
    letters = reversed(tuple(word)) if side == "left" else tuple(word)
    for x in letters:
        v = mat_vec(t.letter(x, side), v)
    return v


def parse_vector(text: str) -> Vec:
    """"e_4", "e4", or "2*a | e1, -1 | e3"-style lists."""
    s = text.strip()
    m = re.fullmatch(r"e_?(\d+)", s)
    if m:
        i = int(m.group(1))
        if not 1 <= i <= N:
            raise ValueError("basis index out of range: %s" % s)
        return unit(i)
    out: Vec = {}
    for part in s.split(","):
        c, e = part.split("|")
        m = re.fullmatch(r"\s*e_?(\d+)\s*", e)
        if not m:
            raise ValueError("bad basis symbol %r" % e)
        out = vec_add(out, unit(int(m.group(1))), eval_expr(c.strip()))
    return out


# ---------------------------------------------------------------------------
# checks

def _is_zero(M: RingMatrix) -> bool:
    return M.is_zero()


def a4_consistency_check(t: Optional[ActionTables] = None) -> List[dict]:
    t = t or build_action_tables()
    e = ring_env()
    a, b, c = e["a"], e["b"], e["c"]
    I = RingMatrix.identity(N)
    out = []

    def rec(name, ok, **kw):
        out.append(dict(check=name, ok=bool(ok), **kw))

    def cubic(M):
        return (M - I.scale(a)) * (M - I.scale(b)) * (M - I.scale(c))

    for nm, (X, Y) in (("left", (t.L1, t.L2)), ("right", (t.R1, t.R2))):
        rec("braid_%s" % nm, _is_zero(X * Y * X - Y * X * Y))
    for nm, M in (("L1", t.L1), ("L2", t.L2), ("R1", t.R1), ("R2", t.R2)):
        rec("cubic_%s" % nm, _is_zero(cubic(M)))
    rec("F_involution", t.F * t.F == I)
    ok = all(set(x.degree_box()[1]) == {0} and set(x.degree_box()[2]) == {0}
             for _, _, x in t.F.nonzero_entries())
    rec("F_entries_in_Z[a]", ok)
    for i, L in (("1", t.L1), ("2", t.L2)):
        for j, R in (("1", t.R1), ("2", t.R2)):
            rec("commute_L%s_R%s" % (i, j), _is_zero(L * R - R * L))
    for nm, M in (("L1", t.L1), ("L2", t.L2)):
        rec("inverse_%s" % nm, M * t.inverse(M) == I)
    return out


def word_checks(t: Optional[ActionTables] = None) -> List[dict]:
    """Each basis vector and each named expression against its word meaning."""
    t = t or build_action_tables()
    data = load_data()
    out = []
    x = unit(1)
    for i, lr in BASIS_WORDS.items():
        if lr is None:
            continue
        l, r = lr
        got = a4_apply(r, "right", a4_apply(l, "left", x, t), t)
        out.append(dict(check="basis_e%d" % i, ok=got == unit(i)))
    for n, ex in data.exprs.items():
        base = x if ex.base == "x" else unit(ex.base)
        got = a4_apply(ex.right, "right", a4_apply(ex.left, "left", base, t), t)
        out.append(dict(check="expr_%s" % n, ok=got == t.named[n]))
    return out


def eigen_checks(t: Optional[ActionTables] = None) -> List[dict]:
    t = t or build_action_tables()
    a = ring_env()["a"]
    out = []
    for nm, M in (("L2", t.L2), ("R2", t.R2)):
        out.append(dict(check="%s_e1_eigenvalue_a" % nm, ok=mat_vec(M, unit(1)) == {1: a}))
    # 1.w_+ = a.w_+ modulo e_i built from u_1 x u_1 (and Q_4^(1), already zero)
    u1xu1 = {1, 2, 3, 8, 9, 18, 19}
    v = mat_vec(t.L1, unit(22))
    rest = {k: c for k, c in v.items() if k not in u1xu1}
    out.append(dict(check="1wplus_mod_u1xu1", ok=rest == {22: a}))
    return out


def determinants(t: Optional[ActionTables] = None) -> List[dict]:
    t = t or build_action_tables()
    out = []
    for nm, M in (("L1", t.L1), ("L2", t.L2)):
        d = M.det()
        out.append(dict(check="det_%s_unit" % nm, ok=d.is_unit(), det=format_laurent(d)))
    return out


# ---------------------------------------------------------------------------
# spanning sets of Q_4, as literal word sets

SET_E: Tuple[Word, ...] = ((), (2,), (-2,), (1, 2), (1, -2), (-1, 2), (-1, -2), (2, -1, 2))
SET_F: Tuple[Word, ...] = ((), (2,), (2, 1), (2, -1), (-2,), (-2, 1))
SET_F1: Tuple[Word, ...] = ((), (2,), (2, 1), (2, -1), (-2,), (-2, 1))
SET_F2: Tuple[Word, ...] = ((3,), (-3,), (3, 2), (3, -2), (-3, 2), (3, 2, 1), (-3, 2, 1),
                            (3, 2, -1), (3, -2, 1))
SET_E0: Tuple[Word, ...] = ((), (1,), (-1,), (2,), (-2,))
SET_EP: Tuple[Word, ...] = ((), (1,), (-1,), (2, 1), (2, -1), (-2, 1), (-2, -1), (1, -2, 1))


def _prod(xs, ys) -> List[Word]:
    return [x + y for x in xs for y in ys]


def spanning_sets() -> Dict[str, List[Word]]:
    from .h3reps import signed_basis
    b0 = signed_basis()
    s3pm = _prod(b0, _prod([(3,)], SET_F1)) + _prod(SET_E, [(3, -2, -1), (3, 2, -1, 2)])
    f_part = (_prod(b0, SET_F2) + _prod(SET_EP, [(-3, -2), (-3, -2, 1)])
              + _prod(SET_E0, [(-3, 2, -1)]))
    both = f_part + _prod(SET_E, [(3, -2, -1), (3, 2, -1, 2)]) + [(-3, -2, -1), (-3, 2, -1, 2)]
    b1 = list(b0) + both
    b2 = b1 + [e_word(i) for i in range(1, N + 1)]
    return {"B0": list(b0), "Q3s3Q3": s3pm, "Q3s3F": f_part, "Q3s3pmQ3": both, "B1": b1, "B2": b2}


def cardinality_ledger() -> List[dict]:
    expected = {"B0": 20, "Q3s3Q3": 136, "Q3s3F": 201, "Q3s3pmQ3": 219, "B1": 239, "B2": 264}
    out = []
    for name, words in spanning_sets().items():
        n = len(set(words))
        out.append(dict(check="card_%s" % name, ok=n == len(words) == expected[name],
                        count=n, expected=expected[name]))
    return out
