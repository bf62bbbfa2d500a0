"""Exact arithmetic in Z[a^±1, b^±1, c^±1] and friends.

Terms are stored in a dict keyed by a packed integer: each exponent gets a
16-bit field (offset by 2^15), the first variable in the most significant
field.  Monomial multiplication is then integer addition, and the integer
order of keys is the lexicographic order of exponent vectors.
"""
from __future__ import annotations

import ast
import re
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

VARS = ("a", "b", "c")

_W = 16
_OFF = 1 << (_W - 1)
_MASK = (1 << _W) - 1


def _base(nv: int) -> int:
    return sum(_OFF << (_W * i) for i in range(nv))


def _pack(exps: Sequence[int]) -> int:
    nv = len(exps)
    key = 0
    for i, e in enumerate(exps):
        assert -_OFF < e < _OFF, "exponent out of range"
        key |= (e + _OFF) << (_W * (nv - 1 - i))
    return key


def _unpack(key: int, nv: int) -> Tuple[int, ...]:
    return tuple(((key >> (_W * (nv - 1 - i))) & _MASK) - _OFF for i in range(nv))


class LaurentPoly:
    """Element of Z[x_1^±1, ..., x_k^±1] over an ordered variable set."""

    __slots__ = ("_t", "varset")

    def __init__(self, terms=None, varset: Sequence[str] = VARS):
        self.varset = tuple(varset)
        self._t: Dict[int, int] = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    k = _pack(exps)
                    self._t[k] = self._t.get(k, 0) + c
            self._t = {k: c for k, c in self._t.items() if c}

    @classmethod
    def _raw(cls, t: Dict[int, int], varset: Tuple[str, ...]) -> "LaurentPoly":
        p = object.__new__(cls)
        p._t = t
        p.varset = varset
        return p

    # constructors
    @classmethod
    def const(cls, c: int, varset: Sequence[str] = VARS) -> "LaurentPoly":
        vs = tuple(varset)
        return cls._raw({_base(len(vs)): c} if c else {}, vs)

    @classmethod
    def var(cls, name: str, power: int = 1, varset: Sequence[str] = VARS) -> "LaurentPoly":
        vs = tuple(varset)
        exps = [0] * len(vs)
        exps[vs.index(name)] = power
        return cls._raw({_pack(exps): 1}, vs)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1,
                 varset: Sequence[str] = VARS) -> "LaurentPoly":
        vs = tuple(varset)
        return cls._raw({_pack(exps): coeff} if coeff else {}, vs)

    @property
    def terms(self) -> Dict[Tuple[int, ...], int]:
        nv = len(self.varset)
        return {_unpack(k, nv): c for k, c in self._t.items()}

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.varset != self.varset:
                raise ValueError("varset mismatch: %r vs %r" % (self.varset, other.varset))
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.varset)
        if isinstance(other, Fraction) and other.denominator == 1:
            return LaurentPoly.const(other.numerator, self.varset)
        raise TypeError("cannot combine LaurentPoly with %s" % type(other).__name__)

    # arithmetic
    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        t = dict(self._t)
        for k, c in o._t.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return LaurentPoly._raw(t, self.varset)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._t.items()}, self.varset)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        t = dict(self._t)
        for k, c in o._t.items():
            s = t.get(k, 0) - c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return LaurentPoly._raw(t, self.varset)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._raw({}, self.varset)
            return LaurentPoly._raw({k: c * other for k, c in self._t.items()}, self.varset)
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self._t or not o._t:
            return LaurentPoly._raw({}, self.varset)
        base = _base(len(self.varset))
        a, b = (self._t, o._t) if len(self._t) >= len(o._t) else (o._t, self._t)
        if len(b) == 1:
            (kb, cb), = b.items()
            sh = kb - base
            return LaurentPoly._raw({k + sh: c * cb for k, c in a.items()}, self.varset)
        t: Dict[int, int] = {}
        get = t.get
        for kb, cb in b.items():
            sh = kb - base
            for ka, ca in a.items():
                k = ka + sh
                t[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw({k: c for k, c in t.items() if c}, self.varset)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            inv = self.unit_inverse()
            if inv is None:
                raise ValueError("negative power of a non-unit")
            return inv ** (-n)
        result = LaurentPoly.const(1, self.varset)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        q = lp_divide_exact(self, o)
        if q is None:
            raise ArithmeticError("inexact division: (%s) / (%s)" % (self, o))
        return q

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.varset == other.varset and self._t == other._t
        if isinstance(other, int):
            return self._t == ({_base(len(self.varset)): other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.varset, frozenset(self._t.items())))

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def nterms(self) -> int:
        return len(self._t)

    def is_unit(self) -> bool:
        return len(self._t) == 1 and abs(next(iter(self._t.values()))) == 1

    def unit_inverse(self) -> Optional["LaurentPoly"]:
        if not self.is_unit():
            return None
        (k, c), = self._t.items()
        return LaurentPoly._raw({2 * _base(len(self.varset)) - k: c}, self.varset)

    def leading(self) -> Tuple[int, int]:
        k = max(self._t)
        return k, self._t[k]

    def degree_box(self) -> List[Tuple[int, int]]:
        nv = len(self.varset)
        exps = [_unpack(k, nv) for k in self._t]
        return [(min(e[i] for e in exps), max(e[i] for e in exps)) for i in range(nv)]

    def invert_vars(self) -> "LaurentPoly":
        """Substitute x -> x^-1 for every variable."""
        nb = 2 * _base(len(self.varset))
        return LaurentPoly._raw({nb - k: c for k, c in self._t.items()}, self.varset)

    def specialize(self, values: Mapping[str, Fraction]) -> Fraction:
        return lp_specialize(self, values)

    def substitute(self, images: Mapping[str, "LaurentPoly"]) -> "LaurentPoly":
        """Ring morphism sending each variable to a unit (or any poly if exponents >= 0)."""
        nv = len(self.varset)
        target = next(iter(images.values())).varset
        out = LaurentPoly.const(0, target)
        for k, c in self._t.items():
            term = LaurentPoly.const(c, target)
            for name, e in zip(self.varset, _unpack(k, nv)):
                if e:
                    term = term * images[name] ** e
            out = out + term
        return out

    def __repr__(self):
        return "LaurentPoly(%r)" % format_laurent(self)

    def __str__(self):
        return format_laurent(self)


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if p.varset != q.varset:
        raise ValueError("varset mismatch")
    return p * q


def lp_divide_exact(p: LaurentPoly, q: LaurentPoly) -> Optional[LaurentPoly]:
    """Return r with q*r == p, or None if no such Laurent polynomial exists.

    If p = q*r then, variable by variable, the exponent range of r is the
    range of p shrunk by the range of q; quotient terms outside that box
    mean failure, which also guarantees termination.
    """
    if p.varset != q.varset:
        raise ValueError("varset mismatch")
    if not q._t:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p._t:
        return LaurentPoly._raw({}, p.varset)
    vs = p.varset
    nv = len(vs)
    base = _base(nv)
    if len(q._t) == 1:
        (kq, cq), = q._t.items()
        if any(c % cq for c in p._t.values()):
            return None
        sh = base - kq
        return LaurentPoly._raw({k + sh: c // cq for k, c in p._t.items()}, vs)
    bp, bq = p.degree_box(), q.degree_box()
    box = [(lp[0] - lq[0], lp[1] - lq[1]) for lp, lq in zip(bp, bq)]
    if any(lo > hi for lo, hi in box):
        return None
    kq, cq = q.leading()
    qitems = list(q._t.items())
    r = dict(p._t)
    out: Dict[int, int] = {}
    while r:
        kr = max(r)
        cr = r[kr]
        if cr % cq:
            return None
        kt = kr - kq + base
        exps = _unpack(kt, nv)
        if any(not (lo <= e <= hi) for e, (lo, hi) in zip(exps, box)):
            return None
        ct = cr // cq
        out[kt] = ct
        sh = kt - base
        for k, c in qitems:
            kk = k + sh
            s = r.get(kk, 0) - c * ct
            if s:
                r[kk] = s
            else:
                del r[kk]
    return LaurentPoly._raw(out, vs)


def lp_specialize(p: LaurentPoly, values: Mapping[str, Fraction]) -> Fraction:
    nv = len(p.varset)
    vals = []
    for name in p.varset:
        if name not in values:
            raise KeyError("no value for variable %s" % name)
        vals.append(Fraction(values[name]))
    total = Fraction(0)
    for k, c in p._t.items():
        term = Fraction(c)
        for v, e in zip(vals, _unpack(k, nv)):
            if e:
                if v == 0 and e < 0:
                    raise ZeroDivisionError("zero assigned to an inverted variable")
                term *= v ** e
        total += term
    return total


# ---------------------------------------------------------------------------
# text syntax

def format_laurent(p: LaurentPoly) -> str:
    if not p._t:
        return "0"
    nv = len(p.varset)
    parts = []
    for k in sorted(p._t, reverse=True):
        c = p._t[k]
        exps = _unpack(k, nv)
        factors = []
        for name, e in zip(p.varset, exps):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append("%s^%d" % (name, e))
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "%d*%s" % (mag, "*".join(factors))
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def parse_laurent(text: str, varset: Sequence[str] = VARS) -> LaurentPoly:
    """Parse the canonical term syntax, e.g. ``3*a^2*b^-1*c - a + 1``."""
    vs = tuple(varset)
    s = text.strip()
    if s == "0":
        return LaurentPoly.const(0, vs)
    # split on +/- that are not exponent signs
    tokens = re.split(r"(?<!\^)\s*([+-])\s*", s)
    if tokens and tokens[0] == "":
        tokens = tokens[1:]
    else:
        tokens = ["+"] + tokens
    if len(tokens) % 2:
        raise ValueError("cannot parse Laurent polynomial %r" % text)
    out: Dict[Tuple[int, ...], int] = {}
    for i in range(0, len(tokens), 2):
        sign = -1 if tokens[i] == "-" else 1
        body = tokens[i + 1].strip()
        if not body:
            raise ValueError("empty term in %r at term %d" % (text, i // 2))
        coeff = 1
        exps = [0] * len(vs)
        for f in body.split("*"):
            f = f.strip()
            if re.fullmatch(r"\d+", f):
                coeff *= int(f)
                continue
            m = re.fullmatch(r"([A-Za-z_]\w*)(?:\^(-?\d+))?", f)
            if not m or m.group(1) not in vs:
                raise ValueError("bad factor %r in %r" % (f, text))
            exps[vs.index(m.group(1))] += int(m.group(2) or 1)
        key = tuple(exps)
        out[key] = out.get(key, 0) + sign * coeff
    return LaurentPoly(out, vs)


def ring_env(varset: Sequence[str] = VARS) -> Dict[str, LaurentPoly]:
    """Named constants: the variables plus u, v, w (elementary symmetric)."""
    env = {n: LaurentPoly.var(n, 1, varset) for n in varset}
    if tuple(varset) == VARS:
        a, b, c = env["a"], env["b"], env["c"]
        env["u"] = a + b + c
        env["v"] = a * b + b * c + a * c
        env["w"] = a * b * c
    return env


def eval_expr(text: str, env: Optional[Mapping[str, LaurentPoly]] = None) -> LaurentPoly:
    """Evaluate an arithmetic expression such as ``-(a^2+v)/(w*a)`` exactly.

    Division must be exact in the Laurent ring.
    """
    env = dict(env or ring_env())
    varset = next(iter(env.values())).varset
    src = text.strip().replace("^", "**")
    if not src:
        return LaurentPoly.const(1, varset)
    tree = ast.parse(src, mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return LaurentPoly.const(node.value, varset)
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise NameError("unknown symbol %r in %r" % (node.id, text))
            return env[node.id]
        if isinstance(node, ast.UnaryOp):
            x = ev(node.operand)
            if isinstance(node.op, ast.USub):
                return -x
            if isinstance(node.op, ast.UAdd):
                return x
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                e = node.right
                sign = 1
                if isinstance(e, ast.UnaryOp) and isinstance(e.op, ast.USub):
                    sign, e = -1, e.operand
                if not (isinstance(e, ast.Constant) and isinstance(e.value, int)):
                    raise ValueError("exponent must be an integer in %r" % text)
                return ev(node.left) ** (sign * e.value)
            x, y = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return x + y
            if isinstance(node.op, ast.Sub):
                return x - y
            if isinstance(node.op, ast.Mult):
                return x * y
            if isinstance(node.op, ast.Div):
                return x / y
        raise ValueError("unsupported syntax in %r" % text)

    return ev(tree)


# ---------------------------------------------------------------------------
# fraction field

class RatFunc:
    """Unreduced fraction num/den; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Optional[LaurentPoly] = None):
        if den is None:
            den = LaurentPoly.const(1, num.varset)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = num, den

    def __add__(self, o):
        o = _as_rat(o, self.num.varset)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        o = _as_rat(o, self.num.varset)
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        o = _as_rat(o, self.num.varset)
        return RatFunc(self.num * o.num, self.den * o.den)

    def __truediv__(self, o):
        o = _as_rat(o, self.num.varset)
        return RatFunc(self.num * o.den, self.den * o.num)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __eq__(self, o):
        o = _as_rat(o, self.num.varset)
        return self.num * o.den == o.num * self.den

    def is_zero(self):
        return self.num.is_zero()

    def to_poly(self) -> Optional[LaurentPoly]:
        return lp_divide_exact(self.num, self.den)

    def specialize(self, values) -> Fraction:
        return lp_specialize(self.num, values) / lp_specialize(self.den, values)

    def __repr__(self):
        return "RatFunc((%s)/(%s))" % (self.num, self.den)


def _as_rat(x, varset) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, int):
        return RatFunc(LaurentPoly.const(x, varset))
    return RatFunc(x)


# ---------------------------------------------------------------------------
# matrices

class RingMatrix:
    """Dense matrix over LaurentPoly; products skip zero entries."""

    __slots__ = ("rows", "cols", "entries", "varset")

    def __init__(self, entries: List[List[LaurentPoly]], varset: Sequence[str] = VARS):
        self.entries = [list(r) for r in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if self.rows == 0 or self.cols == 0:
            raise ValueError("matrix shape must be positive")
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix")
        self.varset = tuple(varset)

    @classmethod
    def zeros(cls, rows: int, cols: int, varset=VARS) -> "RingMatrix":
        z = LaurentPoly.const(0, varset)
        return cls([[z] * cols for _ in range(rows)], varset)

    @classmethod
    def identity(cls, n: int, varset=VARS) -> "RingMatrix":
        m = cls.zeros(n, n, varset)
        one = LaurentPoly.const(1, varset)
        for i in range(n):
            m.entries[i][i] = one
        return m

    @classmethod
    def from_exprs(cls, rows: Iterable[Iterable], env=None) -> "RingMatrix":
        env = env or ring_env()
        vs = next(iter(env.values())).varset
        out = []
        for r in rows:
            out.append([x if isinstance(x, LaurentPoly) else
                        (LaurentPoly.const(x, vs) if isinstance(x, int) else eval_expr(x, env))
                        for x in r])
        return cls(out, vs)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, o: "RingMatrix") -> "RingMatrix":
        self._same_shape(o)
        return RingMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.entries, o.entries)],
                          self.varset)

    def __sub__(self, o: "RingMatrix") -> "RingMatrix":
        self._same_shape(o)
        return RingMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.entries, o.entries)],
                          self.varset)

    def __neg__(self):
        return RingMatrix([[-x for x in r] for r in self.entries], self.varset)

    def scale(self, s) -> "RingMatrix":
        return RingMatrix([[x * s for x in r] for r in self.entries], self.varset)

    def __mul__(self, o):
        if not isinstance(o, RingMatrix):
            return self.scale(o)
        if self.cols != o.rows:
            raise ValueError("shape mismatch %dx%d * %dx%d" % (self.rows, self.cols, o.rows, o.cols))
        zero = LaurentPoly.const(0, self.varset)
        orows = [[(j, x) for j, x in enumerate(r) if x._t] for r in o.entries]
        out = []
        for r in self.entries:
            acc: Dict[int, LaurentPoly] = {}
            for k, x in enumerate(r):
                if not x._t:
                    continue
                for j, y in orows[k]:
                    p = x * y
                    acc[j] = acc[j] + p if j in acc else p
            out.append([acc.get(j, zero) for j in range(o.cols)])
        return RingMatrix(out, self.varset)

    __rmul__ = scale

    def shift(self, s) -> "RingMatrix":
        """self - s*I."""
        m = RingMatrix(self.entries, self.varset)
        for i in range(min(self.rows, self.cols)):
            m.entries[i][i] = m.entries[i][i] - s
        return m

    def _same_shape(self, o):
        if (self.rows, self.cols) != (o.rows, o.cols):
            raise ValueError("shape mismatch")

    def __eq__(self, o):
        return (isinstance(o, RingMatrix) and self.rows == o.rows and self.cols == o.cols
                and self.entries == o.entries)

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.entries for x in r)

    def transpose(self) -> "RingMatrix":
        return RingMatrix([list(c) for c in zip(*self.entries)], self.varset)

    def column(self, j: int) -> List[LaurentPoly]:
        return [r[j] for r in self.entries]

    def specialize(self, values) -> List[List[Fraction]]:
        return [[lp_specialize(x, values) for x in r] for r in self.entries]

    def nonzero_entries(self):
        for i, r in enumerate(self.entries):
            for j, x in enumerate(r):
                if x._t:
                    yield i, j, x

    def det(self) -> LaurentPoly:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _bareiss_det([list(r) for r in self.entries], self.varset)

    def inverse_unit(self) -> "RingMatrix":
        """Inverse via the adjugate; the determinant must be a unit."""
        n = self.rows
        d = self.det()
        dinv = d.unit_inverse()
        if dinv is None:
            raise ArithmeticError("determinant %s is not a unit" % d)
        if n == 1:
            return RingMatrix([[dinv]], self.varset)
        adj = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [[self.entries[r][c] for c in range(n) if c != j]
                         for r in range(n) if r != i]
                cof = _bareiss_det(minor, self.varset)
                adj[j][i] = cof * dinv if (i + j) % 2 == 0 else -cof * dinv
        return RingMatrix(adj, self.varset)

    def __repr__(self):
        return "RingMatrix(%dx%d)" % (self.rows, self.cols)


def _bareiss_det(m: List[List[LaurentPoly]], varset) -> LaurentPoly:
    n = len(m)
    one = LaurentPoly.const(1, varset)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        piv = None
        for i in range(k, n):
            if m[i][k]._t and (piv is None or m[i][k].nterms() < m[piv][k].nterms()):
                piv = i
        if piv is None:
            return LaurentPoly.const(0, varset)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pk * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = LaurentPoly.const(0, varset)
        prev = pk
    return m[n - 1][n - 1] * sign


class BareissSolution:
    """X = numer / denom, entrywise."""

    def __init__(self, numer: List[List[LaurentPoly]], denom: LaurentPoly):
        self.numer = numer
        self.denom = denom

    def entry(self, i: int, j: int = 0) -> RatFunc:
        return RatFunc(self.numer[i][j], self.denom)

    def in_ring(self) -> Optional[List[List[LaurentPoly]]]:
        out = []
        for row in self.numer:
            r = []
            for x in row:
                q = lp_divide_exact(x, self.denom)
                if q is None:
                    return None
                r.append(q)
            out.append(r)
        return out


class SolveError(ArithmeticError):
    pass


def mat_solve_bareiss(M: RingMatrix, B: RingMatrix) -> BareissSolution:
    """Solve M X = B over the fraction field, fraction-free.

    Gauss-Jordan in Bareiss form: after the pass every pivot row carries the
    same diagonal entry D, so X = rhs / D.  Raises SolveError on rank
    deficiency or an inconsistent system.
    """
    if M.rows != B.rows:
        raise ValueError("row count mismatch")
    vs = M.varset
    n, m, k = M.rows, M.cols, B.cols
    A = [list(M.entries[i]) + list(B.entries[i]) for i in range(n)]
    zero = LaurentPoly.const(0, vs)
    prev = LaurentPoly.const(1, vs)
    for col in range(m):
        piv = None
        for i in range(col, n):
            if A[i][col]._t and (piv is None or A[i][col].nterms() < A[piv][col].nterms()):
                piv = i
        if piv is None:
            raise SolveError("rank deficiency at column %d" % col)
        A[col], A[piv] = A[piv], A[col]
        pk = A[col][col]
        prow = A[col]
        for i in range(n):
            if i == col:
                continue
            row = A[i]
            f = row[col]
            if not f._t:
                if prev == 1:
                    A[i] = [pk * x for x in row]
                else:
                    A[i] = [(pk * x) / prev if x._t else zero for x in row]
                continue
            new = []
            for j in range(m + k):
                x = pk * row[j] - f * prow[j]
                new.append(x / prev if (x._t and not prev == 1) else x)
            A[i] = new
        # the pivot row keeps its entries; earlier pivots now equal pk too
        prev = pk
    D = prev
    for i in range(m, n):
        if any(x._t for x in A[i][m:]):
            raise SolveError("inconsistent system (row %d)" % i)
    numer = []
    for i in range(m):
        d = A[i][i]
        if d == D:
            numer.append(A[i][m:])
        else:
            # rows fixed before the last pivot carry D as well, up to exact scaling
            numer.append([(x * D) / d for x in A[i][m:]])
    return BareissSolution(numer, D)


def rank_mod_p(rows: List[List[int]], p: int) -> int:
    """Rank of an integer matrix over GF(p)."""
    m = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        pr = [(x * inv) % p for x in m[rank]]
        m[rank] = pr
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], pr)]
        rank += 1
    return rank


def rank_fraction(rows: List[List[Fraction]]) -> int:
    """Exact rank over Q by Gaussian elimination on Fractions."""
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / pr[c]
                m[i] = [x - f * y for x, y in zip(m[i], pr)]
        rank += 1
    return rank


def fraction_mod_p(x: Fraction, p: int) -> int:
    return (x.numerator % p) * pow(x.denominator % p, p - 2, p) % p


# ---------------------------------------------------------------------------
# coefficient domains: one interface over symbolic, rational and mod-p values

class LaurentDomain:
    """Symbolic coefficients; only units can be inverted."""
    name = "laurent"

    def __init__(self, varset: Sequence[str] = VARS):
        self.varset = tuple(varset)
        self.zero = LaurentPoly.const(0, self.varset)
        self.one = LaurentPoly.const(1, self.varset)

    def const(self, n: int):
        return LaurentPoly.const(n, self.varset)

    def from_lp(self, p: LaurentPoly):
        return p

    def var(self, name: str):
        return LaurentPoly.var(name, 1, self.varset)

    def inv(self, x: LaurentPoly):
        return x.unit_inverse()

    def is_zero(self, x) -> bool:
        return x.is_zero()


class FractionDomain:
    """Rational values at a fixed point."""
    name = "rational"

    def __init__(self, point: Mapping[str, Fraction]):
        self.point = {k: Fraction(v) for k, v in point.items()}
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def const(self, n: int):
        return Fraction(n)

    def from_lp(self, p: LaurentPoly):
        return lp_specialize(p, self.point)

    def var(self, name: str):
        return self.point[name]

    def inv(self, x: Fraction):
        return 1 / x

    def is_zero(self, x) -> bool:
        return x == 0


class ModP:
    """Residue mod a prime; just enough arithmetic for the shared code paths."""
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _o(self, o):
        return o.v if isinstance(o, ModP) else o

    def __add__(self, o):
        return ModP(self.v + self._o(o), self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return ModP(self.v - self._o(o), self.p)

    def __rsub__(self, o):
        return ModP(self._o(o) - self.v, self.p)

    def __mul__(self, o):
        return ModP(self.v * self._o(o), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __truediv__(self, o):
        return self * pow(self._o(o), self.p - 2, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return ModP(pow(pow(self.v, self.p - 2, self.p), -e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def __eq__(self, o):
        return self.v == self._o(o) % self.p

    def __hash__(self):
        return hash(self.v)

    def is_zero(self) -> bool:
        return self.v == 0

    def __repr__(self):
        return "%d mod %d" % (self.v, self.p)


class ModPDomain:
    """Values at a rational point reduced modulo a prime p."""
    name = "modp"

    def __init__(self, point: Mapping[str, Fraction], p: int = 2 ** 31 - 1):
        self.p = p
        self.point = {k: Fraction(v) for k, v in point.items()}
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def const(self, n: int):
        return ModP(n, self.p)

    def from_lp(self, q: LaurentPoly):
        return ModP(fraction_mod_p(lp_specialize(q, self.point), self.p), self.p)

    def var(self, name: str):
        return ModP(fraction_mod_p(self.point[name], self.p), self.p)

    def inv(self, x: ModP):
        if x.v == 0:
            raise ZeroDivisionError("not invertible mod %d" % self.p)
        return ModP(pow(x.v, self.p - 2, self.p), self.p)

    def is_zero(self, x) -> bool:
        return x.v == 0


def generic_guard(point: Mapping[str, Fraction]) -> Fraction:
    """(a-b)(a-c)(b-c)(ab+c^2)(ac+b^2)(bc+a^2) at a point; points where this
    vanishes, or where a,b,c vanish, are rejected as non-generic."""
    a, b, c = (Fraction(point[k]) for k in "abc")
    return a * b * c * (a - b) * (a - c) * (b - c) * (a * b + c * c) * (a * c + b * b) * (b * c + a * a)


def random_points(k: int, seed: int = 0, lo: int = -9, hi: int = 9) -> List[Dict[str, Fraction]]:
    """k pseudo-random generic integer points, reproducible from the seed."""
    import random
    rng = random.Random(seed)
    out = []
    while len(out) < k:
        pt = {v: Fraction(rng.randint(lo, hi)) for v in VARS}
        if generic_guard(pt) != 0 and pt not in out:
            out.append(pt)
    return out
