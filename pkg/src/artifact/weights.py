"""sl_n weight calculus for the tensor powers of the second fundamental
representation: Casimir values, tau eigenvalues, W spectra along two-step
paths and the brick irreducibility criteria.

All quantities are Laurent polynomials in n with rational coefficients.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

N_MIN = 7


class NPoly:
    """Laurent polynomial in n over Q."""

    __slots__ = ("c",)

    def __init__(self, c: Optional[Dict[int, Fraction]] = None):
        self.c = {k: Fraction(v) for k, v in (c or {}).items() if v != 0}

    @classmethod
    def const(cls, x) -> "NPoly":
        return cls({0: x})

    @classmethod
    def n(cls, k: int = 1) -> "NPoly":
        return cls({k: 1})

    def _co(self, o) -> "NPoly":
        return o if isinstance(o, NPoly) else NPoly.const(o)

    def __add__(self, o):
        o = self._co(o)
        out = dict(self.c)
        for k, v in o.c.items():
            out[k] = out.get(k, 0) + v
        return NPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return NPoly({k: -v for k, v in self.c.items()})

    def __sub__(self, o):
        return self + (-self._co(o))

    def __rsub__(self, o):
        return self._co(o) - self

    def __mul__(self, o):
        o = self._co(o)
        out: Dict[int, Fraction] = {}
        for i, x in self.c.items():
            for j, y in o.c.items():
                out[i + j] = out.get(i + j, 0) + x * y
        return NPoly(out)

    __rmul__ = __mul__

    def __eq__(self, o):
        return self.c == self._co(o).c

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def is_zero(self) -> bool:
        return not self.c

    def at(self, n) -> Fraction:
        return sum((v * Fraction(n) ** k for k, v in self.c.items()), Fraction(0))

    def integer_roots_from(self, lo: int) -> List[int]:
        """Integer roots >= lo of a nonzero element (Cauchy bound, then scan)."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        top = max(self.c)
        lead = self.c[top]
        bound = 1 + max((abs(v / lead) for k, v in self.c.items() if k != top), default=0)
        return [m for m in range(lo, int(bound) + 1) if m != 0 and self.at(m) == 0]

    def __repr__(self):
        return format_npoly(self)


def format_npoly(p: NPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in sorted(p.c, reverse=True):
        v = p.c[k]
        mono = "" if k == 0 else ("n" if k == 1 else "n^%d" % k)
        coef = str(abs(v)) if (abs(v) != 1 or not mono) else ""
        body = coef + ("*" if coef and mono else "") + mono
        parts.append(("-" if v < 0 else "+") + body)
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def never_equal(p: NPoly, q: NPoly, lo: int = N_MIN) -> bool:
    d = p - q
    return not d.is_zero() and not d.integer_roots_from(lo)


# ---------------------------------------------------------------------------
# weights

@dataclass(frozen=True)
class Weight:
    """Dominant weight as multiplicities of the fundamental weights."""
    mult: Tuple[Tuple[int, int], ...]

    @classmethod
    def of(cls, d: Dict[int, int]) -> "Weight":
        return cls(tuple(sorted((i, m) for i, m in d.items() if m)))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """'w1+w3', '2w2', '0'."""
        text = text.replace(" ", "")
        if text == "0":
            return cls(())
        d: Dict[int, int] = {}
        for part in text.split("+"):
            m = re.fullmatch(r"(\d*)w(\d+)", part)
            if not m:
                raise ValueError("bad weight %r" % text)
            d[int(m.group(2))] = d.get(int(m.group(2)), 0) + int(m.group(1) or 1)
        return cls.of(d)

    def __str__(self):
        if not self.mult:
            return "0"
        return "+".join(("%dw%d" % (m, i)) if m > 1 else "w%d" % i for i, m in self.mult)


def W_(text: str) -> Weight:
    return Weight.parse(text)


def pairing(i: int, j: int) -> NPoly:
    """(w_i, w_j) = min(i, j) - ij/n."""
    return NPoly({0: min(i, j), -1: -i * j})


def rho_pairing(i: int) -> NPoly:
    """(w_i, 2 rho) = i(n - i)."""
    return NPoly({1: i, 0: -i * i})


def casimir(lam: Weight) -> NPoly:
    out = NPoly()
    for i, a in lam.mult:
        out = out + a * rho_pairing(i)
        for j, b in lam.mult:
            out = out + a * b * pairing(i, j)
    return out


LAMBDA0 = W_("w2")


def tau_eigenvalue(lam: Weight) -> NPoly:
    return Fraction(1, 2) * (casimir(lam) - 2 * casimir(LAMBDA0))


def y_eigenvalue(prev: Weight, cur: Weight) -> NPoly:
    return Fraction(1, 2) * (casimir(cur) - casimir(prev) - casimir(LAMBDA0))


def path_w_spectrum(path: Sequence[Weight]) -> NPoly:
    """W_r = Y_{r+1} - Y_r on the path (mu_{r-1}, mu_r, mu_{r+1})."""
    a, b, c = path
    return y_eigenvalue(b, c) - y_eigenvalue(a, b)


TAU_PRINTED = {
    "w1+w3": NPoly({-1: -4}),
    "2w2": NPoly({0: 2, -1: -4}),
    "w4": NPoly({0: -4, -1: -4}),
}


# ---------------------------------------------------------------------------
# bricks

def reflection_from_spectrum(sp_u: Sequence[NPoly], scaled: bool = True) -> bool:
    """s acts as a reflection iff -4/n (or -4 on n-scaled spectra) occurs exactly once."""
    minus = TAU_PRINTED["w1+w3"] * (NPoly.n() if scaled else 1)
    return len(sp_u) >= 2 and sum(1 for x in sp_u if x == minus) == 1


def _distinct(xs: Sequence[NPoly]) -> bool:
    return all(never_equal(xs[i], xs[j]) for i in range(len(xs)) for j in range(i + 1, len(xs)))


def brick_irreducibility(dim: int, sp_u: Sequence[NPoly], sp_w: Sequence[NPoly],
                         s_is_reflection: bool) -> bool:
    """Sufficient criteria, valid for every integer n >= 7."""
    if dim < 2:
        raise ValueError("dim >= 2")
    if not s_is_reflection or len(sp_u) != dim or len(sp_w) != dim:
        return False
    if dim == 2:
        # Sp(u) != Sp(W) for all n once some u-eigenvalue never meets Sp(W)
        return _distinct(sp_u) and any(all(never_equal(u, w) for w in sp_w) for u in sp_u)
    return (_distinct(sp_u) and _distinct(sp_w)
            and all(never_equal(u, w) for u in sp_u for w in sp_w))


@dataclass
class Brick:
    name: str
    bottom: Weight
    middles: Tuple[Weight, ...]
    top: Weight
    sp_u: Tuple[NPoly, ...]     # printed, scaled by n
    sp_w: Tuple[NPoly, ...]     # printed, scaled by n


def _np(text: str) -> NPoly:
    """Printed entries like '-2(n+2)', '4(2n-1)', '-(7n+4)'."""
    t = text.replace(" ", "")
    m = re.fullmatch(r"([+-]?\d*)(?:\((.*)\))?", t)
    if not m:
        raise ValueError(text)
    pre = m.group(1)
    k = Fraction(int(pre + "1") if pre in ("", "+", "-") else int(pre))
    if m.group(2) is None:
        return NPoly.const(k)
    out = NPoly()
    for sgn, coef, var in re.findall(r"([+-]?)(\d*)(n?)", m.group(2)):
        if not coef and not var:
            continue
        v = Fraction(int(coef or 1)) * (-1 if sgn == "-" else 1)
        out = out + NPoly({1 if var else 0: v})
    return k * out


def _brick(name, bottom, middles, top, sp_u, sp_w) -> Brick:
    return Brick(name, W_(bottom), tuple(W_(m) for m in middles), W_(top),
                 tuple(_np(x) for x in sp_u), tuple(_np(x) for x in sp_w))


# two-dimensional bricks
TABLE_2D = (
    _brick("2w1+w2+w4", "w1+w3", ("w1+w2+w3", "2w1+w4"), "2w1+w2+w4", ("-4", "2(n-2)"), ("-2(n+2)", "4(n-1)")),
    _brick("w2+2w3", "w1+w3", ("w1+w2+w3", "2w3"), "w2+2w3", ("-4", "2(n-2)"), ("-2(n+2)", "4(n-1)")),
    _brick("2w1+w6", "w1+w3", ("2w1+w4", "w1+w5"), "2w1+w6", ("-4", "-4(n+1)"), ("-4(2n+1)", "4(n-1)")),
    _brick("w1+w7", "w4", ("w1+w5", "w6"), "w1+w7", ("-4", "-4(n+1)"), ("-4(2n+1)", "4(n-1)")),
    _brick("w1+2w2+w3", "2w2", ("3w2", "w1+w2+w3"), "w1+2w2+w3", ("-4", "2(n-2)"), ("-4(n+1)", "2(n-2)")),
)

# three-dimensional bricks; Sp(u) is the full spectrum of t_12
T12 = ("-4", "2(n-2)", "-4(n+1)")
TABLE_3D = (
    _brick("2w2+w4", "2w2", ("3w2", "w1+w2+w3", "w2+w4"), "2w2+w4", T12,
           ("-4(2n+1)", "-2(n+2)", "4(2n-1)")),
    _brick("w3+w5", "w1+w3", ("2w3", "w2+w4", "w1+w5"), "w3+w5", T12,
           ("-2(3n+2)", "-2(n+2)", "2(3n-2)")),
    _brick("w2+w6", "w4", ("w2+w4", "w1+w5", "w6"), "w2+w6", T12,
           ("-2(5n+2)", "-2(n+2)", "2(5n-2)")),
)

# bricks described in the text
TEXT_BRICKS = (
    _brick("w1+w2+w5@2w2", "2w2", ("w1+w2+w3", "w2+w4"), "w1+w2+w5", ("-4", "-4(n+1)"), ("-(7n+4)", "(3n-4)")),
    _brick("w1+w2+w5@w4", "w4", ("w2+w4", "w1+w5"), "w1+w2+w5", ("-4", "2(n-2)"), ("-(3n+4)", "(5n-4)")),
    _brick("w1+w3+w4@2w2", "2w2", ("w1+w2+w3", "w2+w4"), "w1+w3+w4", ("-4", "2(n-2)"), ("-4(n+1)", "2(3n-2)")),
)

ALL_BRICKS = TABLE_2D + TABLE_3D + TEXT_BRICKS


def brick_report(b: Brick) -> dict:
    nv = NPoly.n()
    computed = tuple(nv * path_w_spectrum((b.bottom, m, b.top)) for m in b.middles)
    taus = {nv * tau_eigenvalue(W_(k)) for k in TAU_PRINTED}
    refl = reflection_from_spectrum(b.sp_u)
    tr_u = sum(b.sp_u, NPoly())
    return dict(
        check="brick_%s" % b.name,
        printed_w_matches=computed == b.sp_w,
        # W + sWs = 2u forces tr W = tr u
        printed_w_trace_ok=sum(b.sp_w, NPoly()) == tr_u,
        trace_balanced=sum(computed, NPoly()) == tr_u,
        u_from_tau=all(u in taus for u in b.sp_u),
        reflection=refl,
        irreducible=brick_irreducibility(len(b.middles), b.sp_u, computed, refl),
        irreducible_printed=brick_irreducibility(len(b.middles), b.sp_u, b.sp_w, refl),
        computed=[format_npoly(x) for x in computed],
        printed=[format_npoly(x) for x in b.sp_w],
    )


# ---------------------------------------------------------------------------
# the exponential parametrization

def check_exp_identity(n: Optional[int] = None) -> Dict[str, bool]:
    """a = -exp(-4h/n), b = exp(2(n-2)h/n), c = exp(-4(n+1)h/n) give a^3 + b^2 c = 0."""
    ea, eb, ec = TAU_PRINTED["w1+w3"], TAU_PRINTED["2w2"], TAU_PRINTED["w4"]
    exps = 3 * ea == 2 * eb + ec
    sign = (-1) ** 3 == -((+1) ** 2 * (+1))
    out = dict(exponents=exps, sign=sign)
    if n is not None:
        out["instance"] = 3 * ea.at(n) == 2 * eb.at(n) + ec.at(n)
    return out


def verify_weights() -> List[dict]:
    out = []
    for k, v in TAU_PRINTED.items():
        got = tau_eigenvalue(W_(k))
        out.append(dict(check="tau_%s" % k, ok=got == v, value=format_npoly(got)))
    reports = [brick_report(b) for b in ALL_BRICKS]
    for r in reports:
        r["ok"] = all(r[k] for k in ("u_from_tau", "trace_balanced", "reflection", "irreducible",
                                     "irreducible_printed"))
        out.append(r)
    # a printed W entry may differ only where it is itself impossible (wrong trace)
    off = [r["check"] for r in reports if not r["printed_w_matches"]]
    unexplained = [r["check"] for r in reports if not r["printed_w_matches"] and r["printed_w_trace_ok"]]
    out.append(dict(check="printed_w_entries", ok=not unexplained, mismatched=off,
                    mismatched_with_impossible_trace=[c for c in off if c not in unexplained]))
    e = check_exp_identity(9)
    out.append(dict(check="a3_plus_b2c", ok=all(e.values()), **e))
    return out
