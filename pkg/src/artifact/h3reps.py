"""Irreducible matrix models of the cubic Hecke algebra on 3 strands.

The seven blocks (S_a, S_b, S_c, U_ab, U_ac, U_bc, V) give 24 coordinates.
The quotient Q_3 kills U_bc, so its coordinates are the other 20.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import AlgElem, apply_symmetry, defining_relations
from .hecke import hecke_eval, perm_length
from .ring import (LaurentDomain, LaurentPoly, RingMatrix, SolveError, format_laurent, lp_divide_exact,
                   mat_solve_bareiss, ring_env)
from .words import Word

Mat = List[List[object]]

BLOCKS = ("S_a", "S_b", "S_c", "U_ab", "U_ac", "U_bc", "V")
QUOTIENT_BLOCK = "U_bc"


def _env():
    return ring_env()


def delta() -> LaurentPoly:
    """(a-b)(a-c)(a^2+bc)."""
    e = _env()
    a, b, c = e["a"], e["b"], e["c"]
    return (a - b) * (a - c) * (a * a + b * c)


def _models() -> Dict[str, Tuple[RingMatrix, RingMatrix]]:
    e = _env()
    a, b, c = e["a"], e["b"], e["c"]
    out = {}
    for name, x in (("S_a", a), ("S_b", b), ("S_c", c)):
        out[name] = (RingMatrix([[x]]), RingMatrix([[x]]))
    for name, (al, be) in (("U_ab", (a, b)), ("U_ac", (a, c)), ("U_bc", (b, c))):
        out[name] = (RingMatrix([[al, 0 * al], [-al, be]]), RingMatrix([[be, be], [0 * al, al]]))
    z, one = 0 * a, a ** 0
    out["V"] = (RingMatrix([[c, z, z], [a * c + b * b, b, z], [b, one, a]]),
                RingMatrix([[a, -one, b], [z, b, -(a * c) - b * b], [z, z, c]]))
    return out


@dataclass
class Rep:
    name: str
    dim: int
    gen1: RingMatrix
    gen2: RingMatrix
    gen1inv: RingMatrix
    gen2inv: RingMatrix

    def letter(self, x: int) -> RingMatrix:
        return {1: self.gen1, 2: self.gen2, -1: self.gen1inv, -2: self.gen2inv}[x]


_REPS: Optional[List[Rep]] = None


def reps() -> List[Rep]:
    global _REPS
    if _REPS is None:
        out = []
        for name, (g1, g2) in _models().items():
            out.append(Rep(name, g1.rows, g1, g2, g1.inverse_unit(), g2.inverse_unit()))
        _REPS = [next(r for r in out if r.name == n) for n in BLOCKS]
    return _REPS


def rep(name: str) -> Rep:
    return next(r for r in reps() if r.name == name)


# ---------------------------------------------------------------------------
# evaluation over an arbitrary coefficient domain

def _mm(A: Mat, B: Mat, dom) -> Mat:
    n, m, k = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(k):
            s = dom.zero
            for t in range(m):
                x = Ai[t]
                if not dom.is_zero(x):
                    y = B[t][j]
                    if not dom.is_zero(y):
                        s = s + x * y
            row.append(s)
        out.append(row)
    return out


class Evaluator:
    """Caches word images block by block for one coefficient domain."""

    def __init__(self, dom=None):
        self.dom = dom or LaurentDomain()
        d = self.dom
        self.gens = []
        for r in reps():
            self.gens.append({x: [[d.from_lp(v) for v in row] for row in r.letter(x).entries]
                              for x in (1, 2, -1, -2)})
        self.cache: Dict[Word, List[Mat]] = {}

    def word(self, w: Word) -> List[Mat]:
        w = tuple(w)
        if w in self.cache:
            return self.cache[w]
        if not w:
            d = self.dom
            res = [[[d.one if i == j else d.zero for j in range(len(g[1]))] for i in range(len(g[1]))]
                   for g in self.gens]
        else:
            head = self.word(w[:-1])
            res = [_mm(h, g[w[-1]], self.dom) for h, g in zip(head, self.gens)]
        self.cache[w] = res
        return res

    def elem(self, x: AlgElem) -> List[Mat]:
        if x.strands != 3:
            raise ValueError("evaluation needs a 3-strand element")
        d = self.dom
        out = [[[d.zero] * len(g[1]) for _ in g[1]] for g in self.gens]
        for w, c in x.terms.items():
            cc = d.from_lp(c)
            for blk, m in zip(out, self.word(w)):
                for i, row in enumerate(m):
                    for j, v in enumerate(row):
                        if not d.is_zero(v):
                            blk[i][j] = blk[i][j] + cc * v
        return out


class Phi3Image:
    def __init__(self, blocks: List[Mat], dom):
        self.blocks = blocks
        self.dom = dom

    def block(self, name: str) -> Mat:
        return self.blocks[BLOCKS.index(name)]

    def coords(self, quotient: bool = False) -> list:
        out = []
        for name, blk in zip(BLOCKS, self.blocks):
            if quotient and name == QUOTIENT_BLOCK:
                continue
            for row in blk:
                out.extend(row)
        return out

    def is_zero(self, quotient: bool = False) -> bool:
        return all(self.dom.is_zero(x) for x in self.coords(quotient))

    def nonzero_blocks(self) -> List[str]:
        return [n for n, b in zip(BLOCKS, self.blocks)
                if any(not self.dom.is_zero(x) for r in b for x in r)]


_SYMBOLIC: Optional[Evaluator] = None


def symbolic_evaluator() -> Evaluator:
    global _SYMBOLIC
    if _SYMBOLIC is None:
        _SYMBOLIC = Evaluator()
    return _SYMBOLIC


def phi_h3_eval(x: AlgElem, ev: Optional[Evaluator] = None) -> Phi3Image:
    ev = ev or symbolic_evaluator()
    return Phi3Image(ev.elem(x), ev.dom)


def block_matrix(img: Phi3Image, name: str) -> RingMatrix:
    return RingMatrix(img.block(name))


# ---------------------------------------------------------------------------
# membership in the defining ideal of Q_3

def _quadratic_quotient_zero(coeffs: Dict[int, LaurentPoly]) -> bool:
    """Is sum coeffs[k] s^k zero in R[s]/((s-b)(s-c))?"""
    e = _env()
    b, c = e["b"], e["c"]
    # s^k = p_k + q_k s
    p, q = e["a"] ** 0, 0 * b
    lo, hi = 0 * b, 0 * b
    for k in range(max(coeffs) + 1 if coeffs else 0):
        if k in coeffs:
            lo = lo + coeffs[k] * p
            hi = hi + coeffs[k] * q
        p, q = -(b * c) * q, p + (b + c) * q
    return lo.is_zero() and hi.is_zero()


def ideal_membership(x: AlgElem, with_witness: bool = False):
    img = phi_h3_eval(x)
    d = delta()
    witness = None
    bad = [n for n in img.nonzero_blocks() if n != QUOTIENT_BLOCK]
    if bad:
        witness = {"step": 1, "nonzero_blocks": bad}
    else:
        for row in img.block(QUOTIENT_BLOCK):
            for v in row:
                if lp_divide_exact(v, d) is None:
                    witness = {"step": 1, "not_divisible": str(v)}
                    break
            if witness:
                break
    if witness is None:
        e = _env()
        h = hecke_eval(x, e["b"], e["c"])
        by_len: Dict[int, LaurentPoly] = {}
        for perm, cf in h.terms.items():
            qcf = lp_divide_exact(cf, d)
            if qcf is None:
                witness = {"step": 2, "not_divisible": str(cf), "perm": list(perm)}
                break
            l = perm_length(perm)
            by_len[l] = by_len[l] + qcf if l in by_len else qcf
        if witness is None and not _quadratic_quotient_zero(by_len):
            witness = {"step": 2, "nonzero_in_quotient": {k: str(v) for k, v in by_len.items()}}
    ok = witness is None
    return (ok, witness) if with_witness else ok


# ---------------------------------------------------------------------------
# coordinates in a basis of Q_3

class BasisError(ArithmeticError):
    pass


def coordinate_matrix(basis: Sequence[Word], ev: Optional[Evaluator] = None) -> RingMatrix:
    ev = ev or symbolic_evaluator()
    cols = [phi_h3_eval(AlgElem.word(w), ev).coords(quotient=True) for w in basis]
    return RingMatrix([list(r) for r in zip(*cols)])


def signed_basis() -> List[Word]:
    from .rewrite import build_system, enumerate_avoiding
    return enumerate_avoiding(build_system("signed1"))


def nf_coordinates(x: AlgElem) -> Dict[Word, LaurentPoly]:
    """Coordinates in the signed1 basis read off the normal form."""
    from .rewrite import build_system, normal_form
    nf = normal_form(x, build_system("signed1"))
    return dict(nf.terms)


def express_in_basis(x: AlgElem, basis: Sequence[Word], demand_R: bool = True,
                     method: str = "nf"):
    """Coordinates of x in Q_3 with respect to basis.

    method "nf": rewrite x and every basis word to signed1 normal form and
    solve the (nearly unitriangular) change of basis exactly.  The answer
    is then certified independently: x - sum(coeff * word) must vanish on
    the 20 quotient coordinates of the embedding.
    method "phi": fraction-free elimination directly on the embedding
    coordinates (exact but slow, about two minutes for 20 words).

    Returns {word: LaurentPoly} when demand_R, else {word: RatFunc}.
    """
    basis = [tuple(w) for w in basis]
    if method == "phi":
        M = coordinate_matrix(basis)
        rhs = phi_h3_eval(x).coords(quotient=True)
    elif method == "nf":
        b0 = signed_basis()
        idx = {w: i for i, w in enumerate(b0)}
        zero = LaurentPoly.const(0)
        cols = [nf_coordinates(AlgElem.word(w)) for w in basis]
        M = RingMatrix([[col.get(w, zero) for col in cols] for w in b0])
        lam = nf_coordinates(x)
        rhs = [lam.get(w, zero) for w in b0]
    else:
        raise ValueError("unknown method %r" % method)
    if method == "nf" and set(basis) == set(b0):
        vals = {w: rhs[idx[w]] for w in basis}
        sol = None
    else:
        try:
            sol = mat_solve_bareiss(M, RingMatrix([[v] for v in rhs]))
        except SolveError as e:
            raise BasisError(str(e))
        ring_vals = sol.in_ring()
        if ring_vals is None:
            if demand_R:
                bad = [basis[i] for i in range(len(basis))
                       if lp_divide_exact(sol.numer[i][0], sol.denom) is None]
                raise BasisError("coefficients outside R on %r" % bad)
            return {w: sol.entry(i) for i, w in enumerate(basis)}
        vals = {w: ring_vals[i][0] for i, w in enumerate(basis)}
    if method == "nf" and not equal_in_q3(x, combination(vals)):
        raise BasisError("normal-form coordinates fail the embedding check")
    if not demand_R:
        from .ring import RatFunc
        return {w: RatFunc(v) for w, v in vals.items()}
    return vals


def combination(coeffs: Dict[Word, LaurentPoly]) -> AlgElem:
    return AlgElem({w: c for w, c in coeffs.items()})


def equal_in_q3(x: AlgElem, y: AlgElem) -> bool:
    return phi_h3_eval(x - y).is_zero(quotient=True)


# ---------------------------------------------------------------------------
# identities

H3_BASIS: Tuple[Word, ...] = (
    (), (1,), (-1,), (2,), (-2,), (1, 2), (1, -2), (-1, 2), (-1, -2), (1, 2, 1), (1, 2, -1),
    (-1, 2, 1), (-1, 2, -1), (1, -2, 1), (-1, -2, 1), (2, 1), (-2, 1), (2, -1), (-2, -1),
    (1, -2, -1), (-1, -2, -1), (2, -1, 2), (1, 2, -1, 2), (-1, 2, -1, 2),
)


def expected_phi_r1() -> RingMatrix:
    e = _env()
    a, b, c = e["a"], e["b"], e["c"]
    k = delta()
    w = a * b * c
    return RingMatrix([[k / w, (k * (b - c)) / (w * b)], [(k * (b - c)) / (w * c), -(k / w)]])


def expected_phi_r2() -> RingMatrix:
    e = _env()
    b, c = e["b"], e["c"]
    k = delta()
    return RingMatrix([[k * (b - c), -(k * c)], [-(k * b), k * (c - b)]])


def u_span_words() -> List[Word]:
    """Words spanning u_1 u_2 + u_2 u_1, u_i = span(1, s_i, s_i^-1)."""
    out = []
    for x in ((), (1,), (-1,)):
        for y in ((), (2,), (-2,)):
            for w in (x + y, y + x):
                if w not in out:
                    out.append(w)
    return out


def verify_q3_identities() -> List[dict]:
    e = _env()
    a, b, c = e["a"], e["b"], e["c"]
    r1, r2 = defining_relations()
    out = []

    def rec(name, ok, **kw):
        out.append(dict(check=name, ok=bool(ok), **kw))

    i1, i2 = phi_h3_eval(r1), phi_h3_eval(r2)
    rec("phi_r1_block", block_matrix(i1, "U_bc") == expected_phi_r1())
    rec("phi_r2_block", block_matrix(i2, "U_bc") == expected_phi_r2())
    rec("phi_r1_other_blocks_zero", i1.nonzero_blocks() == ["U_bc"])
    rec("phi_r2_other_blocks_zero", i2.nonzero_blocks() == ["U_bc"])
    lhs = AlgElem.word((2,)) * r1 * AlgElem.word((-1, -2))
    rec("s2_r1_conj", phi_h3_eval(lhs.scale(a * b * b * c * c) - r2).is_zero())
    rec("phi_r1", phi_h3_eval(apply_symmetry(r1, "phi") - r1.scale(a ** -2)).is_zero())
    rec("psi_r1", phi_h3_eval(apply_symmetry(r1, "psi") + r1.scale(a ** -2)).is_zero())
    rec("phipsi_r1", phi_h3_eval(apply_symmetry(r1, "phipsi") + r1).is_zero())
    # the commutator-like element lies in u1 u2 + u2 u1, inside H_3 itself
    x = AlgElem.combo([(1, (-2, 1, -2, 1)), (-1, (1, -2, 1, -2))])
    span = u_span_words()
    cols = [phi_h3_eval(AlgElem.word(w)).coords() for w in span]
    M = RingMatrix([list(r) for r in zip(*cols)])
    try:
        sol = mat_solve_bareiss(M, RingMatrix([[v] for v in phi_h3_eval(x).coords()]))
        rec("commutator_in_u1u2", True, span_size=len(span), in_R=sol.in_ring() is not None)
    except SolveError as err:
        rec("commutator_in_u1u2", False, error=str(err))
    return out


def h3_rank_at(point, basis: Sequence[Word] = H3_BASIS) -> int:
    """Rank of the 24 coordinate vectors of the basis at a rational point."""
    from .ring import FractionDomain, rank_fraction
    ev = Evaluator(FractionDomain(point))
    return rank_fraction([phi_h3_eval(AlgElem.word(w), ev).coords() for w in basis])


# ---------------------------------------------------------------------------
# the second basis of Q_3

ALT_BASIS: Tuple[Word, ...] = (
    (), (-2,), (-2, -1), (-2, 1), (-1,), (-1, -2), (-1, 2), (1,), (1, -2), (1, 2),
    (2,), (2, -1), (2, 1), (-2, -1, -2), (2, -1, -2), (2, 1, -2), (-2, -1, 2), (2, 1, 2),
    (-2, 1, -2), (-1, 2, -1),
)


def _in_u_products(w: Word) -> bool:
    """Is w literally a word of u1u2, u2u1, 2bar u1u2 or u2u1 2bar?"""
    def split(v, first, second):
        for i in range(len(v) + 1):
            x, y = v[:i], v[i:]
            if len(x) <= 1 and len(y) <= 1 and all(abs(l) == first for l in x) \
                    and all(abs(l) == second for l in y):
                return True
        return False
    if split(w, 1, 2) or split(w, 2, 1):
        return True
    if w[:1] == (-2,) and split(w[1:], 1, 2):
        return True
    return w[-1:] == (-2,) and split(w[:-1], 2, 1)


def change_matrix(basis: Sequence[Word]) -> RingMatrix:
    """Columns: signed1 coordinates of each word of basis."""
    b0 = signed_basis()
    zero = LaurentPoly.const(0)
    cols = [nf_coordinates(AlgElem.word(w)) for w in basis]
    return RingMatrix([[col.get(w, zero) for col in cols] for w in b0])


def verify_alt_basis() -> List[dict]:
    e = _env()
    a, b, c = e["a"], e["b"], e["c"]
    out = []

    def rec(name, ok, **kw):
        out.append(dict(check=name, ok=bool(ok), **kw))

    b0 = signed_basis()
    # each normal form is also checked through the embedding
    rec("nf_columns_certified",
        all(equal_in_q3(AlgElem.word(w), combination(nf_coordinates(AlgElem.word(w))))
            for w in ALT_BASIS))
    C = change_matrix(ALT_BASIS)
    d = C.det()
    rec("det_unit", d.is_unit(), det=format_laurent(d))
    try:
        inv = mat_solve_bareiss(C, RingMatrix.identity(len(b0))).in_ring()
    except SolveError:
        inv = None
    rec("inverse_in_R", inv is not None)
    if inv is not None:
        rec("inverse_checks", C * RingMatrix(inv) == RingMatrix.identity(len(b0)))
    rec("first_19_in_u_products",
        all(_in_u_products(w) or w == (2, 1, 2) for w in ALT_BASIS[:19]))
    x = express_in_basis(AlgElem.word((-2, 1, -2, 1, -2)), ALT_BASIS)
    zero = LaurentPoly.const(0)
    got1 = x.get((-1, 2, -1), zero)
    got2 = x.get((2, 1, 2), zero)
    rec("five_letter_coeff_1b21b", got1 * a * a == b * c, value=format_laurent(got1))
    rec("five_letter_coeff_121", got2 * a ** 4 * b * c == b * c - a * a, value=format_laurent(got2))
    rest = [w for w, v in x.items() if not v.is_zero() and w not in ((-1, 2, -1), (2, 1, 2))]
    rec("five_letter_remainder", all(_in_u_products(w) for w in rest))
    y = express_in_basis(AlgElem.word((2, -1, 2, -1, 2)), ALT_BASIS)
    rest = [w for w, v in y.items() if not v.is_zero() and w != (-1, 2, -1)]
    rec("companion_remainder", all(_in_u_products(w) or w == (2, 1, 2) for w in rest))
    got3 = y.get((-1, 2, -1), zero)
    rec("companion_coeff_1b21b", got3 == a * a, value=format_laurent(got3))
    return out
