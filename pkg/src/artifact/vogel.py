"""Vogel's algebra V_n: Brauer diagrams, matrix models for n = 2, 3, 4,
morphisms to the group algebra and the Brauer algebra, and the 20-element
spanning set of V_3.

Parameters alpha, beta are exact rationals; all checks are exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

from .ring import rank_fraction

Q = Fraction
QMat = List[List[Fraction]]
Perm = Tuple[int, ...]

DEFAULT_PARAMS = (Q(3), Q(-1))
EXTRA_PARAMS = ((Q(5), Q(-2)), (Q(7, 2), Q(-5, 3)))


# ---------------------------------------------------------------------------
# rational matrices

def qmat(rows) -> QMat:
    return [[Q(x) for x in r] for r in rows]


def eye(n: int) -> QMat:
    return [[Q(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> QMat:
    return [[Q(0)] * c for _ in range(r)]


def mmul(A: QMat, B: QMat) -> QMat:
    Bt = list(zip(*B))
    return [[sum((x * y for x, y in zip(row, col)), Q(0)) for col in Bt] for row in A]


def madd(A: QMat, B: QMat, c=1) -> QMat:
    return [[x + c * y for x, y in zip(r, s)] for r, s in zip(A, B)]


def mscale(A: QMat, c) -> QMat:
    return [[c * x for x in r] for r in A]


def is_zero(A: QMat) -> bool:
    return all(x == 0 for r in A for x in r)


def block_diag(*blocks: QMat) -> QMat:
    n = sum(len(b) for b in blocks)
    out = zeros(n, n)
    k = 0
    for b in blocks:
        for i, r in enumerate(b):
            for j, x in enumerate(r):
                out[k + i][k + j] = x
        k += len(b)
    return out


def minv(A: QMat) -> QMat:
    n = len(A)
    m = [list(r) + e for r, e in zip(A, eye(n))]
    for c in range(n):
        p = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[p] = m[p], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [r[n:] for r in m]


def nullity(A: QMat) -> int:
    return len(A) - rank_fraction(A)


def comm(A: QMat, B: QMat) -> QMat:
    return madd(mmul(A, B), mmul(B, A), -1)


def spectrum(T: QMat, values: Sequence[Fraction]) -> Dict[Fraction, int]:
    """Geometric multiplicity of each listed eigenvalue."""
    n = len(T)
    return {v: nullity(madd(T, eye(n), -v)) for v in values}


# ---------------------------------------------------------------------------
# Brauer diagrams

@dataclass(frozen=True)
class BrauerDiagram:
    """Perfect matching on 2n points: 0..n-1 on top, n..2n-1 on the bottom.

    A permutation w joins bottom i to top w(i), so d1*d2 (d1 stacked on d2)
    composes like functions."""
    n: int
    match: Tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "BrauerDiagram":
        return cls.perm(tuple(range(n)))

    @classmethod
    def perm(cls, w: Perm) -> "BrauerDiagram":
        n = len(w)
        m = [0] * (2 * n)
        for i, wi in enumerate(w):
            m[n + i], m[wi] = wi, n + i
        return cls(n, tuple(m))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "BrauerDiagram":
        return cls.perm(transposition(n, i, j))

    @classmethod
    def p(cls, n: int, i: int, j: int) -> "BrauerDiagram":
        m = list(cls.identity(n).match)
        for x, y in ((i, j), (n + i, n + j)):
            m[x], m[y] = y, x
        return cls(n, tuple(m))

    def is_permutation(self) -> bool:
        return all((k < self.n) != (self.match[k] < self.n) for k in range(2 * self.n))


def brauer_mul(d1: BrauerDiagram, d2: BrauerDiagram, m=1) -> Tuple[BrauerDiagram, object]:
    """Stack d1 on top of d2; each closed loop contributes a factor m."""
    if d1.n != d2.n:
        raise ValueError("diagram sizes differ")
    n = d1.n
    # points: ("1", k) for d1, ("2", k) for d2; d1 bottom n+k is glued to d2 top k
    def other_side(side, k):
        if side == 1 and k >= n:
            return 2, k - n
        if side == 2 and k < n:
            return 1, k + n
        return None

    out = [None] * (2 * n)
    seen_mid = set()
    starts = [(1, k) for k in range(n)] + [(2, k) for k in range(n, 2 * n)]

    for side, k in starts:
        if out[k] is not None:
            continue
        s, p = side, k
        while True:
            q = (d1 if s == 1 else d2).match[p]
            nxt = other_side(s, q)
            if nxt is None:
                break
            seen_mid.add(q - n if s == 1 else q)
            s, p = nxt
        out[k] = q
        out[q] = k
    loops = 0
    for k in range(n):
        if k in seen_mid:
            continue
        loops += 1
        s, p = 2, k
        while True:
            q = (d1 if s == 1 else d2).match[p]
            mid = q - n if s == 1 else q
            seen_mid.add(mid)
            s, p = other_side(s, q)
            if s == 2 and p == k:
                break
    return BrauerDiagram(n, tuple(out)), m ** loops


# Brauer algebra elements: dict diagram -> coefficient
BrElem = Dict[BrauerDiagram, object]


def br_add(x: BrElem, y: BrElem, c=1) -> BrElem:
    out = dict(x)
    for d, v in y.items():
        s = out.get(d, 0) + c * v
        if s == 0:
            out.pop(d, None)
        else:
            out[d] = s
    return out


def br_mul(x: BrElem, y: BrElem, m) -> BrElem:
    out: BrElem = {}
    for d1, c1 in x.items():
        for d2, c2 in y.items():
            d, s = brauer_mul(d1, d2, m)
            out = br_add(out, {d: c1 * c2 * s})
    return out


def br_comm(x: BrElem, y: BrElem, m) -> BrElem:
    return br_add(br_mul(x, y, m), br_mul(y, x, m), -1)


# ---------------------------------------------------------------------------
# symmetric group

def transposition(n: int, i: int, j: int) -> Perm:
    w = list(range(n))
    w[i], w[j] = j, i
    return tuple(w)


def compose(w1: Perm, w2: Perm) -> Perm:
    return tuple(w1[w2[k]] for k in range(len(w1)))


def pairs(n: int) -> List[Tuple[int, int]]:
    return list(combinations(range(n), 2))


# ---------------------------------------------------------------------------
# relations in an abstract algebra

def _relation_checks(n, s, t, mul, add, comm_, zero, alpha, beta, one):
    """Defining relations of V_n beyond S_n, for images s[(i,j)], t[(i,j)]."""
    out = []
    def ok_all(name, items):
        bad = [k for k, v in items if not zero(v)]
        out.append(dict(check=name, ok=not bad, witness=bad[:3]))
    ok_all("t_absorbs_transposition_right", [(p, add(mul(t[p], s[p]), t[p], -1)) for p in pairs(n)])
    ok_all("t_absorbs_transposition_left", [(p, add(mul(s[p], t[p]), t[p], -1)) for p in pairs(n)])
    quad = []
    for p in pairs(n):
        r = add(mul(t[p], t[p]), t[p], -(alpha + beta))
        r = add(r, add(one, s[p]), alpha * beta / 2)
        quad.append((p, r))
    ok_all("quadratic", quad)
    tri = []
    for i, j in permutations(range(n), 2):
        for k in range(n):
            if k in (i, j):
                continue
            key = lambda a, b: (min(a, b), max(a, b))
            tri.append(((i, j, k), comm_(t[key(i, j)], add(t[key(i, k)], t[key(j, k)]))))
    ok_all("infinitesimal_braid", tri)
    far = [((p, q), comm_(t[p], t[q])) for p in pairs(n) for q in pairs(n) if not set(p) & set(q)]
    ok_all("far_commutation", far)
    cub = []
    for p in pairs(n):
        r = mul(t[p], add(t[p], one, -alpha))
        r = mul(r, add(t[p], one, -beta))
        cub.append((p, r))
    ok_all("cubic_consequence", cub)
    return out


# ---------------------------------------------------------------------------
# matrix representations

@dataclass
class VogelRep:
    name: str
    n: int
    gens: List[QMat]          # images of (k, k+1), k = 0..n-2
    t12: QMat
    group: Dict[Perm, QMat] = field(default_factory=dict)
    t: Dict[Tuple[int, int], QMat] = field(default_factory=dict)
    well_defined: bool = True

    @property
    def dim(self) -> int:
        return len(self.t12)

    def build(self) -> "VogelRep":
        n = self.n
        e = tuple(range(n))
        self.group = {e: eye(self.dim)}
        frontier = [e]
        while frontier:
            nxt = []
            for w in frontier:
                for k, g in enumerate(self.gens):
                    w2 = compose(w, transposition(n, k, k + 1))
                    if w2 not in self.group:
                        self.group[w2] = mmul(self.group[w], g)
                        nxt.append(w2)
            frontier = nxt
        self.t = {}
        self.well_defined = True
        for w, M in self.group.items():
            p = tuple(sorted((w[0], w[1])))
            T = mmul(mmul(M, self.t12), minv(M))
            if p in self.t:
                self.well_defined &= self.t[p] == T
            else:
                self.t[p] = T
        return self

    def s(self, i: int, j: int) -> QMat:
        return self.group[transposition(self.n, i, j)]

    def word(self, letters) -> QMat:
        """Product of ('x', i) = t_{jk} and ('z', i) = (j,k) on 3 strands."""
        M = eye(self.dim)
        for kind, i in letters:
            j, k = [x for x in range(3) if x != i]
            M = mmul(M, self.t[(j, k)] if kind == "x" else self.s(j, k))
        return M


def verify_vogel_relations(rep: VogelRep, alpha, beta) -> List[dict]:
    if not rep.t:
        rep.build()
    n, d = rep.n, rep.dim
    out = []
    g = rep.gens
    out.append(dict(check="generators_involutive", ok=all(mmul(x, x) == eye(d) for x in g)))
    out.append(dict(check="generators_braid", ok=all(
        mmul(mmul(g[k], g[k + 1]), g[k]) == mmul(mmul(g[k + 1], g[k]), g[k + 1]) for k in range(n - 2))))
    out.append(dict(check="generators_far_commute", ok=all(
        mmul(g[k], g[l]) == mmul(g[l], g[k]) for k in range(n - 1) for l in range(k + 2, n - 1))))
    out.append(dict(check="group_order", ok=len(rep.group) == _factorial(n)))
    out.append(dict(check="t_conjugation_well_defined", ok=rep.well_defined))
    s = {p: rep.s(*p) for p in pairs(n)}
    out += _relation_checks(n, s, rep.t, mmul, madd, comm, is_zero, alpha, beta, eye(d))
    return out


def _factorial(n: int) -> int:
    return 1 if n <= 1 else n * _factorial(n - 1)


def t_spectrum(rep: VogelRep, values) -> dict:
    sp = spectrum(rep.t[(0, 1)], list(dict.fromkeys(values)))
    return dict(multiplicities={str(k): v for k, v in sp.items()},
                diagonalizable=sum(sp.values()) == rep.dim)


# S_3 and S_4 models for the symmetric group part
A = (qmat([[-1, 0, 0], [1, 1, 0], [0, 0, 1]]),
     qmat([[1, 1, 0], [0, -1, 0], [0, 1, 1]]),
     qmat([[1, 0, 0], [0, 1, 1], [0, 0, -1]]))
B = (qmat([[-1, 0], [0, 1]]), mscale(qmat([[1, 3], [1, -1]]), Q(1, 2)), qmat([[-1, 0], [0, 1]]))


def model_one_dim(n: int, sign: int, t: Fraction) -> VogelRep:
    return VogelRep("1d(%+d,%s)" % (sign, t), n, [[[Q(sign)]]] * (n - 1), [[Q(t)]]).build()


def model_expanded(name: str, gens: List[QMat], lam: Fraction) -> VogelRep:
    """t_ij = lam (1 + (i j)) on a representation of S_n."""
    d = len(gens[0])
    return VogelRep(name, len(gens) + 1, gens, mscale(madd(eye(d), gens[0]), lam)).build()


def model_v3(alpha, beta) -> VogelRep:
    """3-dimensional model on 3 strands, free pair fixed as b = 2d^2 - alpha beta, c = 1."""
    d = (alpha + beta) / 3
    b, c = 2 * d * d - alpha * beta, Q(1)
    s12 = qmat([[-1, 0, 0], [0, 1, 0], [0, 0, 1]])
    s23 = mscale(qmat([[1, 1, 0], [3, -1, 0], [0, 0, 2]]), Q(1, 2))
    t12 = qmat([[0, 0, 0], [0, 2 * d, b], [0, c, d]])
    return VogelRep("V3_dim3", 3, [s12, s23], t12).build()


def p12_six(alpha, beta) -> QMat:
    """Rank one correction of the 6-dimensional model; the first row vanishes."""
    col = [Q(0), (2 * alpha - beta) / 4, (beta - 2 * alpha) / 2, Q(-2), Q(1), Q(0)]
    row = [Q(0), Q(0), Q(1), -beta / 4, Q(0), Q(0)]
    return [[x * y for y in row] for x in col]


def model_six(alpha, beta) -> VogelRep:
    gens = [block_diag(a, mscale(a, -1)) for a in A]
    t12 = madd(mscale(madd(gens[0], eye(6)), alpha / 2), p12_six(alpha, beta))
    return VogelRep("V4_dim6", 4, gens, t12).build()


def model_eight(alpha, beta) -> VogelRep:
    """8-dimensional model; (a, c) solve alpha + beta = 8c, alpha beta = 12c^2 - 4a."""
    c = (alpha + beta) / 8
    a = (12 * c * c - alpha * beta) / 4
    gens = [block_diag(x, y, mscale(x, -1)) for x, y in zip(A, B)]
    z = [0] * 8
    t12 = qmat([z, [2 * c, 4 * c, c, 0, 2 * c * c + 2 * a, a, 0, 0], [0, 0, 2 * c, 0, 0, -2 * a, 0, 0], z,
                [1, 2, 1, 0, 4 * c, 0, 0, 0], [0, 0, -2, 0, 0, 6 * c, 0, 0], [0, 0, 1, 0, 0, -3 * c, 0, 0], z])
    return VogelRep("V4_dim8", 4, gens, t12).build()


# ---------------------------------------------------------------------------
# transposition-basis model

def perm_rep_t(n: int, lam, m, x) -> Dict[Tuple[int, int], QMat]:
    R = pairs(n)
    idx = {p: k for k, p in enumerate(R)}
    def conj(s, u):
        w = transposition(n, *s)
        return tuple(sorted((w[u[0]], w[u[1]])))
    t = {}
    for s in R:
        T = zeros(len(R), len(R))
        for u in R:
            j = idx[u]
            if u == s:
                T[j][j] += lam * (m + x)
                continue
            T[j][j] += x * lam
            T[idx[conj(s, u)]][j] += lam
            if set(s) & set(u):
                T[idx[s]][j] -= lam
        t[s] = T
    return t


def perm_rep_gens(n: int) -> List[QMat]:
    R = pairs(n)
    idx = {p: k for k, p in enumerate(R)}
    gens = []
    for k in range(n - 1):
        w = transposition(n, k, k + 1)
        G = zeros(len(R), len(R))
        for u in R:
            G[idx[tuple(sorted((w[u[0]], w[u[1]])))]][idx[u]] = Q(1)
        gens.append(G)
    return gens


def verify_perm_rep(n: int, lam, m, x) -> List[dict]:
    lam, m, x = Q(lam), Q(m), Q(x)
    t = perm_rep_t(n, lam, m, x)
    rep = VogelRep("perm(n=%d)" % n, n, perm_rep_gens(n), t[(0, 1)]).build()
    d = rep.dim
    out = [dict(check="dimension_binomial", ok=d == n * (n - 1) // 2)]
    out.append(dict(check="equivariant", ok=rep.well_defined and all(rep.t[p] == t[p] for p in pairs(n))))
    s = {p: rep.s(*p) for p in pairs(n)}
    rel = _relation_checks(n, s, t, mmul, madd, comm, is_zero, Q(0), Q(0), eye(d))
    for r in rel:
        if r["check"] in ("infinitesimal_braid", "far_commutation"):
            out.append(r)
    absorbs = all(mmul(s[p], t[p]) == t[p] for p in pairs(n))
    out.append(dict(check="absorption_iff_x_is_1", ok=absorbs == (x == 1), absorbs=absorbs))
    T = t[(0, 1)]
    ev = [lam * (m + 1), 2 * lam, Q(0)]
    cub = mmul(mmul(T, madd(T, eye(d), -ev[0])), madd(T, eye(d), -ev[1]))
    if x == 1:
        out.append(dict(check="cubic", ok=is_zero(cub)))
        sp = spectrum(T, ev)
        want = [1, (n - 1) * (n - 2) // 2, n - 2]
        out.append(dict(check="eigen_multiplicities", ok=[sp[v] for v in ev] == want,
                        got=[sp[v] for v in ev], expected=want))
    return out


def perm_rep_vogel(n: int, alpha, beta, use_alpha: bool = True) -> VogelRep:
    lam = (alpha if use_alpha else beta) / 2
    m = (alpha + beta) / lam - 3
    t = perm_rep_t(n, lam, m, Q(1))
    return VogelRep("perm_vogel(n=%d)" % n, n, perm_rep_gens(n), t[(0, 1)]).build()


# ---------------------------------------------------------------------------
# V_2 and morphism criteria

def verify_v2(alpha, beta) -> List[dict]:
    if alpha == 0 or beta == 0 or alpha == beta:
        raise ValueError("need alpha, beta distinct and nonzero")
    t, s = (Q(0), alpha, beta), (Q(-1), Q(1), Q(1))
    out = [dict(check="involution", ok=all(x * x == 1 for x in s)),
           dict(check="t_absorbs_s", ok=all(a * b == a for a, b in zip(t, s))),
           dict(check="quadratic", ok=all(a * a - (alpha + beta) * a + alpha * beta / 2 * (1 + b) == 0
                                          for a, b in zip(t, s))),
           dict(check="cubic", ok=all(a * (a - alpha) * (a - beta) == 0 for a in t))]
    vdm = (t[1] - t[0]) * (t[2] - t[0]) * (t[2] - t[1])
    out.append(dict(check="powers_of_t_basis", ok=vdm != 0, det=str(vdm)))
    out.append(dict(check="one_s_t_basis", ok=rank_fraction([[Q(1)] * 3, list(s), list(t)]) == 3))
    return out


def morphism_factor_check(kind: str, u, v, m, alpha, beta, n: int = 3) -> bool:
    """Whether t_ij -> u + v (i j) (phi) or u + v ((i j) - p_ij) (psi) respects V_n."""
    u, v, m = Q(u), Q(v), Q(m)
    one = {BrauerDiagram.identity(n): Q(1)}
    s, t = {}, {}
    for p in pairs(n):
        sp = BrauerDiagram.transposition(n, *p)
        s[p] = {sp: Q(1)}
        img = br_add({k: u * c for k, c in one.items()}, s[p], v)
        if kind == "psi":
            img = br_add(img, {BrauerDiagram.p(n, *p): Q(1)}, -v)
        elif kind != "phi":
            raise ValueError(kind)
        t[p] = img
    mul = lambda x, y: br_mul(x, y, m)
    com = lambda x, y: br_comm(x, y, m)
    res = _relation_checks(n, s, t, mul, br_add, com, lambda e: not e, Q(alpha), Q(beta), one)
    return all(r["ok"] for r in res)


def factor_criterion(kind: str, u, v, m, alpha, beta) -> bool:
    ok = u == v and u in (alpha / 2, beta / 2)
    return ok if kind == "phi" else ok and u * (m - 4) == -(alpha + beta)


def morphism_grid(alpha, beta) -> List[dict]:
    alpha, beta = Q(alpha), Q(beta)
    us = [alpha / 2, beta / 2, Q(1), Q(0)]
    m_of = lambda x: 4 - 2 * (1 + 1 / x)
    ms = [m_of(beta / alpha), m_of(alpha / beta), Q(1), Q(4)]
    out = []
    for kind in ("phi", "psi"):
        for u in us:
            for v in us:
                for m in (ms if kind == "psi" else [Q(1)]):
                    got = morphism_factor_check(kind, u, v, m, alpha, beta)
                    want = factor_criterion(kind, u, v, m, alpha, beta)
                    out.append(dict(kind=kind, u=str(u), v=str(v), m=str(m), factors=got, ok=got == want))
    return out


# ---------------------------------------------------------------------------
# the spanning set of V_3

def X(i):
    return ("x", i)


def Z(i):
    return ("z", i)


# x_i = t_jk and z_i = (j k) for {i, j, k} = {0, 1, 2}
B3_WORDS: Tuple[Tuple, ...] = (
    (), (X(0),), (X(1),), (X(2),), (Z(0),), (Z(1),), (Z(2),),
    (X(0), X(1)), (X(0), X(2)), (X(0), Z(1)), (X(0), Z(2)), (X(1), X(0)), (X(1), X(2)),
    (X(1), Z(0)), (X(1), Z(2)), (X(2), Z(0)), (X(2), Z(1)), (Z(0), Z(1)), (Z(0), Z(2)),
    (X(0), X(1), X(2)),
)


def check_generic(alpha, beta) -> None:
    d = (alpha + beta) / 3
    if 0 in (alpha, beta, alpha - beta, alpha + beta) or alpha * beta / 2 == d * d:
        raise ValueError("non-generic parameters (%s, %s)" % (alpha, beta))


def v3_irreducibles(alpha, beta) -> List[VogelRep]:
    std = list(B[:2])
    return [model_one_dim(3, -1, Q(0)), model_one_dim(3, 1, alpha), model_one_dim(3, 1, beta),
            model_expanded("std_alpha", std, alpha / 2), model_expanded("std_beta", std, beta / 2),
            model_v3(alpha, beta)]


def _flat(reps: List[VogelRep], letters) -> List[Fraction]:
    return [x for r in reps for row in r.word(letters) for x in row]


def b3_span_check(alpha, beta) -> List[dict]:
    alpha, beta = Q(alpha), Q(beta)
    check_generic(alpha, beta)
    reps = v3_irreducibles(alpha, beta)
    out = []
    for r in reps:
        bad = [c["check"] for c in verify_vogel_relations(r, alpha, beta) if not c["ok"]]
        out.append(dict(check="irrep_%s" % r.name, ok=not bad, failed=bad))
    dim = sum(r.dim ** 2 for r in reps)
    out.append(dict(check="model_dimension_20", ok=dim == 20))
    M = [_flat(reps, w) for w in B3_WORDS]
    rank = rank_fraction(M)
    out.append(dict(check="rank_20", ok=rank == 20, rank=rank))
    bad = [(w, i) for w in B3_WORDS for i in range(3)
           if rank_fraction(M + [_flat(reps, w + (X(i),))]) != rank]
    out.append(dict(check="closure_right_x", ok=not bad, witness=bad[:3]))
    ev = lambda w: _flat(reps, w)
    lin = lambda *terms: [sum((c * v[k] for c, v in terms), Q(0)) for k in range(20)]
    x, z = X, Z
    ab, s = alpha * beta / 2, alpha + beta
    ids = {
        "x1x2x1_eq_x1x3x1": lin((1, ev((x(0), x(1), x(0)))), (-1, ev((x(0), x(2), x(0))))),
        "commutator_z3": lin((1, ev((x(0), x(1), z(2)))), (-1, ev((x(1), x(0), z(2)))),
                             (-1, ev((x(2), x(1)))), (1, ev((x(0), x(2))))),
        "x3x1_in_span": lin((1, ev((x(2), x(0)))), (-1, ev((x(0), x(1)))), (-1, ev((x(0), x(2)))),
                            (1, ev((x(1), x(0))))),
        "two_x1x2x1": lin((2, ev((x(0), x(1), x(0)))), (ab, ev((x(2), z(0)))), (ab, ev((x(1), z(0)))),
                          (-s, ev((x(0), x(2)))), (-s, ev((x(0), x(1)))), (ab, ev((x(2),))),
                          (ab, ev((x(1),)))),
    }
    for name, v in ids.items():
        out.append(dict(check=name, ok=all(c == 0 for c in v)))
    return out


# ---------------------------------------------------------------------------
# suites

def verify_models(alpha, beta) -> List[dict]:
    alpha, beta = Q(alpha), Q(beta)
    out = []
    def add(rep, expect):
        rel = verify_vogel_relations(rep, alpha, beta)
        bad = [c["check"] for c in rel if not c["ok"]]
        sp = t_spectrum(rep, list(expect))
        ok_sp = sp["diagonalizable"] and all(sp["multiplicities"][str(k)] == v for k, v in expect.items())
        out.append(dict(check="relations_%s" % rep.name, ok=not bad, failed=bad))
        out.append(dict(check="spectrum_%s" % rep.name, ok=ok_sp, **sp))
    add(model_v3(alpha, beta), {Q(0): 1, alpha: 1, beta: 1})
    add(model_six(alpha, beta), {Q(0): 3, alpha: 2, beta: 1})
    swapped = model_six(beta, alpha)
    swapped.name = "V4_dim6_swapped"
    add(swapped, {Q(0): 3, beta: 2, alpha: 1})
    add(model_eight(alpha, beta), {Q(0): 4, alpha: 2, beta: 2})
    p = p12_six(alpha, beta)
    out.append(dict(check="p12_rank_1", ok=rank_fraction(p) == 1))
    out.append(dict(check="p12_eigenvalue", ok=sum(p[i][i] for i in range(6)) == beta - alpha))
    for use_alpha in (True, False):
        rep = perm_rep_vogel(4, alpha, beta, use_alpha)
        bad = [c["check"] for c in verify_vogel_relations(rep, alpha, beta) if not c["ok"]]
        out.append(dict(check="perm_rep_vogel_%s" % ("alpha" if use_alpha else "beta"), ok=not bad, failed=bad))
    return out


def verify_vogel(alpha=None, beta=None, extra: bool = True) -> List[dict]:
    points = [(Q(alpha), Q(beta))] if alpha is not None else [DEFAULT_PARAMS]
    if extra:
        points += [p for p in EXTRA_PARAMS if p not in points]
    out = []
    for al, be in points:
        tag = "(%s,%s)" % (al, be)
        rows = verify_v2(al, be) + verify_models(al, be) + b3_span_check(al, be)
        grid = morphism_grid(al, be)
        rows.append(dict(check="morphism_grid", ok=all(g["ok"] for g in grid), cases=len(grid)))
        rows += verify_perm_rep(4, al / 2, (al + be) / (al / 2) - 3, 1)
        rows += [dict(check="perm_rep_x0_" + r["check"], ok=r["ok"])
                 for r in verify_perm_rep(4, al / 2, Q(2), 0) if r["check"] == "absorption_iff_x_is_1"]
        for r in rows:
            r["point"] = tag
        out += rows
    return out
