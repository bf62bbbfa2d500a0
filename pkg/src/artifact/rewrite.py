"""Rewriting systems on words in s_1, s_2 and their normal forms.

Rule data lives in data/<name>.txt, one block per rule:

    rule N: <lhs letters>
      <coefficient> | <rhs letters>

Coefficients are expressions in a, b, c and u = a+b+c, v = ab+bc+ca,
w = abc; every division must be exact in Z[a^±1, b^±1, c^±1].
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import AlgElem
from .ring import LaurentPoly, eval_expr
from .words import Word

DEFAULT_STEP_CAP = 10 ** 5
STEP_CAP_ENV = "ARTIFACT_STEP_CAP"

SYSTEM_ALIASES = {"pos": "positive", "positive": "positive",
                  "signed1": "signed1", "signed2": "signed2"}


class StepCapExceeded(RuntimeError):
    pass


class EnumerationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class RewriteRule:
    index: int
    lhs: Word
    rhs: Tuple[Tuple[Word, LaurentPoly], ...]

    def rhs_elem(self) -> AlgElem:
        return AlgElem({w: c for w, c in self.rhs})

    def relation(self) -> AlgElem:
        """lhs - rhs as an element of the free algebra."""
        return AlgElem.word(self.lhs) - self.rhs_elem()


@dataclass
class RewriteSystem:
    name: str
    rules: List[RewriteRule]
    alphabet: Tuple[int, ...]
    _by_first: Dict[int, List[RewriteRule]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for r in sorted(self.rules, key=lambda r: (-len(r.lhs), r.index)):
            self._by_first.setdefault(r.lhs[0], []).append(r)

    @property
    def forbidden_patterns(self) -> List[Word]:
        return [r.lhs for r in self.rules]

    def find_redex(self, w: Word, rightmost: bool = False) -> Optional[Tuple[int, RewriteRule]]:
        """Leftmost (or rightmost) position holding a pattern; at one position
        the longest pattern wins, then the lower rule number."""
        positions = range(len(w) - 1, -1, -1) if rightmost else range(len(w))
        for i in positions:
            for r in self._by_first.get(w[i], ()):
                n = len(r.lhs)
                if w[i:i + n] == r.lhs:
                    return i, r
        return None

    def is_reducible(self, w: Word) -> bool:
        return self.find_redex(w) is not None


def parse_rules(text: str) -> List[RewriteRule]:
    env = None
    rules: List[RewriteRule] = []
    cur = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        m = re.match(r"rule\s+(\d+):\s*(.*)$", line)
        if m:
            if cur:
                rules.append(RewriteRule(cur[0], cur[1], tuple(cur[2])))
            lhs = tuple(int(x) for x in m.group(2).split())
            cur = (int(m.group(1)), lhs, [])
            continue
        if cur is None or "|" not in line:
            raise ValueError("line %d: expected a rule header or a term" % lineno)
        ctext, wtext = line.split("|", 1)
        if env is None:
            from .ring import ring_env
            env = ring_env()
        try:
            c = eval_expr(ctext.strip(), env)
        except ArithmeticError as e:
            raise ValueError("line %d: coefficient %r is not in the ring (%s)" % (lineno, ctext.strip(), e))
        cur[2].append((tuple(int(x) for x in wtext.split()), c))
    if cur:
        rules.append(RewriteRule(cur[0], cur[1], tuple(cur[2])))
    for r in rules:
        if any(r.lhs == w for w, _ in r.rhs):
            raise ValueError("rule %d reproduces its own left side" % r.index)
    return rules


_CACHE: Dict[str, RewriteSystem] = {}


def build_system(kind: str) -> RewriteSystem:
    name = SYSTEM_ALIASES.get(kind)
    if name is None:
        raise ValueError("unknown system %r (pos, signed1, signed2)" % kind)
    if name not in _CACHE:
        text = resources.files("artifact").joinpath("data", name + ".txt").read_text()
        alphabet = (1, 2) if name == "positive" else ((1, 2, -1, -2) if name == "signed1" else (1, -1, 2, -2))
        _CACHE[name] = RewriteSystem(name, parse_rules(text), alphabet)
    return _CACHE[name]


def _step_cap(step_cap: Optional[int]) -> int:
    if step_cap is not None:
        return step_cap
    env = os.environ.get(STEP_CAP_ENV)
    return int(env) if env else DEFAULT_STEP_CAP


class _Reducer:
    def __init__(self, sys: RewriteSystem, cap: int, rightmost: bool):
        self.sys = sys
        self.cap = cap
        self.rightmost = rightmost
        self.memo: Dict[Word, Dict[Word, LaurentPoly]] = {}

    def word_nf(self, w: Word) -> Dict[Word, LaurentPoly]:
        # explicit stack so long rewriting chains do not hit the recursion limit
        memo = self.memo
        if w in memo:
            return memo[w]
        steps = 0
        onstack = set()
        stack = [w]
        while stack:
            top = stack[-1]
            if top in memo:
                stack.pop()
                continue
            red = self.sys.find_redex(top, self.rightmost)
            if red is None:
                memo[top] = {top: LaurentPoly.const(1)}
                stack.pop()
                continue
            i, r = red
            children = [(top[:i] + rw + top[i + len(r.lhs):], c) for rw, c in r.rhs]
            pending = [cw for cw, _ in children if cw not in memo]
            if pending:
                if top in onstack:
                    raise StepCapExceeded("rewriting cycles through %r" % (top,))
                onstack.add(top)
                steps += 1
                if steps > self.cap:
                    raise StepCapExceeded("step cap %d exhausted reducing %r" % (self.cap, w))
                stack.extend(pending)
                continue
            acc: Dict[Word, LaurentPoly] = {}
            for cw, c in children:
                for nw, nc in memo[cw].items():
                    p = c * nc
                    s = acc.get(nw)
                    acc[nw] = p if s is None else s + p
            memo[top] = {k: v for k, v in acc.items() if not v.is_zero()}
            onstack.discard(top)
            stack.pop()
        return memo[w]


_REDUCERS: Dict[Tuple[str, bool], _Reducer] = {}


def _reducer(sys: RewriteSystem, cap: int, rightmost: bool) -> _Reducer:
    key = (sys.name, rightmost)
    red = _REDUCERS.get(key)
    if red is None or red.sys is not sys:
        red = _REDUCERS[key] = _Reducer(sys, cap, rightmost)
    red.cap = cap
    return red


def normal_form(x: AlgElem, sys: RewriteSystem, step_cap: Optional[int] = None,
                rightmost: bool = False) -> AlgElem:
    if any(abs(l) > 2 for w in x.terms for l in w):
        raise ValueError("rewriting systems act on words in s_1, s_2 only")
    red = _reducer(sys, _step_cap(step_cap), rightmost)
    acc: Dict[Word, LaurentPoly] = {}
    for w, c in x.terms.items():
        for nw, nc in red.word_nf(w).items():
            p = c * nc
            s = acc.get(nw)
            acc[nw] = p if s is None else s + p
    return AlgElem({k: v for k, v in acc.items() if not v.is_zero()}, x.strands)


def nf_word(w: Sequence[int], sys: RewriteSystem) -> AlgElem:
    return normal_form(AlgElem.word(tuple(w)), sys)


def enumerate_avoiding(sys: RewriteSystem, length_cap: int = 12) -> List[Word]:
    """All words over the alphabet avoiding every pattern, shortest first.

    Raises if words of length length_cap still avoid the patterns, since the
    set would then not be known to be finite.
    """
    out: List[Word] = [()]
    layer: List[Word] = [()]
    for n in range(1, length_cap + 1):
        nxt = []
        for w in layer:
            for x in sys.alphabet:
                cand = w + (x,)
                # only suffixes can contain a new occurrence
                if not _suffix_hit(sys, cand):
                    nxt.append(cand)
        if not nxt:
            return out
        out.extend(nxt)
        layer = nxt
    raise EnumerationCapExceeded("avoiding words persist at length %d" % length_cap)


def _suffix_hit(sys: RewriteSystem, w: Word) -> bool:
    for p in sys.forbidden_patterns:
        if len(p) <= len(w) and w[len(w) - len(p):] == p:
            return True
    return False


def check_local_confluence(sys: RewriteSystem, samples: Sequence[Sequence[int]]) -> List[dict]:
    """Reduce each sample with leftmost and rightmost redex choice; list the
    samples where the two results differ."""
    bad = []
    for s in samples:
        x = AlgElem.word(tuple(s))
        left = normal_form(x, sys)
        right = normal_form(x, sys, rightmost=True)
        if left != right:
            bad.append({"word": list(s), "leftmost": left.to_json(), "rightmost": right.to_json()})
    return bad
