"""Signed braid words: i stands for s_i, -i for its inverse."""
from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

Word = Tuple[int, ...]


@dataclass(frozen=True)
class SignedWord:
    letters: Word
    strands: int

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("need at least 2 strands")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError("letter %d invalid on %d strands" % (x, self.strands))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def reduced(self) -> "SignedWord":
        return SignedWord(free_reduce(self.letters), self.strands)

    def __mul__(self, other: "SignedWord") -> "SignedWord":
        return SignedWord(free_reduce(self.letters + other.letters),
                          max(self.strands, other.strands))

    def __str__(self):
        return format_word(self.letters)


def free_reduce(w: Iterable[int]) -> Word:
    out: List[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def mirror(w: Sequence[int]) -> Word:
    return tuple(-x for x in w)


def inverse_rev(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def shift(w: Sequence[int], k: int, strands: Optional[int] = None) -> Word:
    out = tuple(x + k if x > 0 else x - k for x in w)
    if any(x == 0 or (x > 0) != (y > 0) for x, y in zip(out, w)):
        raise ValueError("shift out of range")
    if strands is not None and any(abs(x) >= strands for x in out):
        raise ValueError("shift out of range for %d strands" % strands)
    return out


def apply_word_symmetry(w: SignedWord, kind: str, k: int = 1) -> SignedWord:
    if kind == "mirror":
        return SignedWord(mirror(w.letters), w.strands)
    if kind == "inverse_rev":
        return SignedWord(inverse_rev(w.letters), w.strands)
    if kind == "shift":
        return SignedWord(shift(w.letters, k, w.strands), w.strands)
    raise ValueError("unknown symmetry %r" % kind)


def parse_word(text: str) -> Word:
    """Accept "1 2 -1", "1,2,-1" or "1 2 1'" (apostrophe = inverse)."""
    s = text.strip()
    if s in ("", "e", "()", "[]"):
        return ()
    out = []
    for tok in re.split(r"[\s,]+", s.strip("[]()")):
        if not tok:
            continue
        m = re.fullmatch(r"(-?)(\d+)('?)", tok)
        if not m or int(m.group(2)) == 0:
            raise ValueError("bad letter %r in word %r" % (tok, text))
        x = int(m.group(2))
        if bool(m.group(1)) != bool(m.group(3)):
            x = -x
        out.append(x)
    return tuple(out)


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(x) for x in w) if w else "e"


def perm_image(w: Sequence[int], n: int) -> Tuple[int, ...]:
    p = list(range(n))
    for x in w:
        i = abs(x) - 1
        p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def writhe(w: Sequence[int]) -> int:
    return sum(1 if x > 0 else -1 for x in w)


def _moves(w: Word):
    n = len(w)
    for i in range(n - 1):
        x, y = w[i], w[i + 1]
        if abs(abs(x) - abs(y)) >= 2:
            yield w[:i] + (y, x) + w[i + 2:]
    for i in range(n - 2):
        x, y, z = w[i], w[i + 1], w[i + 2]
        if abs(x) != abs(z) or abs(abs(x) - abs(y)) != 1:
            continue
        # x y z with |x| = |z|: the six signed forms of the braid relation
        if x == z:
            if (x > 0) == (y > 0):
                yield w[:i] + (y, x, y) + w[i + 3:]
            continue
        # x = -z: i j i^-1 = j^-1 i j and its sign variants
        if (x > 0) == (y > 0):
            yield w[:i] + (-y, x, y) + w[i + 3:]
        else:
            yield w[:i] + (y, z, -y) + w[i + 3:]


def braid_equal_bfs(w1: Sequence[int], w2: Sequence[int], depth: Optional[int] = None,
                    budget: int = 10 ** 6, strands: Optional[int] = None,
                    slack: int = 0) -> str:
    """Search for a rewrite path from w1 w2^-1 to the empty word.

    Moves are far commutations, the signed braid relations and free
    cancellation; `slack` allows that many extra letters through insertion
    of cancelling pairs.  Returns "equal" or "unknown", never a false
    "equal".
    """
    n = strands or (max([abs(x) for x in tuple(w1) + tuple(w2)] + [1]) + 1)
    if perm_image(w1, n) != perm_image(w2, n) or writhe(w1) != writhe(w2):
        return "unknown"
    start = free_reduce(tuple(w1) + inverse_rev(w2))
    if not start:
        return "equal"
    limit = len(start) + slack
    gens = sorted({abs(x) for x in start})
    seen = {start}
    heap = [(len(start), 0, start)]
    count = 0
    while heap:
        _, d, w = heapq.heappop(heap)
        if depth is not None and d >= depth:
            continue
        succ = set(_moves(w))
        if slack and len(w) + 2 <= limit:
            for i in range(len(w) + 1):
                for g in gens:
                    for s in (g, -g):
                        succ.add(w[:i] + (s, -s) + w[i:])
        for nxt in succ:
            nxt = free_reduce(nxt)
            if not nxt:
                return "equal"
            if nxt in seen or len(nxt) > limit:
                continue
            seen.add(nxt)
            count += 1
            if count > budget:
                return "unknown"
            heapq.heappush(heap, (len(nxt), d + 1, nxt))
    return "unknown"


def handle_identity(n: int, side: str) -> Tuple[Word, Word]:
    """Left and right words of the iterated handle-reduction identity."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if side not in ("A", "B"):
        raise ValueError("side must be A or B")
    core = tuple(-k for k in range(n - 1, 1, -1)) + (1,) + tuple(-k for k in range(2, n))
    lhs = (-n,) + core + (n,)
    desc = tuple(range(n - 1, 0, -1))
    mid = tuple(-k for k in range(n, 2, -1)) + (2,) + tuple(-k for k in range(3, n + 1))
    rhs = desc + mid + inverse_rev(desc)
    if side == "B":
        return mirror(lhs), mirror(rhs)
    return lhs, rhs


def conjugate(g: int, w: Sequence[int]) -> Word:
    return (g,) + tuple(w) + (-g,)


def handle_template(n: int, blocks: Sequence[Sequence[int]]) -> Tuple[Word, Word]:
    """Basic handle reduction on n+1 strands.

    s_n s_{n-1} a_1 s_{n-1} ... a_k s_{n-1} s_n^-1 equals
    s_{n-1}^-1 s_n (s_{n-1} a_1 s_{n-1}^-1) s_n ... s_n s_{n-1}, the a_i
    being words in s_1 .. s_{n-2}.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    for a in blocks:
        if any(abs(x) > n - 2 for x in a):
            raise ValueError("block letters must lie below %d" % (n - 1))
    lhs: List[int] = [n, n - 1]
    rhs: List[int] = [-(n - 1), n]
    for a in blocks:
        lhs += list(a) + [n - 1]
        rhs += list(conjugate(n - 1, a)) + [n]
    lhs.append(-n)
    rhs.append(n - 1)
    return tuple(lhs), tuple(rhs)
