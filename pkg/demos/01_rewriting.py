"""Rewriting in the cubic quotient on three strands."""
from artifact.freealg import AlgElem
from artifact.rewrite import build_system, enumerate_avoiding, normal_form
from artifact.words import braid_equal_bfs, format_word

pos = build_system("pos")                 # 8 rules on positive words
basis = enumerate_avoiding(pos)            # words avoiding every lhs
print(len(basis), "positive basis words")  # 20
print(", ".join(format_word(w).replace(" ", "") or "e" for w in basis))

x = AlgElem.word((2, 1, 2))                # braid relation: 212 -> 121
print(normal_form(x, pos))

y = AlgElem.word((1, 1, 1))                # the cubic relation kicks in
print(normal_form(y, pos))

s1, s2 = build_system("signed1"), build_system("signed2")
b1, b2 = enumerate_avoiding(s1), enumerate_avoiding(s2)
only1 = set(b1) - set(b2)                  # words that differ as words
only2 = set(b2) - set(b1)
for w in only1:                            # ... but agree as braids
    match = [v for v in only2 if braid_equal_bfs(w, v) == "equal"]
    print(format_word(w), "=", format_word(match[0]))
