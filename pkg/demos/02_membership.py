"""Ideal membership through the seven irreducible models of H_3."""
from artifact.freealg import AlgElem, defining_relations
from artifact.h3reps import block_matrix, h3_rank_at, ideal_membership, phi_h3_eval
from artifact.rewrite import build_system
from artifact.ring import format_laurent, random_points

r1, r2 = defining_relations()
img = phi_h3_eval(r1)
print(img.nonzero_blocks())                # only the U_bc block survives
for row in block_matrix(img, "U_bc").entries:
    print([format_laurent(e) for e in row])

sys_ = build_system("signed1")
ok = all(ideal_membership(r.relation()) for r in sys_.rules)
print("all signed1 rules in the ideal:", ok)

x = AlgElem.word((1,)) - AlgElem.word((2,))
print(ideal_membership(x, with_witness=True))  # not a member, with the failing step

pt = random_points(1, seed=3)[0]
print("rank of the 24-word basis at", pt, "=", h3_rank_at(pt))
