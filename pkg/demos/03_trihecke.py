"""The tripled quadratic Hecke algebra as a fiber product."""
from artifact.freealg import AlgElem
from artifact.hecke import bracket_b, fiber_check, k_dimension, k_span_rank, triple_embed
from artifact.ring import ModPDomain, random_points

pt = random_points(1, seed=5)[0]
for n in (2, 3, 4, 5):                     # 3(n! - 1)
    print(n, k_span_rank(n, ModPDomain(pt)), k_dimension(n))

t = triple_embed(AlgElem.word((1, -2, 1, 2)))
print("fiber condition:", fiber_check(t))  # images agree on the shared quotients

b = triple_embed(bracket_b())              # dies in all three quotients
print("b vanishes in the triple:", b.is_zero())
