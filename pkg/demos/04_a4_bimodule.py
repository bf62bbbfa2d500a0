"""The 25-dimensional bimodule on four strands."""
from artifact.a4tilde import a4_apply, build_action_tables, format_vec, spanning_sets, unit

t = build_action_tables()
v = unit(4)
print(format_vec(a4_apply((1, 2), "left", v, t)))

lhs = a4_apply((1, 2, 1), "left", v, t)    # braid relation on a vector
rhs = a4_apply((2, 1, 2), "left", v, t)
print("braid relation holds:", lhs == rhs)

both = a4_apply((1,), "right", a4_apply((2,), "left", v, t), t)
swap = a4_apply((2,), "left", a4_apply((1,), "right", v, t), t)
print("left and right actions commute:", both == swap)

for name, words in spanning_sets().items():
    print(name, len(words))                # 20 136 201 219 239 264
