"""Matrix models of the Vogel algebra at a rational parameter pair."""
from fractions import Fraction

from artifact.vogel import b3_span_check, model_eight, model_six, t_spectrum, verify_vogel_relations

alpha, beta = Fraction(3), Fraction(-1)
for model in (model_six, model_eight):
    rep = model(alpha, beta)
    rows = verify_vogel_relations(rep, alpha, beta)
    print(rep.name, rep.dim, all(r["ok"] for r in rows))
    print("  spectrum of t12:", t_spectrum(rep, [alpha, beta, beta - alpha, Fraction(0)]))

for r in b3_span_check(alpha, beta):        # 20 words span the three-strand algebra
    if r["check"] in ("rank_20", "closure_right_x"):
        print(r)
