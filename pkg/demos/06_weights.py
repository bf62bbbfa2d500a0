"""Casimir eigenvalues and the brick irreducibility checks, symbolic in n."""
from artifact.weights import (ALL_BRICKS, W_, brick_report, format_npoly, path_w_spectrum,
                              tau_eigenvalue)

for lam in ("w1+w3", "2w2", "w4"):
    print(lam, format_npoly(tau_eigenvalue(W_(lam))))

path = (W_("2w2"), W_("w1+w2+w3"), W_("w1+2w2+w3"))  # one step of a Bratteli path
print(format_npoly(path_w_spectrum(path)))

for b in ALL_BRICKS:
    r = brick_report(b)
    print(r["check"], "irreducible" if r["irreducible"] else "reducible",
          "" if r["printed_w_matches"] else "(printed W differs)")
