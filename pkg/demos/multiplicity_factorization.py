"""Multiplicities and H-polynomials of a Richardson variety factor.

At every point of X_w^v = X_w meet X^v, the local ring looks like a
product of a local ring on X_w and one on X^v (up to an affine factor),
so the Hilbert-Samuel multiplicity and the H-polynomial split into
Schubert x opposite-Schubert factors.  This script tabulates all three
records at every torus-fixed point of a singular example.

Run:  python demos/multiplicity_factorization.py
"""

from richardson import (
    Permutation,
    bruhat_interval,
    opposite_invariants,
    richardson_invariants,
    schubert_invariants,
)

# at desk scale a fixed point is never singular in both factors at once
# (the singular directions point opposite ways along the interval), so the
# interesting rows show a nontrivial Schubert factor against a trivial
# opposite one
v = Permutation.from_string("1234")
w = Permutation.from_string("4231")

print(f"Richardson variety X_w^v with v = {v}, w = {w}")
print(f"dimension l(w) - l(v) = {w.length() - v.length()}")
print()
header = f"{'sigma':>6} | {'mult':>4} = {'schub':>5} * {'opp':>3} | H(q)"
print(header)
print("-" * len(header))

for sigma in bruhat_interval(v, w):
    rich = richardson_invariants(v, w, sigma)
    schub = schubert_invariants(w, sigma)
    opp = opposite_invariants(v, sigma)
    assert rich.multiplicity == schub.multiplicity * opp.multiplicity
    assert rich.h_polynomial == schub.h_polynomial * opp.h_polynomial
    star = "" if rich.smooth else "  <- singular"
    print(
        f"{str(sigma):>6} | {rich.multiplicity:>4} = {schub.multiplicity:>5}"
        f" * {opp.multiplicity:>3} | {rich.h_polynomial}{star}"
    )

print("\nevery row satisfied mult = mult_schubert * mult_opposite and")
print("H = H_schubert * H_opposite exactly (asserted above).")
