"""Kazhdan-Lusztig polynomials against H-polynomials on covexillary w.

For 3412-avoiding w, every coefficient of P_{v,w}(q) is bounded by the
matching coefficient of the H-polynomial of X_w at vB.  The script prints
both families on a singular covexillary interval.

Run:  python demos/kl_versus_h.py
"""

from richardson import Permutation, bruhat_interval, kl_polynomial, schubert_invariants

w = Permutation.from_string("4231")
ident = Permutation.identity(4)

print(f"w = {w} (covexillary, singular)")
print(f"{'v':>6} | {'P_vw(q)':>12} | H at vB")
print("-" * 44)
for v in bruhat_interval(ident, w):
    kl = kl_polynomial(v, w)
    inv = schubert_invariants(w, v)
    h = inv.h_coefficients()
    assert all(
        c <= (h[d] if d < len(h) else 0) for d, c in enumerate(kl.coefficients)
    )
    print(f"{str(v):>6} | {str(kl):>12} | {inv.h_polynomial}")

print("\ncoefficientwise P <= H held at every fixed point (asserted).")
