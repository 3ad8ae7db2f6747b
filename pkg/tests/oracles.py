"""Independent brute-force oracles used to pin expected values.

Everything here deliberately avoids the package's optimized paths: the
Buchberger oracle has no pair criteria, Bruhat order goes through the
subword property on reduced words, Kazhdan-Lusztig polynomials are solved
from the defining degree and inversion conditions via R-polynomials, and
monomial counting is plain enumeration.
"""

from __future__ import annotations

from itertools import combinations, permutations as itpermutations

from richardson.poly import Monomial, Polynomial
from richardson.permutations import Permutation


# ---------------------------------------------------------------------------
# straightforward Buchberger: FIFO pairs, no criteria
# ---------------------------------------------------------------------------


def _lt(p: Polynomial, keyf):
    return max(p.terms, key=keyf)


def _divide_once(p: Polynomial, basis, keyf):
    for g in basis:
        ltg = _lt(g, keyf)
        ltp = _lt(p, keyf)
        if ltg.divides(ltp):
            cof = ltp.divide(ltg)
            c = p.terms[ltp] / g.terms[ltg]
            cofpoly = Polynomial(p.ctx, {cof: c})
            return p - cofpoly * g
    return None


def naive_normal_form(p: Polynomial, basis, keyf) -> Polynomial:
    rem = p.ctx.zero()
    while not p.is_zero():
        step = _divide_once(p, basis, keyf)
        if step is None:
            ltp = _lt(p, keyf)
            rem = rem + Polynomial(p.ctx, {ltp: p.terms[ltp]})
            p = p - Polynomial(p.ctx, {ltp: p.terms[ltp]})
        else:
            p = step
    return rem


def naive_buchberger(gens, order) -> list[Polynomial]:
    """Reduced basis by pairwise reduction of every S-polynomial, no pruning."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ctx = gens[0].ctx
    keyf = order.sort_key(ctx)
    basis = list(gens)
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop(0)
        f, g = basis[i], basis[j]
        ltf, ltg = _lt(f, keyf), _lt(g, keyf)
        lcm = ltf.lcm(ltg)
        s = (
            Polynomial(ctx, {lcm.divide(ltf): 1 / f.terms[ltf]}) * f
            - Polynomial(ctx, {lcm.divide(ltg): 1 / g.terms[ltg]}) * g
        )
        r = naive_normal_form(s, basis, keyf)
        if not r.is_zero():
            basis.append(r)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    # minimalize and reduce
    monic = []
    for g in basis:
        lt = _lt(g, keyf)
        monic.append(g * (1 / g.terms[lt]))
    minimal = []
    for g in monic:
        lt = _lt(g, keyf)
        others = [h for h in monic if h is not g]
        if not any(_lt(h, keyf).divides(lt) for h in others if _lt(h, keyf) != lt):
            if all(_lt(h, keyf) != lt or h is g for h in minimal + others[: 0]):
                minimal.append(g)
    # drop duplicates with equal leading terms
    seen = set()
    kept = []
    for g in minimal:
        lt = _lt(g, keyf)
        if lt not in seen:
            seen.add(lt)
            kept.append(g)
    reduced = []
    for g in kept:
        others = [h for h in kept if h is not g]
        reduced.append(
            naive_normal_form(g, others, keyf) if others else g
        )
    reduced = [g for g in reduced if not g.is_zero()]
    reduced.sort(key=lambda g: keyf(_lt(g, keyf)))
    return reduced


# ---------------------------------------------------------------------------
# Bruhat order via the subword property
# ---------------------------------------------------------------------------


def reduced_word(w: Permutation) -> list[int]:
    """One reduced word, by repeatedly removing a right descent."""
    word = []
    cur = w
    while cur.length() > 0:
        j = cur.right_descents()[0]
        word.append(j)
        cur = cur.swap_positions(j, j + 1)
    word.reverse()
    return word


def subword_bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """v <= w iff some subword of a reduced word of w is a reduced word of v."""
    word = reduced_word(w)
    lv = v.length()
    if lv > len(word):
        return False
    n = v.n
    for idx in combinations(range(len(word)), lv):
        cur = Permutation.identity(n)
        for t in idx:
            cur = cur.swap_positions(word[t], word[t] + 1)
        if cur == v:
            return True
    return False


# ---------------------------------------------------------------------------
# Kazhdan-Lusztig via R-polynomials and the inversion identity
# ---------------------------------------------------------------------------


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def r_polynomial(v: Permutation, w: Permutation, memo=None) -> list[int]:
    """Coefficients of R_{v,w}(q) by the standard descent recursion."""
    if memo is None:
        memo = {}
    key = (v.window, w.window)
    if key in memo:
        return memo[key]
    if v == w:
        out = [1]
    elif not subword_bruhat_leq(v, w):
        out = [0]
    else:
        s = w.right_descents()[0]
        ws = w.swap_positions(s, s + 1)
        vs = v.swap_positions(s, s + 1)
        if vs.length() < v.length():
            out = r_polynomial(vs, ws, memo)
        else:
            out = _padd(
                _pmul([-1, 1], r_polynomial(v, ws, memo)),
                _pmul([0, 1], r_polynomial(vs, ws, memo)),
            )
    memo[key] = out
    return out


def kl_by_inversion(v: Permutation, w: Permutation) -> list[int]:
    """Solve q^{l(w)-l(v)} P_{v,w}(1/q) = sum_z R_{v,z} P_{z,w} degree by degree.

    Descending induction on v inside [v, w]; the degree bound
    deg P < (l(w)-l(v))/2 makes the linear system triangular.
    """
    if not subword_bruhat_leq(v, w):
        return [0]
    rmemo: dict = {}
    interval = [
        z
        for z in Permutation.all(w.n)
        if subword_bruhat_leq(v, z) and subword_bruhat_leq(z, w)
    ]
    interval.sort(key=lambda z: -z.length())
    P: dict[tuple, list[int]] = {w.window: [1]}
    for z in interval:
        if z == w:
            continue
        d = w.length() - z.length()
        rhs = [0]
        for y in interval:
            if y == z or not subword_bruhat_leq(z, y):
                continue
            rhs = _padd(rhs, _pmul(r_polynomial(z, y, rmemo), P[y.window]))
        # rhs = q^d P(1/q) - P(q); upper coefficients give P
        coeffs = [0] * ((d - 1) // 2 + 1) if d > 0 else [1]
        for i in range(len(coeffs)):
            c = rhs[d - i] if d - i < len(rhs) else 0
            coeffs[i] = c
        # consistency: the lower half must equal -P
        for i in range(len(coeffs)):
            low = rhs[i] if i < len(rhs) else 0
            if d - i == i:
                continue
            if low != -coeffs[i]:
                raise AssertionError(
                    f"inversion identity violated at {z} <= {w}: {rhs}"
                )
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        P[z.window] = coeffs
    return P[v.window]


# ---------------------------------------------------------------------------
# Misc small oracles
# ---------------------------------------------------------------------------


def brute_coset_min_max(w: Permutation, J):
    """Min/max length members of w W_J by enumerating the parabolic subgroup."""
    n = w.n
    members = set()
    for x in itpermutations(range(1, n + 1)):
        p = Permutation(x)
        word_ok = True
        cur = p
        while cur.length() > 0:
            ds = [j for j in cur.right_descents() if j in J]
            if not ds:
                word_ok = False
                break
            cur = cur.swap_positions(ds[0], ds[0] + 1)
        if word_ok:
            members.add(w * p)
    lo = min(members, key=lambda m: (m.length(), m.window))
    hi = max(members, key=lambda m: (m.length(), m.window))
    return lo, hi


def count_monomials_leq(lead: list[Monomial], nvars: int, degree: int) -> int:
    """Monomials of degree <= degree not divisible by any leading monomial."""
    count = 0

    def rec(var, remaining, exps):
        nonlocal count
        if var == nvars:
            m = Monomial(tuple((i, e) for i, e in enumerate(exps) if e))
            if not any(l.divides(m) for l in lead):
                count += 1
            return
        for e in range(remaining + 1):
            exps[var] = e
            rec(var + 1, remaining - e, exps)
        exps[var] = 0

    rec(0, degree, [0] * nvars)
    return count


def hilbert_function_by_counting(lead: list[Monomial], nvars: int, degree: int) -> list[int]:
    """Hilbert function of R/<lead> in degrees 0..degree by direct counting."""
    upto = [count_monomials_leq(lead, nvars, d) for d in range(degree + 1)]
    return [upto[0]] + [upto[d] - upto[d - 1] for d in range(1, degree + 1)]
