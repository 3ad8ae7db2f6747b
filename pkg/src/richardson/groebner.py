"""Ideal algorithms over exact rationals.

Buchberger completion with the Gebauer-Moller pair criteria and normal
selection strategy, reduced bases, normal forms, ideal equality, Krull
dimension via independent variable sets, Hilbert series of homogeneous
ideals by recursive splitting of the leading-term monomial ideal, tangent
cones via homogenization, and a brute-force local Hilbert-function oracle
used to cross-check every multiplicity the package ever reports.

Internally monomials are packed into integers (8 bits per exponent, the
total degree in the top field) so that multiplication is integer addition
and divisibility is one masked subtraction; the public types keep the
sparse tuple form.

Distinct computations may run concurrently: the basis memo behaves as a
single atomic get-or-compute map.
"""

from __future__ import annotations

import heapq
import threading
from bisect import insort
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .poly import (
    Context,
    DEGREVLEX,
    MONOMIAL_ONE,
    Monomial,
    MonomialOrder,
    Polynomial,
)


class IdealGens:
    """A generator list for an ideal; zero generators are dropped."""

    __slots__ = ("ctx", "generators")

    def __init__(self, ctx: Context, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if g.ctx != ctx:
                raise ValueError("generator context mismatch")
            if not g.is_zero():
                gens.append(g)
        self.ctx = ctx
        self.generators = tuple(gens)

    def key(self) -> tuple:
        return (self.ctx.names, tuple(sorted(g.key()[1] for g in self.generators)))

    def __repr__(self) -> str:
        return f"IdealGens({len(self.generators)} gens in {len(self.ctx.names)} vars)"


@dataclass(frozen=True)
class GroebnerBasis:
    basis: tuple[Polynomial, ...]
    order: MonomialOrder
    ctx: Context
    reduced: bool = True

    def contains_one(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant() and not self.basis[0].is_zero()

    def leading_monomials(self) -> tuple[Monomial, ...]:
        keyf = self.order.sort_key(self.ctx)
        return tuple(max(g.terms, key=keyf) for g in self.basis)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series data of a homogeneous quotient.

    The series equals numerator/(1-q)^num_vars before cancellation and
    cancelled_numerator/(1-q)^dimension after removing every (1-q) factor,
    so cancelled_numerator(1) is positive.
    """

    numerator: Polynomial
    num_vars: int
    dimension: int
    cancelled_numerator: Polynomial

    def series_prefix(self, upto: int) -> list[int]:
        """Coefficients 0..upto of the power-series expansion."""
        k = self.num_vars
        ncoef = _q_coeffs(self.numerator)
        out = []
        for d in range(upto + 1):
            total = 0
            for e, ce in enumerate(ncoef):
                if e > d:
                    break
                total += ce * comb(k - 1 + d - e, k - 1)
            out.append(total)
        return out


Q_CONTEXT = Context(("q",))


def _q_coeffs(p: Polynomial) -> list[int]:
    """Dense integer coefficient list of a polynomial in the q context."""
    if p.is_zero():
        return [0]
    d = p.total_degree()
    out = [0] * (d + 1)
    for m, c in p.terms.items():
        if c.denominator != 1:
            raise ValueError("non-integer coefficient in q-polynomial")
        out[m.degree] = c.numerator
    return out


def _q_poly(coeffs: Sequence[int]) -> Polynomial:
    return Polynomial.from_terms(
        Q_CONTEXT,
        (
            (MONOMIAL_ONE if d == 0 else Monomial(((0, d),)), Fraction(c))
            for d, c in enumerate(coeffs)
        ),
    )


# ---------------------------------------------------------------------------
# Packed monomials
# ---------------------------------------------------------------------------

_FIELD_BITS = 8
_FIELD_MAX = (1 << (_FIELD_BITS - 1)) - 1  # guard bit must stay free


class _Pack:
    """Packed-integer monomials for one variable count."""

    __slots__ = ("n", "shifts", "degshift", "himask", "fmask", "_masks")

    def __init__(self, nvars: int):
        self.n = nvars
        self.shifts = tuple(i * _FIELD_BITS for i in range(nvars))
        self.degshift = nvars * _FIELD_BITS
        self.himask = sum(1 << (s + _FIELD_BITS - 1) for s in self.shifts)
        self.fmask = (1 << _FIELD_BITS) - 1
        self._masks: dict[int, int] = {}

    def encode(self, m: Monomial) -> int:
        out = m.degree << self.degshift
        for v, e in m.exps:
            if e > _FIELD_MAX:
                raise OverflowError("exponent too large for packed form")
            out |= e << self.shifts[v]
        return out

    def decode(self, a: int) -> Monomial:
        exps = []
        for v, s in enumerate(self.shifts):
            e = (a >> s) & self.fmask
            if e:
                exps.append((v, e))
        return Monomial(tuple(exps))

    def degree(self, a: int) -> int:
        return a >> self.degshift

    def divides(self, b: int, a: int) -> bool:
        """b | a, one masked subtraction (fields below the guard bit)."""
        hi = self.himask
        return ((a | hi) - b) & hi == hi

    def lcm(self, a: int, b: int) -> int:
        if a == b:
            return a
        fm = self.fmask
        out = 0
        deg = 0
        for s in self.shifts:
            fa = (a >> s) & fm
            fb = (b >> s) & fm
            f = fa if fa >= fb else fb
            if f:
                out |= f << s
                deg += f
        return out | (deg << self.degshift)

    def coprime(self, a: int, b: int) -> bool:
        fm = self.fmask
        for s in self.shifts:
            if (a >> s) & fm and (b >> s) & fm:
                return False
        return True

    def dense(self, a: int) -> tuple[int, ...]:
        fm = self.fmask
        return tuple((a >> s) & fm for s in self.shifts)

    def support_mask(self, a: int) -> int:
        hit = self._masks.get(a)
        if hit is None:
            fm = self.fmask
            hit = 0
            for v, s in enumerate(self.shifts):
                if (a >> s) & fm:
                    hit |= 1 << v
            self._masks[a] = hit
        return hit

    def sort_key(self, order, ctx: Context):
        """Packed-int analogue of order.sort_key, memoized per monomial."""
        cache: dict[int, tuple] = {}
        if isinstance(order, _ConeOrder):
            ti = order.t_index
            rest_shifts = tuple(s for v, s in enumerate(self.shifts) if v != ti)
            tshift = self.shifts[ti]
            fm = self.fmask
            degshift = self.degshift

            def key(a: int):
                k = cache.get(a)
                if k is None:
                    t = (a >> tshift) & fm
                    rest = tuple((a >> s) & fm for s in rest_shifts)
                    k = (t, (a >> degshift) - t) + tuple(-x for x in reversed(rest))
                    cache[a] = k
                return k

            return key
        prio = order.priority if order.priority is not None else tuple(range(self.n))
        kind = order.kind
        shifts = self.shifts
        fm = self.fmask
        degshift = self.degshift

        def key(a: int):
            k = cache.get(a)
            if k is None:
                v = tuple((a >> shifts[p]) & fm for p in prio)
                if kind == "lex":
                    k = v
                elif kind == "deglex":
                    k = (a >> degshift,) + v
                else:
                    k = (a >> degshift,) + tuple(-x for x in reversed(v))
                cache[a] = k
            return k

        return key


_PACKS: dict[int, _Pack] = {}


def _pack_for(nvars: int) -> _Pack:
    p = _PACKS.get(nvars)
    if p is None:
        p = _Pack(nvars)
        _PACKS[nvars] = p
    return p


def _to_raw(p: Polynomial, pk: _Pack) -> dict[int, Fraction]:
    return {pk.encode(m): c for m, c in p.terms.items()}


def _to_poly(raw: dict[int, Fraction], pk: _Pack, ctx: Context) -> Polynomial:
    return Polynomial(ctx, {pk.decode(a): c for a, c in raw.items()})


# ---------------------------------------------------------------------------
# Buchberger completion
# ---------------------------------------------------------------------------

_GB_MEMO: dict = {}
_GB_LOCK = threading.Lock()


def clear_memos() -> None:
    with _GB_LOCK:
        _GB_MEMO.clear()
    with _ORACLE_LOCK:
        _ORACLE_MEMO.clear()


def _spoly(lt1: int, tail1: dict, lt2: int, tail2: dict, lcm: int):
    """S-polynomial of two monic packed elements."""
    out: dict[int, Fraction] = {}
    cof1 = lcm - lt1
    for m, c in tail1.items():
        out[m + cof1] = c
    cof2 = lcm - lt2
    for m, c in tail2.items():
        mm = m + cof2
        acc = out.get(mm)
        if acc is None:
            out[mm] = -c
        else:
            acc -= c
            if acc == 0:
                del out[mm]
            else:
                out[mm] = acc
    return out


def _make_reducers(items, keyf, pk: _Pack):
    """Split monic (lt, tail) pairs into monomial and polynomial groups.

    A dividing monomial reducer simply deletes the term, so monomials are
    tried first; both groups carry (order key, degree, support mask, ...)
    prechecks and are kept sorted by the term order for determinism.
    """
    monos = []
    polys = []
    degshift = pk.degshift
    for seq, (lt, tail) in enumerate(items):
        entry = (keyf(lt), seq, lt >> degshift, pk.support_mask(lt), lt, tail)
        if tail:
            polys.append(entry)
        else:
            monos.append(entry)
    monos.sort(key=lambda it: it[:2])
    polys.sort(key=lambda it: it[:2])
    return monos, polys


def _reduce_raw(work: dict, reducers, keyf, pk: _Pack, trunc_mask: int | None = None):
    """Full normal form of a packed term dict against split monic reducers.

    The first dividing leading term in order wins (monomial reducers
    first), so reduction is deterministic.  With trunc_mask = degree bound
    << degshift, terms of higher degree are dropped (valid when all
    monomials of the next degree lie in the ideal).
    """
    monos, polys = reducers
    hi = pk.himask
    degshift = pk.degshift
    dbound = (trunc_mask >> degshift) if trunc_mask is not None else None
    if dbound is not None:
        work = {m: c for m, c in work.items() if (m >> degshift) <= dbound}
    else:
        work = dict(work)
    out: dict[int, Fraction] = {}
    mask_cache = pk.support_mask
    while work:
        m = max(work, key=keyf)
        c = work.pop(m)
        mdeg = m >> degshift
        mmask = mask_cache(m)
        mh = m | hi
        killed = False
        for (_, _, ld, lmask, lt, _) in monos:
            if ld <= mdeg and not (lmask & ~mmask) and (mh - lt) & hi == hi:
                killed = True
                break
        if killed:
            continue
        hit = None
        for (_, _, ld, lmask, lt, tail) in polys:
            if ld <= mdeg and not (lmask & ~mmask) and (mh - lt) & hi == hi:
                hit = (lt, tail)
                break
        if hit is None:
            out[m] = c
            continue
        lt, tail = hit
        cof = m - lt
        for tm, tc in tail.items():
            mm = tm + cof
            if dbound is not None and (mm >> degshift) > dbound:
                continue
            acc = work.get(mm)
            if acc is None:
                work[mm] = -c * tc
            else:
                acc -= c * tc
                if acc == 0:
                    del work[mm]
                else:
                    work[mm] = acc
    return out


def _monic_raw(terms: dict, keyf):
    lt = max(terms, key=keyf)
    lc = terms[lt]
    if lc != 1:
        terms = {m: c / lc for m, c in terms.items()}
    tail = {m: c for m, c in terms.items() if m != lt}
    return lt, tail


class _Completion:
    """Shared machinery for global and degree-truncated Buchberger runs."""

    def __init__(self, keyf, pk: _Pack, dbound: int | None = None):
        self.keyf = keyf
        self.pk = pk
        self.dbound = dbound
        self.trunc_mask = None if dbound is None else (dbound << pk.degshift)
        self.lts: list[int] = []
        self.tails: list[dict] = []
        self.ltdegs: list[int] = []
        self.mindegs: list[int | None] = []  # min tail degree; None for monomials
        self.pairs: list = []  # heap of (lcm_key, i, j, lcm)
        self.dead_pairs: set[tuple[int, int]] = set()
        self._monos: list = []  # reducer entries, kept sorted
        self._polys: list = []

    def reducers(self):
        return (self._monos, self._polys)

    def add(self, lt: int, tail: dict):
        """Gebauer-Moller pair update with a new monic element."""
        keyf = self.keyf
        pk = self.pk
        t = len(self.lts)
        degshift = pk.degshift
        d = self.dbound
        new_ltdeg = lt >> degshift
        new_mindeg = min((m >> degshift for m in tail), default=None)
        divides = pk.divides
        coprime = pk.coprime
        lcms = {}
        live = []
        blockers = []
        new_budget = None if new_mindeg is None else d + new_ltdeg - new_mindeg if d is not None else None
        for i in range(t):
            ltdeg_i = self.ltdegs[i]
            if d is not None:
                # the lcm degree is at least both leading degrees: if the
                # S-polynomial dies under truncation regardless, skip the
                # pair without computing the lcm
                lb = ltdeg_i if ltdeg_i > new_ltdeg else new_ltdeg
                mind_i = self.mindegs[i]
                alive_i = mind_i is not None and lb <= d + ltdeg_i - mind_i
                alive_new = new_budget is not None and lb <= new_budget
                if not alive_i and not alive_new:
                    continue
            l = pk.lcm(self.lts[i], lt)
            lcms[i] = l
            if coprime(self.lts[i], lt):
                blockers.append(i)
                continue
            if d is not None:
                ldeg = l >> degshift
                mind_i = self.mindegs[i]
                side_i = mind_i is not None and ldeg - ltdeg_i + mind_i <= d
                side_new = new_mindeg is not None and ldeg - new_ltdeg + new_mindeg <= d
                if not side_i and not side_new:
                    blockers.append(i)
                    continue
            live.append(i)
        # pairs whose S-polynomial is identically zero act only as blockers,
        # so the quadratic filter runs over the few live candidates
        pending = sorted(live, key=lambda i: (keyf(lcms[i]), i))
        kept: list[int] = []
        while pending:
            i = pending.pop(0)
            li = lcms[i]
            if not any(divides(lcms[j], li) for j in pending) and not any(
                divides(lcms[j], li) for j in kept
            ):
                kept.append(i)
        new_ltd = new_ltdeg
        for (_, i, j, l) in self.pairs:
            if (i, j) in self.dead_pairs:
                continue
            if new_ltd <= (l >> degshift) and divides(lt, l):
                if pk.lcm(self.lts[i], lt) != l and pk.lcm(self.lts[j], lt) != l:
                    self.dead_pairs.add((i, j))
        if kept:
            uniq = {lcms[j] for j in blockers}
            blocker_lcms = sorted(uniq, key=lambda l: l >> degshift)
            for i in kept:
                li = lcms[i]
                lid = li >> degshift
                blocked = False
                for l in blocker_lcms:
                    if (l >> degshift) > lid:
                        break
                    if divides(l, li):
                        blocked = True
                        break
                if not blocked:
                    heapq.heappush(self.pairs, (keyf(li), i, t, li))
        self.lts.append(lt)
        self.tails.append(tail)
        self.ltdegs.append(new_ltdeg)
        self.mindegs.append(new_mindeg)
        entry = (keyf(lt), t, new_ltdeg, pk.support_mask(lt), lt, tail)
        insort(self._polys if tail else self._monos, entry, key=lambda e: e[:2])

    def pop_pair(self):
        while self.pairs:
            _, i, j, l = heapq.heappop(self.pairs)
            if (i, j) in self.dead_pairs:
                continue
            self.dead_pairs.add((i, j))
            return i, j, l
        return None

    def seed(self, term_dicts):
        for terms in term_dicts:
            r = _reduce_raw(terms, self.reducers(), self.keyf, self.pk, self.trunc_mask)
            if r:
                lt, tail = _monic_raw(r, self.keyf)
                self.add(lt, tail)

    def run(self):
        while True:
            nxt = self.pop_pair()
            if nxt is None:
                break
            i, j, l = nxt
            s = _spoly(self.lts[i], self.tails[i], self.lts[j], self.tails[j], l)
            r = _reduce_raw(s, self.reducers(), self.keyf, self.pk, self.trunc_mask)
            if r:
                lt, tail = _monic_raw(r, self.keyf)
                self.add(lt, tail)

    def reduced_elements(self):
        """Minimalize and tail-reduce, sorted ascending by leading term."""
        keyf = self.keyf
        pk = self.pk
        idx = sorted(range(len(self.lts)), key=lambda i: (keyf(self.lts[i]), i))
        minimal: list[int] = []
        for i in idx:
            if not any(pk.divides(self.lts[j], self.lts[i]) for j in minimal):
                minimal.append(i)
        out = []
        for i in minimal:
            others = _make_reducers(
                ((self.lts[j], self.tails[j]) for j in minimal if j != i), keyf, pk
            )
            tail = _reduce_raw(self.tails[i], others, keyf, pk, self.trunc_mask)
            out.append((self.lts[i], tail))
        out.sort(key=lambda it: keyf(it[0]))
        return out


def _completion_for(ideal: IdealGens, order) -> tuple[_Completion, _Pack]:
    ctx = ideal.ctx
    pk = _pack_for(ctx.nvars)
    keyf = pk.sort_key(order, ctx)
    comp = _Completion(keyf, pk)
    gens = sorted(
        (_to_raw(g, pk) for g in ideal.generators),
        key=lambda t: keyf(max(t, key=keyf)),
    )
    comp.seed(gens)
    return comp, pk


def buchberger(ideal: IdealGens, order: MonomialOrder | None = None, memo: bool = True) -> GroebnerBasis:
    """Reduced Groebner basis; deterministic for fixed input and order."""
    order = order if order is not None else DEGREVLEX
    ctx = ideal.ctx
    mkey = None
    if memo:
        mkey = (ideal.key(), order.tag)
        with _GB_LOCK:
            hit = _GB_MEMO.get(mkey)
        if hit is not None:
            return hit
    comp, pk = _completion_for(ideal, order)
    comp.run()
    basis = tuple(
        _to_poly({lt: Fraction(1), **tail}, pk, ctx) for lt, tail in comp.reduced_elements()
    )
    gb = GroebnerBasis(basis=basis, order=order, ctx=ctx)
    if memo:
        with _GB_LOCK:
            gb = _GB_MEMO.setdefault(mkey, gb)
    return gb


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of multivariate division by the basis; zero iff f is in the ideal."""
    if f.ctx != gb.ctx:
        raise ValueError("context mismatch")
    pk = _pack_for(f.ctx.nvars)
    keyf = pk.sort_key(gb.order, gb.ctx)
    items = []
    for g in gb.basis:
        raw = _to_raw(g, pk)
        lt = max(raw, key=keyf)
        lc = raw[lt]
        items.append((lt, {m: c / lc for m, c in raw.items() if m != lt}))
    red = _make_reducers(items, keyf, pk)
    return _to_poly(_reduce_raw(_to_raw(f, pk), red, keyf, pk), pk, f.ctx)


def in_ideal(f: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(f, gb).is_zero()


def ideal_equal(I: IdealGens, J: IdealGens, order: MonomialOrder | None = None) -> bool:
    """Mutual membership of generators against both reduced bases."""
    if I.ctx != J.ctx:
        raise ValueError("context mismatch")
    gi = buchberger(I, order)
    gj = buchberger(J, order)
    return all(in_ideal(g, gj) for g in I.generators) and all(
        in_ideal(g, gi) for g in J.generators
    )


def contains_one(I: IdealGens) -> bool:
    return buchberger(I).contains_one()


# ---------------------------------------------------------------------------
# Dimension and Hilbert series
# ---------------------------------------------------------------------------


def _minimal_monomials(monos: Iterable[Monomial]) -> list[Monomial]:
    monos = sorted(set(monos), key=lambda m: (m.degree, m.exps))
    out: list[Monomial] = []
    for m in monos:
        if not any(g.divides(m) for g in out):
            out.append(m)
    return out


def krull_dimension(I: IdealGens) -> int:
    """Dimension of the quotient: the largest variable set meeting no leading-term support."""
    gb = buchberger(I)
    if gb.contains_one():
        raise ValueError("unit ideal has no dimension")
    supports = [lt.support() for lt in _minimal_monomials(gb.leading_monomials())]
    n = I.ctx.nvars
    if not supports:
        return n
    from itertools import combinations

    for size in range(n, 0, -1):
        for subset in combinations(range(n), size):
            s = frozenset(subset)
            if all(not supp <= s for supp in supports):
                return size
    return 0


_HILB_MEMO: dict = {}


def _hilbert_numerator_monomial(gens: tuple[Monomial, ...]) -> tuple[int, ...]:
    """Numerator coefficients of Hilb(R/M) * (1-q)^n for a monomial ideal M."""
    key = tuple(sorted(m.exps for m in gens))
    hit = _HILB_MEMO.get(key)
    if hit is not None:
        return hit
    if not gens:
        out = (1,)
    elif all(len(m.exps) == 1 for m in gens):
        # pure powers of distinct variables: product of (1 - q^deg)
        out = (1,)
        for m in gens:
            d = m.degree
            nxt = [0] * (len(out) + d)
            for i, c in enumerate(out):
                nxt[i] += c
                nxt[i + d] -= c
            out = tuple(nxt)
    else:
        # split on the most shared variable
        counts: dict[int, int] = {}
        for m in gens:
            if len(m.exps) > 1:
                for v, _ in m.exps:
                    counts[v] = counts.get(v, 0) + 1
        pivot = min(counts, key=lambda v: (-counts[v], v))
        pv = Monomial.var(pivot)
        plus = _minimal_monomials([m for m in gens if not pv.divides(m)] + [pv])
        colon = _minimal_monomials(m.divide(pv) if pv.divides(m) else m for m in gens)
        a = _hilbert_numerator_monomial(tuple(plus))
        b = _hilbert_numerator_monomial(tuple(colon))
        nxt = [0] * max(len(a), len(b) + 1)
        for i, c in enumerate(a):
            nxt[i] += c
        for i, c in enumerate(b):
            nxt[i + 1] += c
        out = tuple(nxt)
    _HILB_MEMO[key] = out
    return out


def _strip_one_minus_q(coeffs: list[int]) -> tuple[list[int], int]:
    """Divide out every (1-q) factor; returns (reduced coeffs, count)."""
    count = 0
    cur = list(coeffs)
    while cur and sum(cur) == 0:
        acc = 0
        quotient = []
        for c in cur[:-1]:
            acc += c
            quotient.append(acc)
        if not quotient:
            break
        cur = quotient
        count += 1
    while len(cur) > 1 and cur[-1] == 0:
        cur.pop()
    return cur, count


def hilbert_numerator(I: IdealGens) -> HilbertData:
    """Hilbert series data of R/I for homogeneous I (1 not in I)."""
    for g in I.generators:
        if not g.is_homogeneous():
            raise ValueError("hilbert_numerator requires homogeneous generators")
    gb = buchberger(I)
    if gb.contains_one():
        raise ValueError("unit ideal")
    lead = tuple(_minimal_monomials(gb.leading_monomials()))
    ncoef = list(_hilbert_numerator_monomial(lead))
    cancelled, e = _strip_one_minus_q(ncoef)
    n = I.ctx.nvars
    return HilbertData(
        numerator=_q_poly(ncoef),
        num_vars=n,
        dimension=n - e,
        cancelled_numerator=_q_poly(cancelled),
    )


# ---------------------------------------------------------------------------
# Tangent cones
# ---------------------------------------------------------------------------


class _ConeOrder:
    """Homogenizing variable dominant, ties by degrevlex on the original ring.

    Chosen so the leading term of a homogeneous element comes from the
    lowest-degree form of its dehomogenization.
    """

    __slots__ = ("t_index", "_memo")
    tag = "cone"
    priority = None

    def __init__(self, t_index: int):
        self.t_index = t_index
        self._memo: dict = {}

    def sort_key(self, ctx: Context):
        cache = self._memo.get(ctx.names)
        if cache is None:
            cache = {}
            self._memo[ctx.names] = cache
        n = ctx.nvars
        ti = self.t_index

        def key(m: Monomial):
            k = cache.get(m)
            if k is None:
                d = m.dense(n)
                t = d[ti]
                rest = tuple(d[i] for i in range(n) if i != ti)
                k = (t, m.degree - t) + tuple(-x for x in reversed(rest))
                cache[m] = k
            return k

        return key


def _fresh_name(ctx: Context, base: str) -> str:
    if base not in ctx.names:
        return base
    k = 0
    while f"{base}{k}" in ctx.names:
        k += 1
    return f"{base}{k}"


def tangent_cone(I: IdealGens) -> IdealGens:
    """Ideal of lowest-degree forms of <I> at the origin.

    Each generator is homogenized with a fresh variable t, a basis is
    completed under an order comparing the t-degree first, and the
    lowest-degree forms of the dehomogenized basis are returned (they form
    a degrevlex basis of the cone ideal).
    """
    ctx = I.ctx
    for g in I.generators:
        if g.constant_term() != 0:
            raise ValueError("generator with nonzero constant term at the origin")
    if not I.generators:
        return I
    tname = _fresh_name(ctx, "t")
    big = ctx.extend((tname,))
    ti = big.index(tname)
    pk_small = _pack_for(ctx.nvars)
    pk_big = _pack_for(big.nvars)
    tshift = pk_big.shifts[ti]
    degshift_b = pk_big.degshift

    hom_raw = []
    for g in I.generators:
        d = g.total_degree()
        raw = {}
        for m, c in g.terms.items():
            a = pk_big.encode(m)  # same low fields; t field empty
            extra = d - m.degree
            a += (extra << tshift) + (extra << degshift_b)
            raw[a] = c
        hom_raw.append(raw)

    order = _ConeOrder(ti)
    keyf = pk_big.sort_key(order, big)
    comp = _Completion(keyf, pk_big)
    comp.seed(sorted(hom_raw, key=lambda t: keyf(max(t, key=keyf))))
    comp.run()

    out = []
    seen = set()
    fm = pk_big.fmask
    for lt, tail in comp.reduced_elements():
        # dehomogenize (t -> 1) and take the lowest-degree form
        terms: dict[int, Fraction] = {}
        for a, c in list(tail.items()) + [(lt, Fraction(1))]:
            t = (a >> tshift) & fm
            b = a - (t << tshift) - (t << degshift_b)
            acc = terms.get(b)
            if acc is None:
                terms[b] = c
            else:
                acc += c
                if acc == 0:
                    del terms[b]
                else:
                    terms[b] = acc
        if not terms:
            continue
        low_deg = min(a >> degshift_b for a in terms)
        low = {a: c for a, c in terms.items() if (a >> degshift_b) == low_deg}
        poly = _to_poly(low, pk_big, big)  # decode; exponent layout matches small ctx
        poly = Polynomial(ctx, dict(poly.terms))
        k = poly.key()
        if k not in seen:
            seen.add(k)
            out.append(poly)
    return IdealGens(ctx, out)


# ---------------------------------------------------------------------------
# Local Hilbert-function oracle
# ---------------------------------------------------------------------------

_ORACLE_MEMO: dict = {}
_ORACLE_LOCK = threading.Lock()

_DEGREE_MONOMIALS_MEMO: dict = {}


def _packed_monomials_of_degree(pk: _Pack, k: int) -> tuple[int, ...]:
    hit = _DEGREE_MONOMIALS_MEMO.get((pk.n, k))
    if hit is not None:
        return hit
    out: list[int] = []
    degpart = k << pk.degshift

    def rec(var: int, remaining: int, acc: int):
        if var == pk.n - 1:
            out.append(acc | (remaining << pk.shifts[var]) | degpart)
            return
        for e in range(remaining, -1, -1):
            rec(var + 1, remaining - e, acc | (e << pk.shifts[var]))

    if pk.n == 0:
        result: tuple[int, ...] = (0,) if k == 0 else ()
    else:
        rec(0, k, 0)
        result = tuple(out)
    _DEGREE_MONOMIALS_MEMO[(pk.n, k)] = result
    return result


def _count_standard_upto(lts: list[Monomial], nvars: int, d: int) -> int:
    """Monomials of degree <= d divisible by no leading term."""
    lead = tuple(_minimal_monomials(lts))
    ncoef = _hilbert_numerator_monomial(lead)
    total = 0
    for j, c in enumerate(ncoef):
        if j > d:
            break
        total += c * comb(nvars + d - j, nvars)
    return total


def _truncated_dimension(elements, pk: _Pack, keyf, d: int) -> tuple[int, list]:
    """dim_Q of R/(<elements> + m^{d+1}) with the monomial block implicit.

    Equivalent to a Groebner basis of the generators together with every
    monomial of degree d+1: reductions drop terms of degree > d (a valid
    reduction against the block), and the S-pairs against block monomials
    collapse to cofactor multiples of the tails, enumerated over the finite
    lcm window where they survive truncation.
    """
    comp = _Completion(keyf, pk, dbound=d)
    degshift = pk.degshift
    seed = []
    for lt, tail in elements:
        terms = {m: c for m, c in {lt: Fraction(1), **tail}.items() if (m >> degshift) <= d}
        if terms:
            seed.append(terms)
    seed.sort(key=lambda t: keyf(max(t, key=keyf)))
    comp.seed(seed)
    processed: set[int] = set()

    def enqueue_windows() -> bool:
        added = False
        for i in range(len(comp.lts)):
            if i in processed:
                continue
            processed.add(i)
            lt, tail = comp.lts[i], comp.tails[i]
            if not tail:
                continue
            ltdeg = lt >> degshift
            by_degree: dict[int, list] = {}
            for tm, tc in tail.items():
                by_degree.setdefault(tm >> degshift, []).append((tm, tc))
            mindeg = min(by_degree)
            lo = max(1, d + 1 - ltdeg)
            for k in range(lo, d - mindeg + 1):
                usable = [
                    (tm, tc)
                    for td, items in by_degree.items()
                    if td + k <= d
                    for (tm, tc) in items
                ]
                if not usable:
                    continue
                for e in _packed_monomials_of_degree(pk, k):
                    s = {tm + e: tc for tm, tc in usable}
                    r = _reduce_raw(s, comp.reducers(), keyf, pk, comp.trunc_mask)
                    if r:
                        nlt, ntail = _monic_raw(r, keyf)
                        comp.add(nlt, ntail)
                        added = True
        return added

    comp.run()
    while enqueue_windows():
        comp.run()

    final = comp.reduced_elements()
    lts = [pk.decode(lt) for lt, _ in final]
    return _count_standard_upto(lts, pk.n, d), final


def local_hilbert_oracle(I: IdealGens, degree_bound: int = 6) -> tuple[int, ...]:
    """dim_Q of R/(<I> + m^{d+1}) for d = 0..degree_bound.

    First differences give the Hilbert function of the tangent cone at the
    origin in degrees <= degree_bound.
    """
    mkey = (I.key(), degree_bound)
    with _ORACLE_LOCK:
        hit = _ORACLE_MEMO.get(mkey)
    if hit is not None:
        return hit
    for g in I.generators:
        if g.constant_term() != 0:
            raise ValueError("generator with nonzero constant term at the origin")
    ctx = I.ctx
    pk = _pack_for(ctx.nvars)
    keyf = pk.sort_key(DEGREVLEX, ctx)
    gb = buchberger(I)
    elements = []
    for g in gb.basis:
        raw = _to_raw(g, pk)
        lt = max(raw, key=keyf)
        elements.append((lt, {m: c for m, c in raw.items() if m != lt}))
    counts: list[int] = [0] * (degree_bound + 1)
    # descending d lets each level reuse the previous completed basis
    for d in range(degree_bound, -1, -1):
        counts[d], elements = _truncated_dimension(elements, pk, keyf, d)
    out = tuple(counts)
    with _ORACLE_LOCK:
        out = _ORACLE_MEMO.setdefault(mkey, out)
    return out
