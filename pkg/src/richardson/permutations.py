"""Symmetric-group combinatorics for flag-variety geometry.

Permutations are one-indexed windows in one-line notation; ``Permutation
([3, 1, 5, 4, 2])`` is the map 1->3, 2->1, 3->5, 4->4, 5->2.  The module
provides lengths, rank matrices and Bruhat order, intervals, parabolic
coset representatives, pattern containment, and Kazhdan-Lusztig
polynomials via the classical descent recursion.

Rank-matrix convention, fixed package-wide: the permutation matrix of w
has a 1 in row w(k), column k.  Schubert conditions bound ranks of
lower-left justified submatrices (rows i..n, columns 1..j); opposite
conditions bound upper-left submatrices.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations, permutations as _itperms


class Permutation:
    """An element of S_n in one-line notation.

    >>> w = Permutation([3, 1, 5, 4, 2])
    >>> w(1), w(5)
    (3, 2)
    >>> w.length()
    5
    >>> str(w.inverse())
    '25143'
    """

    __slots__ = ("window", "_inv", "_len")

    def __init__(self, window):
        win = tuple(int(x) for x in window)
        if sorted(win) != list(range(1, len(win) + 1)):
            raise ValueError(f"not a permutation window: {win}")
        self.window = win
        self._inv = None
        self._len = None

    # -- constructors -----------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(1, n + 1))

    @staticmethod
    def longest(n: int) -> "Permutation":
        return Permutation(range(n, 0, -1))

    @staticmethod
    def from_string(s: str) -> "Permutation":
        """Parse one-line notation; windows past S_9 use comma separation.

        >>> Permutation.from_string("31542").window
        (3, 1, 5, 4, 2)
        >>> Permutation.from_string("10,3,1,2,4,5,6,7,8,9").n
        10
        """
        s = s.strip()
        if "," in s:
            return Permutation(int(p) for p in s.split(","))
        return Permutation(int(ch) for ch in s)

    @staticmethod
    def all(n: int):
        """Every element of S_n, in lexicographic window order."""
        return [Permutation(w) for w in _itperms(range(1, n + 1))]

    # -- basics -----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def inverse(self) -> "Permutation":
        if self._inv is None:
            inv = [0] * self.n
            for i, v in enumerate(self.window):
                inv[v - 1] = i + 1
            self._inv = Permutation(inv)
        return self._inv

    def length(self) -> int:
        if self._len is None:
            w = self.window
            self._len = sum(
                1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
            )
        return self._len

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(self.window[v - 1] for v in other.window)

    def swap_values(self, a: int, b: int) -> "Permutation":
        """Left multiplication by the transposition of values a and b."""
        sub = {a: b, b: a}
        return Permutation(sub.get(v, v) for v in self.window)

    def swap_positions(self, i: int, j: int) -> "Permutation":
        """Right multiplication by the transposition of positions i and j."""
        win = list(self.window)
        win[i - 1], win[j - 1] = win[j - 1], win[i - 1]
        return Permutation(win)

    def left_descents(self) -> list[int]:
        """Values i with l(s_i w) < l(w), i.e. i+1 appears left of i."""
        inv = self.inverse().window
        return [i for i in range(1, self.n) if inv[i - 1] > inv[i]]

    def right_descents(self) -> list[int]:
        return [j for j in range(1, self.n) if self.window[j - 1] > self.window[j]]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.window == other.window

    def __hash__(self) -> int:
        return hash(self.window)

    def __lt__(self, other) -> bool:  # lexicographic; used only for determinism
        return self.window < other.window

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.window)
        return ",".join(str(v) for v in self.window)

    def __repr__(self) -> str:
        return f"Permutation({self})"


def length(w: Permutation) -> int:
    return w.length()


def schubert_rank(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """r_w(i,j) = #{k <= j : w(k) >= i} (lower-left justified ranks)."""
    n = w.n
    return tuple(
        tuple(sum(1 for k in range(1, j + 1) if w(k) >= i) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def opposite_rank(v: Permutation) -> tuple[tuple[int, ...], ...]:
    """r'_v(i,j) = #{k <= j : v(k) <= i} (upper-left justified ranks)."""
    n = v.n
    return tuple(
        tuple(sum(1 for k in range(1, j + 1) if v(k) <= i) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """v <= w iff r_v <= r_w entrywise.

    >>> bruhat_leq(Permutation.identity(3), Permutation([3, 1, 2]))
    True
    >>> bruhat_leq(Permutation([2, 1]), Permutation([1, 2]))
    False
    """
    if v.n != w.n:
        raise ValueError("size mismatch")
    rv = schubert_rank(v)
    rw = schubert_rank(w)
    return all(rv[i][j] <= rw[i][j] for i in range(v.n) for j in range(v.n))


def bruhat_interval(v: Permutation, w: Permutation) -> list[Permutation]:
    """All sigma with v <= sigma <= w, sorted by (length, window); empty iff v !<= w."""
    if v.n != w.n:
        raise ValueError("size mismatch")
    out = [
        s
        for s in Permutation.all(v.n)
        if bruhat_leq(v, s) and bruhat_leq(s, w)
    ]
    out.sort(key=lambda s: (s.length(), s.window))
    return out


def permutation_from_schubert_rank(rank) -> Permutation:
    """Inverse of schubert_rank; raises if no permutation matches."""
    n = len(rank)
    window = []
    for j in range(1, n + 1):
        hits = [
            i
            for i in range(1, n + 1)
            if rank[i - 1][j - 1] - (rank[i - 1][j - 2] if j > 1 else 0) == 1
        ]
        if not hits:
            raise ValueError("rank table is not a permutation rank matrix")
        window.append(max(hits))
    w = Permutation(window)
    if schubert_rank(w) != tuple(tuple(r) for r in rank):
        raise ValueError("rank table is not a permutation rank matrix")
    return w


def permutation_from_opposite_rank(rank) -> Permutation:
    n = len(rank)
    window = []
    for j in range(1, n + 1):
        hits = [
            i
            for i in range(1, n + 1)
            if rank[i - 1][j - 1] - (rank[i - 1][j - 2] if j > 1 else 0) == 1
        ]
        if not hits:
            raise ValueError("rank table is not a permutation rank matrix")
        window.append(min(hits))
    v = Permutation(window)
    if opposite_rank(v) != tuple(tuple(r) for r in rank):
        raise ValueError("rank table is not a permutation rank matrix")
    return v


def coset_reps(w: Permutation, J: frozenset[int] | set[int]) -> tuple[Permutation, Permutation]:
    """Minimal- and maximal-length representatives of the coset w W_J.

    J is a set of simple-reflection indices (1..n-1, acting on positions);
    the minimal representative sorts each J-block of the window ascending,
    the maximal one descending.
    """
    n = w.n
    bad = [j for j in J if not 1 <= j <= n - 1]
    if bad:
        raise ValueError(f"simple reflection indices out of range: {bad}")
    blocks = _j_blocks(n, J)
    lo = list(w.window)
    hi = list(w.window)
    for block in blocks:
        vals = sorted(w.window[p - 1] for p in block)
        for p, v in zip(block, vals):
            lo[p - 1] = v
        for p, v in zip(block, reversed(vals)):
            hi[p - 1] = v
    return Permutation(lo), Permutation(hi)


def _j_blocks(n: int, J) -> list[list[int]]:
    """Maximal position blocks glued by the simple reflections in J."""
    blocks = []
    cur = [1]
    for p in range(2, n + 1):
        if (p - 1) in J:
            cur.append(p)
        else:
            blocks.append(cur)
            cur = [p]
    blocks.append(cur)
    return [b for b in blocks if len(b) > 1]


def w_j_longest_length(n: int, J) -> int:
    """Length of the longest element of the parabolic subgroup W_J."""
    return sum(len(b) * (len(b) - 1) // 2 for b in _j_blocks(n, J))


def contains_pattern(w: Permutation, p: Permutation) -> bool:
    """True iff some subsequence of w is order-isomorphic to p.

    >>> contains_pattern(Permutation([3, 1, 5, 4, 2]), Permutation([3, 4, 1, 2]))
    False
    >>> contains_pattern(Permutation([4, 2, 3, 1]), Permutation([4, 2, 3, 1]))
    True
    """
    k = p.n
    if k > w.n:
        raise ValueError("pattern longer than the permutation")
    pat = p.window
    win = w.window
    for idx in combinations(range(w.n), k):
        vals = [win[i] for i in idx]
        ranks = sorted(range(k), key=lambda t: vals[t])
        iso = [0] * k
        for r, t in enumerate(ranks, start=1):
            iso[t] = r
        if tuple(iso) == pat:
            return True
    return False


def is_covexillary(w: Permutation) -> bool:
    """Avoidance of the pattern 3412."""
    if w.n < 4:
        return True
    return not contains_pattern(w, Permutation([3, 4, 1, 2]))


# ---------------------------------------------------------------------------
# Kazhdan-Lusztig polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KLPolynomial:
    """Coefficients (ascending in q) of P_{v,w}, with the pair attached."""

    coefficients: tuple[int, ...]
    v: Permutation
    w: Permutation

    def __str__(self) -> str:
        if not any(self.coefficients):
            return "0"
        parts = []
        for d, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append("q" if c == 1 else f"{c}*q")
            else:
                parts.append(f"q^{d}" if c == 1 else f"{c}*q^{d}")
        return " + ".join(parts)


def _poly_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_shift(a: tuple[int, ...], k: int) -> tuple[int, ...]:
    if a == (0,):
        return a
    return tuple([0] * k + list(a))


def _poly_scale(a: tuple[int, ...], c: int) -> tuple[int, ...]:
    if c == 0:
        return (0,)
    return tuple(c * x for x in a)


_KL_MEMO: dict = {}
_KL_LOCK = threading.Lock()


def _kl_coeffs(v: Permutation, w: Permutation) -> tuple[int, ...]:
    key = (v.window, w.window)
    with _KL_LOCK:
        hit = _KL_MEMO.get(key)
    if hit is not None:
        return hit
    if not bruhat_leq(v, w):
        out = (0,)
    elif w.length() - v.length() <= 2:
        # degree bound forces a constant, and the constant term is 1
        out = (1,)
    else:
        # descend on the leftmost left descent s of w
        s = w.left_descents()[0]
        sw = w.swap_values(s, s + 1)
        sv = v.swap_values(s, s + 1)
        if sv.length() < v.length():
            # q^0 P_{sv,sw} + q P_{v,sw}
            out = _poly_add(_kl_coeffs(sv, sw), _poly_shift(_kl_coeffs(v, sw), 1))
        else:
            out = _poly_add(_poly_shift(_kl_coeffs(sv, sw), 1), _kl_coeffs(v, sw))
        lw = w.length()
        for z in bruhat_interval(v, sw):
            lz = z.length()
            if (lw - lz) % 2 != 0:
                continue
            if z.swap_values(s, s + 1).length() >= lz:
                continue
            pz = _kl_coeffs(z, sw)
            mu_deg = (sw.length() - lz - 1) // 2
            mu = pz[mu_deg] if mu_deg < len(pz) else 0
            if mu == 0:
                continue
            corr = _poly_scale(_poly_shift(_kl_coeffs(v, z), (lw - lz) // 2), -mu)
            out = _poly_add(out, corr)
    with _KL_LOCK:
        out = _KL_MEMO.setdefault(key, out)
    return out


def kl_polynomial(v: Permutation, w: Permutation) -> KLPolynomial:
    """The Kazhdan-Lusztig polynomial P_{v,w}(q).

    Computed by the classical recursion on a left descent of w, with
    mu-coefficient corrections; results are memoized across calls.
    """
    if v.n != w.n:
        raise ValueError("size mismatch")
    return KLPolynomial(_kl_coeffs(v, w), v, w)
