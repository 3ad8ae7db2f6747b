"""Affine charts on GL_n/B and determinantal ideals restricted to a chart.

The chart attached to u is the u-translate of the big opposite cell: its
points are the matrices with a 1 in row u(j), column j, zeros to the right
of each 1, and free entries z_ij at every position strictly left of the 1
in its row.  The free positions split as D_up (below the 1 of their
column) and D_down (above it); |D_down| = l(u).  The unique torus-fixed
point of the chart is uB, at the origin of the coordinates.

Schubert, opposite Schubert, and Richardson varieties meet a chart in the
vanishing locus of justified minors of the generic chart matrix; the
emitted generators are the essential rank conditions (a regression test
pins them against the full unpruned list).
"""

from __future__ import annotations

import random
import threading
from fractions import Fraction
from itertools import combinations

from .groebner import IdealGens
from .permutations import (
    Permutation,
    bruhat_interval,
    bruhat_leq,
    opposite_rank,
    permutation_from_opposite_rank,
    permutation_from_schubert_rank,
    schubert_rank,
)
from .poly import Context, Polynomial


def _var_name(i: int, j: int) -> str:
    if i <= 9 and j <= 9:
        return f"z{i}{j}"
    return f"z{i}_{j}"


def _latex_name(i: int, j: int) -> str:
    if i <= 9 and j <= 9:
        return f"z_{{{i}{j}}}"
    return f"z_{{{i},{j}}}"


class Chart:
    """The affine chart of the flag variety attached to u."""

    __slots__ = ("u", "free_positions", "d_up", "d_down", "ctx", "_position_index")

    def __init__(self, u: Permutation):
        n = u.n
        uinv = u.inverse()
        free = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, uinv(i))
        ]
        free.sort()  # row-major
        self.u = u
        self.free_positions = tuple(free)
        self.d_up = frozenset((i, j) for (i, j) in free if i > u(j))
        self.d_down = frozenset((i, j) for (i, j) in free if i < u(j))
        self.ctx = Context(
            tuple(_var_name(i, j) for (i, j) in free),
            tuple(_latex_name(i, j) for (i, j) in free),
        )
        self._position_index = {pos: k for k, pos in enumerate(free)}

    @property
    def n(self) -> int:
        return self.u.n

    def var(self, i: int, j: int) -> Polynomial:
        return self.ctx.var(_var_name(i, j))

    def var_name(self, i: int, j: int) -> str:
        return _var_name(i, j)

    def position_of(self, name: str) -> tuple[int, int]:
        k = self.ctx.index(name)
        return self.free_positions[k]

    def origin(self) -> dict[str, Fraction]:
        return {nm: Fraction(0) for nm in self.ctx.names}


_CHART_MEMO: dict = {}
_CHART_LOCK = threading.Lock()


def chart(u: Permutation) -> Chart:
    with _CHART_LOCK:
        hit = _CHART_MEMO.get(u.window)
        if hit is None:
            hit = Chart(u)
            _CHART_MEMO[u.window] = hit
        return hit


class ChartMatrix:
    """An n x n matrix of polynomials in a chart's coordinates."""

    __slots__ = ("chart", "rows", "ctx", "_det_memo")

    def __init__(self, chart_: Chart, rows):
        self.chart = chart_
        self.rows = tuple(tuple(row) for row in rows)
        self.ctx = self.rows[0][0].ctx
        self._det_memo: dict = {}

    def entry(self, i: int, j: int) -> Polynomial:
        return self.rows[i - 1][j - 1]

    def support(self) -> set[tuple[int, int]]:
        n = self.chart.n
        return {
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if not self.rows[i - 1][j - 1].is_zero()
        }

    def minor(self, row_idx: tuple[int, ...], col_idx: tuple[int, ...]) -> Polynomial:
        """Determinant of the square submatrix, memoized across conditions."""
        key = (row_idx, col_idx)
        hit = self._det_memo.get(key)
        if hit is not None:
            return hit
        k = len(row_idx)
        ctx = self.ctx
        if k == 1:
            out = self.rows[row_idx[0] - 1][col_idx[0] - 1]
        else:
            # expand along the last column (charts have many structural zeros)
            out = ctx.zero()
            col = col_idx[-1]
            rest_cols = col_idx[:-1]
            for t, r in enumerate(row_idx):
                e = self.rows[r - 1][col - 1]
                if e.is_zero():
                    continue
                rest_rows = row_idx[:t] + row_idx[t + 1:]
                sub = self.minor(rest_rows, rest_cols)
                if sub.is_zero():
                    continue
                term = e * sub
                if (k - 1 + t) % 2 == 1:
                    term = -term
                out = out + term
        self._det_memo[key] = out
        return out

    def to_strings(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.rows]

    def to_latex(self) -> str:
        body = " \\\\\n".join(
            " & ".join(e.latex() for e in row) for row in self.rows
        )
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"

    def evaluate(self, point) -> list[list[Fraction]]:
        return [[e.evaluate(point) for e in row] for row in self.rows]


def generic_matrix(u: Permutation) -> ChartMatrix:
    """The generic matrix of the chart of u: 1 at (u(j), j), z_ij at free positions."""
    ch = chart(u)
    n = u.n
    uinv = u.inverse()
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j == uinv(i):
                row.append(ch.ctx.one())
            elif j < uinv(i):
                row.append(ch.var(i, j))
            else:
                row.append(ch.ctx.zero())
        rows.append(row)
    return ChartMatrix(ch, rows)


# ---------------------------------------------------------------------------
# Rank conditions and their ideals
# ---------------------------------------------------------------------------


def _essential_schubert_conditions(w: Permutation, prune: bool = True):
    """Non-vacuous (i, j, bound) triples for lower-left rank conditions."""
    n = w.n
    r = schubert_rank(w)
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            b = r[i - 1][j - 1]
            if b >= min(n - i + 1, j):
                continue  # vacuous
            if prune:
                if i > 1 and r[i - 2][j - 1] == b:
                    continue  # implied by the taller submatrix
                if j < n and r[i - 1][j] == b:
                    continue  # implied by the wider submatrix
            out.append((i, j, b))
    return out


def _essential_opposite_conditions(v: Permutation, prune: bool = True):
    """Non-vacuous (i, j, bound) triples for upper-left rank conditions."""
    n = v.n
    r = opposite_rank(v)
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            b = r[i - 1][j - 1]
            if b >= min(i, j):
                continue
            if prune:
                if i < n and r[i][j - 1] == b:
                    continue
                if j < n and r[i - 1][j] == b:
                    continue
            out.append((i, j, b))
    return out


def schubert_minors(matrix: ChartMatrix, w: Permutation, prune: bool = True) -> list[Polynomial]:
    """All (bound+1)-minors of rows i..n, columns 1..j for the conditions of w."""
    n = w.n
    out = []
    seen = set()
    for (i, j, b) in _essential_schubert_conditions(w, prune):
        for rows in combinations(range(i, n + 1), b + 1):
            for cols in combinations(range(1, j + 1), b + 1):
                m = matrix.minor(rows, cols)
                if m.is_zero():
                    continue
                k = m.key()
                if k not in seen:
                    seen.add(k)
                    out.append(m)
    return out


def opposite_minors(matrix: ChartMatrix, v: Permutation, prune: bool = True) -> list[Polynomial]:
    out = []
    seen = set()
    for (i, j, b) in _essential_opposite_conditions(v, prune):
        for rows in combinations(range(1, i + 1), b + 1):
            for cols in combinations(range(1, j + 1), b + 1):
                m = matrix.minor(rows, cols)
                if m.is_zero():
                    continue
                k = m.key()
                if k not in seen:
                    seen.add(k)
                    out.append(m)
    return out


def schubert_ideal_in_chart(w: Permutation, u: Permutation, prune: bool = True) -> IdealGens:
    """Defining ideal of X_w in the chart of u."""
    if w.n != u.n:
        raise ValueError("size mismatch")
    x = generic_matrix(u)
    return IdealGens(x.chart.ctx, schubert_minors(x, w, prune))


def opposite_ideal_in_chart(v: Permutation, u: Permutation, prune: bool = True) -> IdealGens:
    """Defining ideal of the opposite Schubert variety X^v in the chart of u."""
    if v.n != u.n:
        raise ValueError("size mismatch")
    x = generic_matrix(u)
    return IdealGens(x.chart.ctx, opposite_minors(x, v, prune))


def richardson_ideal_in_chart(
    v: Permutation, w: Permutation, u: Permutation, prune: bool = True
) -> IdealGens:
    """Defining ideal of X_w^v = X_w meet X^v in the chart of u."""
    if not (v.n == w.n == u.n):
        raise ValueError("size mismatch")
    x = generic_matrix(u)
    gens = schubert_minors(x, w, prune) + opposite_minors(x, v, prune)
    seen = set()
    out = []
    for g in gens:
        k = g.key()
        if k not in seen:
            seen.add(k)
            out.append(g)
    return IdealGens(x.chart.ctx, out)


# ---------------------------------------------------------------------------
# Exact linear algebra and cell membership
# ---------------------------------------------------------------------------


def rational_rank(rows: list[list[Fraction]]) -> int:
    """Rank over Q by fraction Gaussian elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        for r in range(row + 1, len(m)):
            if m[r][col] != 0:
                f = m[r][col] / pv
                mr = m[r]
                prow = m[row]
                for c in range(col, ncols):
                    mr[c] -= f * prow[c]
        rank += 1
        row += 1
        if row == len(m):
            break
    return rank


def identify_cells(x: list[list[Fraction]]) -> tuple[Permutation, Permutation]:
    """The (Schubert cell, opposite cell) pair of an invertible matrix.

    sigma is read off the lower-left justified ranks, tau off the
    upper-left ones.
    """
    n = len(x)
    if rational_rank(x) < n:
        raise ValueError("singular matrix")
    lower = [
        [rational_rank([row[:j] for row in x[i - 1:]]) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    upper = [
        [rational_rank([row[:j] for row in x[:i]]) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    sigma = permutation_from_schubert_rank(lower)
    tau = permutation_from_opposite_rank(upper)
    return sigma, tau


def fixed_points_of_richardson(v: Permutation, w: Permutation) -> list[Permutation]:
    """The torus-fixed points of X_w^v: the Bruhat interval [v, w]."""
    return bruhat_interval(v, w)


# ---------------------------------------------------------------------------
# Sampling points on open strata
# ---------------------------------------------------------------------------


def cell_form_matrix(sigma: Permutation, values) -> list[list[Fraction]]:
    """Canonical Schubert-cell representative: 1s at sigma, values above them.

    values maps D_down(sigma) positions (i, j) to rationals.
    """
    n = sigma.n
    ch = chart(sigma)
    out = [[Fraction(0)] * n for _ in range(n)]
    for j in range(1, n + 1):
        out[sigma(j) - 1][j - 1] = Fraction(1)
    for (i, j) in sorted(ch.d_down):
        out[i - 1][j - 1] = Fraction(values.get((i, j), 0))
    return out


def _small_fraction(rng: random.Random) -> Fraction:
    num = rng.choice([-3, -2, -1, 1, 2, 3])
    den = rng.choice([1, 1, 2, 3])
    return Fraction(num, den)


def sample_richardson_point(
    tau: Permutation, sigma: Permutation, seed: int = 0, attempts: int = 40
):
    """A rational point of the open stratum (Schubert cell of sigma) meet
    (opposite cell of tau), or None if the randomized solve fails.

    The Schubert cell of sigma is parametrized by its D_down positions;
    the opposite rank equalities of tau are imposed by solving the minor
    system: variables with constant linear coefficients are eliminated
    exactly, the rest are specialized to small random rationals.  Every
    returned point is verified with identify_cells.
    """
    if not bruhat_leq(tau, sigma):
        raise ValueError("tau is not below sigma in Bruhat order")
    n = sigma.n
    ch = chart(sigma)
    positions = sorted(ch.d_down)
    if not positions:
        return cell_form_matrix(sigma, {})
    ctx = Context(tuple(_var_name(i, j) for (i, j) in positions))
    name_to_pos = dict(zip(ctx.names, positions))
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if sigma(j) == i:
                row.append(ctx.one())
            elif (i, j) in ch.d_down:
                row.append(ctx.var(_var_name(i, j)))
            else:
                row.append(ctx.zero())
        rows.append(row)
    cellm = ChartMatrix(ch, rows)  # chart only supplies n; ctx differs
    system = opposite_minors(cellm, tau, prune=True)
    rng = random.Random(seed)

    for _ in range(max(1, attempts)):
        gens = [g for g in system]
        substitutions: list[tuple[str, Polynomial]] = []
        assignment: dict[str, Fraction] = {}
        feasible = True
        while gens:
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                break
            if any(g.is_constant() for g in gens):
                feasible = False
                break
            # prefer an exact elimination: a variable with constant coefficient
            pick = None
            for g in sorted(gens, key=lambda g: (len(g.terms), str(g))):
                for i in sorted(g.variables()):
                    if g.degree_in(i) != 1:
                        continue
                    coef = g.coefficient_of_var(i)
                    if coef.is_constant() and not coef.is_zero():
                        pick = (g, i, coef.constant_term())
                        break
                if pick:
                    break
            if pick is not None:
                g, i, c = pick
                name = ctx.names[i]
                image = g.drop_var(i) * (Fraction(-1) / c)
                substitutions.append((name, image))
                gens = [
                    h.substitute(
                        {name: image}
                        | {ctx.names[k]: ctx.var(ctx.names[k]) for k in h.variables() if k != i}
                    )
                    if i in h.variables()
                    else h
                    for h in gens
                ]
                continue
            # otherwise specialize the most shared variable randomly
            counts: dict[int, int] = {}
            for h in gens:
                for i in h.variables():
                    counts[i] = counts.get(i, 0) + 1
            i = min(counts, key=lambda k: (-counts[k], k))
            name = ctx.names[i]
            val = _small_fraction(rng)
            assignment[name] = val
            gens = [
                h.substitute(
                    {name: ctx.const(val)}
                    | {ctx.names[k]: ctx.var(ctx.names[k]) for k in h.variables() if k != i}
                )
                if i in h.variables()
                else h
                for h in gens
            ]
        if not feasible:
            continue
        for nm in ctx.names:
            if nm not in assignment and all(nm != s[0] for s in substitutions):
                assignment[nm] = _small_fraction(rng)
        # resolve eliminations in reverse creation order
        ok = True
        for nm, image in reversed(substitutions):
            try:
                assignment[nm] = image.evaluate(assignment)
            except ValueError:
                ok = False
                break
        if not ok:
            continue
        values = {name_to_pos[nm]: c for nm, c in assignment.items()}
        matrix = cell_form_matrix(sigma, values)
        got_sigma, got_tau = identify_cells(matrix)
        if got_sigma == sigma and got_tau == tau:
            return matrix
    return None
