"""Machine verification of the product laws for local invariants.

Every checker returns a :class:`VerificationReport`; a report with no
failures means the law held on the whole stated range.  Findings collect
non-failing observations: positivity evidence for H-polynomial
coefficients, sampling shortfalls, and timeouts.  Reports are
deterministic for a fixed range and seed, and their JSON form excludes
wall time so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from .charts import (
    chart,
    opposite_minors,
    richardson_ideal_in_chart,
    sample_richardson_point,
    schubert_ideal_in_chart,
    opposite_ideal_in_chart,
    schubert_minors,
)
from .groebner import IdealGens, buchberger, ideal_equal, in_ideal, krull_dimension
from .invariants import (
    local_invariants_at,
    richardson_invariants,
    opposite_invariants,
    schubert_invariants,
)
from .permutations import (
    Permutation,
    bruhat_interval,
    bruhat_leq,
    contains_pattern,
    is_covexillary,
    kl_polynomial,
)
from .sweep import sweep_images


@dataclass
class VerificationReport:
    """Outcome of one verification run over a stated parameter range."""

    check: str
    params: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    wall_time: float | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "VerificationReport") -> None:
        self.cases += other.cases
        self.failures.extend(other.failures)
        self.findings.extend(other.findings)
        if other.wall_time:
            self.wall_time = (self.wall_time or 0.0) + other.wall_time

    def to_json(self) -> str:
        # wall time is deliberately left out: reports must be byte-identical
        payload = {
            "check": self.check,
            "params": self.params,
            "cases": self.cases,
            "failures": self.failures,
            "findings": self.findings,
            "ok": self.ok,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    def to_text(self) -> str:
        lines = [
            f"check: {self.check}",
            f"params: {json.dumps(self.params, sort_keys=True)}",
            f"cases: {self.cases}",
            f"failures: {len(self.failures)}",
            f"findings: {len(self.findings)}",
        ]
        for f in self.failures:
            lines.append(f"  FAIL {json.dumps(f, sort_keys=True)}")
        for f in self.findings:
            lines.append(f"  note {json.dumps(f, sort_keys=True)}")
        if self.wall_time is not None:
            lines.append(f"wall time: {self.wall_time:.3f}s")
        lines.append("status: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines)


def _timed(report: VerificationReport, start: float) -> VerificationReport:
    report.wall_time = time.monotonic() - start
    return report


# ---------------------------------------------------------------------------
# The product isomorphism at ideal level
# ---------------------------------------------------------------------------


def pullback_ideal(u: Permutation, v: Permutation, w: Permutation) -> IdealGens:
    """Rank conditions of w on eta1(x) plus those of v on eta2(x).

    This is the pullback along the sweeping pair of the defining ideal of
    the product (chart of u) meet X_w  x  (chart of u) meet X^v.
    """
    up, down = sweep_images(u)
    gens = schubert_minors(up, w) + opposite_minors(down, v)
    seen = set()
    out = []
    for g in gens:
        k = g.key()
        if k not in seen:
            seen.add(k)
            out.append(g)
    return IdealGens(up.ctx, out)


def verify_product_iso(u: Permutation, v: Permutation, w: Permutation) -> bool:
    """Ideal equality of the sweep pullback with the Richardson chart ideal."""
    if not (u.n == v.n == w.n):
        raise ValueError("size mismatch")
    return ideal_equal(pullback_ideal(u, v, w), richardson_ideal_in_chart(v, w, u))


def product_iso_report(u: Permutation, v: Permutation, w: Permutation) -> VerificationReport:
    start = time.monotonic()
    report = VerificationReport(
        check="product-iso",
        params={"n": u.n, "u": str(u), "v": str(v), "w": str(w)},
    )
    report.cases = 1
    pull = pullback_ideal(u, v, w)
    rich = richardson_ideal_in_chart(v, w, u)
    gp = buchberger(pull)
    gr = buchberger(rich)
    pull_in_rich = all(in_ideal(g, gr) for g in pull.generators)
    rich_in_pull = all(in_ideal(g, gp) for g in rich.generators)
    if not (pull_in_rich and rich_in_pull):
        report.failures.append(
            {
                "case": {"u": str(u), "v": str(v), "w": str(w)},
                "pullback_in_richardson": pull_in_rich,
                "richardson_in_pullback": rich_in_pull,
                "pullback_basis": [str(g) for g in gp.basis],
                "richardson_basis": [str(g) for g in gr.basis],
            }
        )
    return _timed(report, start)


# ---------------------------------------------------------------------------
# Factorization of invariants at fixed points
# ---------------------------------------------------------------------------


def _interval_cases(v: Permutation, w: Permutation):
    if not bruhat_leq(v, w):
        return []
    return bruhat_interval(v, w)


def verify_mult_factorization(
    v: Permutation, w: Permutation, samples: int = 0, seed: int = 0
) -> VerificationReport:
    """mult(X_w^v at sigma) = mult(X_w at sigma) * mult(X^v at sigma) on [v, w]."""
    start = time.monotonic()
    report = VerificationReport(
        check="mult", params={"n": v.n, "v": str(v), "w": str(w), "samples": samples, "seed": seed}
    )
    for sigma in _interval_cases(v, w):
        report.cases += 1
        rich = richardson_invariants(v, w, sigma)
        schub = schubert_invariants(w, sigma)
        opp = opposite_invariants(v, sigma)
        if rich.multiplicity != schub.multiplicity * opp.multiplicity:
            report.failures.append(
                {
                    "case": {"v": str(v), "w": str(w), "sigma": str(sigma)},
                    "richardson_mult": rich.multiplicity,
                    "schubert_mult": schub.multiplicity,
                    "opposite_mult": opp.multiplicity,
                }
            )
    if samples:
        pts = verify_theorem_at_points(v, w, trials=samples, seed=seed, properties=("mult",))
        report.merge(pts)
    return _timed(report, start)


def verify_hpoly_factorization(v: Permutation, w: Permutation) -> VerificationReport:
    """H(X_w^v at sigma) = H(X_w at sigma) * H(X^v at sigma), exactly."""
    start = time.monotonic()
    report = VerificationReport(check="hpoly", params={"n": v.n, "v": str(v), "w": str(w)})
    for sigma in _interval_cases(v, w):
        report.cases += 1
        rich = richardson_invariants(v, w, sigma)
        schub = schubert_invariants(w, sigma)
        opp = opposite_invariants(v, sigma)
        if rich.h_polynomial != schub.h_polynomial * opp.h_polynomial:
            report.failures.append(
                {
                    "case": {"v": str(v), "w": str(w), "sigma": str(sigma)},
                    "richardson_h": list(rich.h_coefficients()),
                    "schubert_h": list(schub.h_coefficients()),
                    "opposite_h": list(opp.h_coefficients()),
                }
            )
        negatives = [c for c in rich.h_coefficients() if c < 0]
        if negatives:
            report.findings.append(
                {
                    "kind": "negative-h-coefficient",
                    "case": {"v": str(v), "w": str(w), "sigma": str(sigma)},
                    "h": list(rich.h_coefficients()),
                }
            )
    return _timed(report, start)


def verify_singular_locus(
    v: Permutation, w: Permutation, samples: int = 0, seed: int = 0
) -> VerificationReport:
    """Richardson smooth at a point iff both factors are smooth there."""
    start = time.monotonic()
    report = VerificationReport(
        check="singlocus",
        params={"n": v.n, "v": str(v), "w": str(w), "samples": samples, "seed": seed},
    )
    for sigma in _interval_cases(v, w):
        report.cases += 1
        rich = richardson_invariants(v, w, sigma)
        schub = schubert_invariants(w, sigma)
        opp = opposite_invariants(v, sigma)
        if rich.smooth != (schub.smooth and opp.smooth):
            report.failures.append(
                {
                    "case": {"v": str(v), "w": str(w), "sigma": str(sigma)},
                    "richardson_smooth": rich.smooth,
                    "schubert_smooth": schub.smooth,
                    "opposite_smooth": opp.smooth,
                }
            )
    if samples:
        pts = verify_theorem_at_points(v, w, trials=samples, seed=seed, properties=("smooth",))
        report.merge(pts)
    return _timed(report, start)


# ---------------------------------------------------------------------------
# The theorem at points that are not torus-fixed
# ---------------------------------------------------------------------------


def verify_theorem_at_points(
    v: Permutation,
    w: Permutation,
    trials: int = 10,
    seed: int = 0,
    properties: tuple[str, ...] = ("mult", "h", "smooth"),
) -> VerificationReport:
    """Both equalities of the factorization law at sampled non-fixed points.

    For sampled pairs tau' <= sigma' inside [v, w], a rational point p of
    the open stratum is drawn; the invariants of X_w^v at p are compared
    with the factor combination at the fixed points sigma'B, tau'B and
    with the factor combination computed directly at p.
    """
    start = time.monotonic()
    report = VerificationReport(
        check="points",
        params={
            "n": v.n,
            "v": str(v),
            "w": str(w),
            "trials": trials,
            "seed": seed,
            "properties": list(properties),
        },
    )
    interval = _interval_cases(v, w)
    pairs = [
        (tau, sigma)
        for sigma in interval
        for tau in interval
        if tau != sigma and bruhat_leq(tau, sigma)
    ]
    if not pairs:
        report.findings.append(
            {"kind": "no-strata", "case": {"v": str(v), "w": str(w)}}
        )
        return _timed(report, start)
    rng = random.Random(seed)
    for t in range(trials):
        tau, sigma = pairs[rng.randrange(len(pairs))]
        point_matrix = sample_richardson_point(tau, sigma, seed=rng.randrange(1 << 30))
        if point_matrix is None:
            report.findings.append(
                {
                    "kind": "sampling-shortfall",
                    "case": {"v": str(v), "w": str(w), "tau": str(tau), "sigma": str(sigma)},
                }
            )
            continue
        report.cases += 1
        ch = chart(sigma)
        point = {
            ch.var_name(i, j): point_matrix[i - 1][j - 1] for (i, j) in ch.free_positions
        }
        rich_p = local_invariants_at(
            richardson_ideal_in_chart(v, w, sigma), point
        )
        schub_fix = schubert_invariants(w, sigma)
        opp_fix = opposite_invariants(v, tau)
        schub_p = local_invariants_at(schubert_ideal_in_chart(w, sigma), point)
        opp_p = local_invariants_at(opposite_ideal_in_chart(v, sigma), point)
        case = {
            "v": str(v),
            "w": str(w),
            "tau": str(tau),
            "sigma": str(sigma),
            "point": {k: str(val) for k, val in sorted(point.items()) if val != 0},
        }
        checks = []
        if "mult" in properties:
            checks.append(
                (
                    "mult",
                    rich_p.multiplicity,
                    schub_fix.multiplicity * opp_fix.multiplicity,
                    schub_p.multiplicity * opp_p.multiplicity,
                )
            )
        if "h" in properties:
            checks.append(
                (
                    "h",
                    list(rich_p.h_coefficients()),
                    _coeffs(schub_fix.h_polynomial * opp_fix.h_polynomial),
                    _coeffs(schub_p.h_polynomial * opp_p.h_polynomial),
                )
            )
        if "smooth" in properties:
            checks.append(
                (
                    "smooth",
                    rich_p.smooth,
                    schub_fix.smooth and opp_fix.smooth,
                    schub_p.smooth and opp_p.smooth,
                )
            )
        for name, got, via_fixed, via_point in checks:
            if got != via_fixed or got != via_point:
                report.failures.append(
                    {
                        "case": case,
                        "property": name,
                        "at_point": got,
                        "via_fixed_points": via_fixed,
                        "via_point_factors": via_point,
                    }
                )
    return _timed(report, start)


def _coeffs(h) -> list[int]:
    from .groebner import _q_coeffs

    return _q_coeffs(h)


# ---------------------------------------------------------------------------
# Kazhdan-Lusztig comparison and the smoothness table
# ---------------------------------------------------------------------------


def verify_kl_vs_h(w: Permutation) -> VerificationReport:
    """Coefficientwise P_{v,w} <= H at vB in X_w, for covexillary w."""
    if not is_covexillary(w):
        raise ValueError("the comparison is only asserted for 3412-avoiding w")
    start = time.monotonic()
    report = VerificationReport(check="kl-vs-h", params={"n": w.n, "w": str(w)})
    for v in bruhat_interval(Permutation.identity(w.n), w):
        report.cases += 1
        kl = kl_polynomial(v, w)
        h = schubert_invariants(w, v).h_coefficients()
        for d, c in enumerate(kl.coefficients):
            hc = h[d] if d < len(h) else 0
            if c > hc:
                report.failures.append(
                    {
                        "case": {"v": str(v), "w": str(w)},
                        "kl": list(kl.coefficients),
                        "h": list(h),
                        "degree": d,
                    }
                )
                break
    return _timed(report, start)


PATTERN_4231 = Permutation([4, 2, 3, 1])
PATTERN_3412 = Permutation([3, 4, 1, 2])


def pattern_smooth(w: Permutation) -> bool:
    """The classical criterion: smooth iff w avoids 4231 and 3412."""
    if w.n < 4:
        return True
    return not (contains_pattern(w, PATTERN_4231) or contains_pattern(w, PATTERN_3412))


def schubert_smoothness_table(n: int, full_scan: bool = True) -> VerificationReport:
    """Compare computed global smoothness of X_w with pattern avoidance.

    full_scan checks every fixed point sigma <= w.  Without it only the
    identity fixed point is computed: the singular locus is closed and
    stable under the Borel group, so a singular Schubert variety is
    already singular at the identity.
    """
    if n > 5:
        raise ValueError("table is desk-scale only (n <= 5)")
    start = time.monotonic()
    report = VerificationReport(
        check="smooth-table", params={"n": n, "full_scan": full_scan}
    )
    ident = Permutation.identity(n)
    for w in Permutation.all(n):
        report.cases += 1
        if full_scan:
            computed = all(
                schubert_invariants(w, sigma).smooth
                for sigma in bruhat_interval(ident, w)
            )
        else:
            computed = schubert_invariants(w, ident).smooth
        expected = pattern_smooth(w)
        if computed != expected:
            report.failures.append(
                {
                    "case": {"w": str(w)},
                    "computed_smooth": computed,
                    "pattern_smooth": expected,
                }
            )
    return _timed(report, start)


def verify_dimension_law(v: Permutation, w: Permutation) -> VerificationReport:
    """dim of every nonempty Richardson chart ideal is l(w) - l(v)."""
    start = time.monotonic()
    report = VerificationReport(check="dimension", params={"n": v.n, "v": str(v), "w": str(w)})
    expected = w.length() - v.length()
    for sigma in _interval_cases(v, w):
        report.cases += 1
        got = krull_dimension(richardson_ideal_in_chart(v, w, sigma))
        if got != expected:
            report.failures.append(
                {
                    "case": {"v": str(v), "w": str(w), "sigma": str(sigma)},
                    "dimension": got,
                    "expected": expected,
                }
            )
    return _timed(report, start)
