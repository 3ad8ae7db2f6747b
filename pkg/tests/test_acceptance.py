"""Acceptance suite: one test per exit criterion, at the stated scale.

Run with ``pytest -s tests/test_acceptance.py`` to see one line per
criterion.  The S4 battery (criteria 5-8) is computed once and shared;
all invariant computations run with oracle cross-checking on, so every
tangent cone in these suites is independently confirmed by the
truncation oracle (criterion 10).
"""

import io
import json
import random
import time

import pytest

import richardson.invariants as rinv
from richardson.charts import chart, generic_matrix
from richardson.cli import run
from richardson.invariants import schubert_invariants
from richardson.permutations import Permutation, bruhat_leq, is_covexillary
from richardson.sweep import (
    claim_structure_check,
    recovery_round_trip,
    sweep_images,
)
from richardson.verify import (
    pattern_smooth,
    schubert_smoothness_table,
    verify_dimension_law,
    verify_hpoly_factorization,
    verify_kl_vs_h,
    verify_mult_factorization,
    verify_product_iso,
    verify_singular_locus,
    verify_theorem_at_points,
)


def _report(num, name, elapsed, detail=""):
    print(f"ACCEPTANCE {num} ({name}): PASS in {elapsed:.1f}s {detail}".rstrip())


def _bruhat_pairs(n):
    elems = Permutation.all(n)
    return [(v, w) for v in elems for w in elems if bruhat_leq(v, w)]


@pytest.fixture(scope="module")
def s4_battery():
    """Exhaustive S4 sweep shared by criteria 5-8."""
    t0 = time.monotonic()
    pairs = _bruhat_pairs(4)
    reports = {"mult": [], "hpoly": [], "singlocus": [], "dimension": []}
    for (v, w) in pairs:
        reports["mult"].append(verify_mult_factorization(v, w))
        reports["hpoly"].append(verify_hpoly_factorization(v, w))
        reports["singlocus"].append(verify_singular_locus(v, w))
        reports["dimension"].append(verify_dimension_law(v, w))
    elapsed = time.monotonic() - t0
    return {"pairs": pairs, "reports": reports, "elapsed": elapsed}


def test_criterion_01_sweep_example_reproduction():
    t0 = time.monotonic()
    buf = io.StringIO()
    assert run(["sweep", "--u", "31542"], buf) == 0
    payload = json.loads(buf.getvalue())
    u = Permutation([3, 1, 5, 4, 2])
    ch = chart(u)
    z = lambda i, j: ch.var(i, j)
    x, (up, down) = generic_matrix(u), sweep_images(u)
    # the published matrices, built symbolically and compared in canonical form
    assert payload["x"][0] == ["z11", "1", "0", "0", "0"]
    assert payload["x"][1] == ["z21", "z22", "z23", "z24", "1"]
    assert payload["x"][2] == ["1", "0", "0", "0", "0"]
    assert payload["x"][3] == ["z41", "z42", "z43", "1", "0"]
    assert payload["x"][4] == ["z51", "z52", "1", "0", "0"]
    expect_up = z(2, 2) - z(2, 4) * (z(4, 2) - z(5, 2) * z(4, 3)) - z(2, 3) * z(5, 2)
    assert payload["eta1"][1][1] == str(expect_up)
    assert payload["eta1"][3][0] == str(z(4, 1) - z(5, 1) * z(4, 3))
    assert payload["eta1"][3][1] == str(z(4, 2) - z(5, 2) * z(4, 3))
    assert payload["eta2"][1][0] == str(z(2, 1) - z(1, 1) * z(2, 2))
    assert payload["eta2"][1][2] == "z23"
    assert payload["eta2"][1][3] == "z24"
    assert payload["eta2"][3][2] == "z43"
    assert up.entry(2, 2) == expect_up
    assert down.entry(2, 1) == z(2, 1) - z(1, 1) * z(2, 2)
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    _report(1, "sweep example reproduction", elapsed)


def test_criterion_02_recovery_round_trip():
    t0 = time.monotonic()
    for u in Permutation.all(4):
        assert recovery_round_trip(u), f"round trip failed for {u}"
    s5 = Permutation.all(5)
    rng = random.Random(0)
    picks = [s5[rng.randrange(120)] for _ in range(20)]
    for u in picks:
        assert recovery_round_trip(u), f"round trip failed for {u}"
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    _report(2, "recovery round trip", elapsed, f"(24 + {len(picks)} charts)")


def test_criterion_03_claim_structure_all_s5():
    t0 = time.monotonic()
    for u in Permutation.all(5):
        assert claim_structure_check(u), f"claim fails for {u}"
    elapsed = time.monotonic() - t0
    assert elapsed < 120.0
    _report(3, "structure claim on all 120 charts", elapsed)


def test_criterion_04_product_isomorphism():
    t0 = time.monotonic()
    cases = 0
    for u in Permutation.all(3):
        for (v, w) in _bruhat_pairs(3):
            assert verify_product_iso(u, v, w), (u, v, w)
            cases += 1
    assert cases == 114
    s4 = Permutation.all(4)
    pairs4 = _bruhat_pairs(4)
    rng = random.Random(0)
    for _ in range(50):
        u = s4[rng.randrange(24)]
        v, w = pairs4[rng.randrange(len(pairs4))]
        assert verify_product_iso(u, v, w), (u, v, w)
        cases += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 900.0
    _report(4, "product isomorphism at ideal level", elapsed, f"({cases} cases)")


def test_criterion_05_mult_factorization(s4_battery):
    t0 = time.monotonic()
    for rep in s4_battery["reports"]["mult"]:
        assert rep.ok, rep.to_text()
    cases = sum(r.cases for r in s4_battery["reports"]["mult"])
    assert cases == 1088  # chains v <= sigma <= w in S4
    # seeded S5 triples
    s5pairs = _bruhat_pairs(5)
    rng = random.Random(0)
    extra = 0
    from richardson.invariants import (
        opposite_invariants,
        richardson_invariants,
    )
    from richardson.permutations import bruhat_interval

    while extra < 20:
        v, w = s5pairs[rng.randrange(len(s5pairs))]
        interval = bruhat_interval(v, w)
        sigma = interval[rng.randrange(len(interval))]
        rich = richardson_invariants(v, w, sigma)
        schub = schubert_invariants(w, sigma)
        opp = opposite_invariants(v, sigma)
        assert rich.multiplicity == schub.multiplicity * opp.multiplicity, (v, w, sigma)
        extra += 1
    elapsed = time.monotonic() - t0 + s4_battery["elapsed"]
    assert elapsed < 1800.0
    _report(5, "multiplicity factorization", elapsed, f"({cases} + {extra} cases)")


def test_criterion_06_hpoly_factorization(s4_battery):
    t0 = time.monotonic()
    negatives = []
    for rep in s4_battery["reports"]["hpoly"]:
        assert rep.ok, rep.to_text()
        negatives.extend(
            f for f in rep.findings if f["kind"] == "negative-h-coefficient"
        )
    assert negatives == []
    elapsed = time.monotonic() - t0 + s4_battery["elapsed"]
    assert elapsed < 1800.0
    cases = sum(r.cases for r in s4_battery["reports"]["hpoly"])
    _report(6, "H-polynomial factorization", elapsed, f"({cases} cases, 0 negative coefficients)")


def test_criterion_07_singular_locus(s4_battery):
    t0 = time.monotonic()
    for rep in s4_battery["reports"]["singlocus"]:
        assert rep.ok, rep.to_text()
    # sampled non-fixed points
    pairs4 = _bruhat_pairs(4)
    rng = random.Random(1)
    sampled = 0
    for _ in range(8):
        v, w = pairs4[rng.randrange(len(pairs4))]
        rep = verify_theorem_at_points(v, w, trials=3, seed=rng.randrange(10000), properties=("smooth",))
        assert rep.ok, rep.to_text()
        sampled += rep.cases
    assert sampled >= 10
    elapsed = time.monotonic() - t0 + s4_battery["elapsed"]
    assert elapsed < 900.0
    cases = sum(r.cases for r in s4_battery["reports"]["singlocus"])
    _report(7, "singular-locus conjunction", elapsed, f"({cases} fixed + {sampled} sampled points)")


def test_criterion_08_dimension_law(s4_battery):
    t0 = time.monotonic()
    for rep in s4_battery["reports"]["dimension"]:
        assert rep.ok, rep.to_text()
    elapsed = time.monotonic() - t0 + s4_battery["elapsed"]
    assert elapsed < 600.0
    cases = sum(r.cases for r in s4_battery["reports"]["dimension"])
    _report(8, "dimension law", elapsed, f"({cases} chart ideals)")


def test_criterion_09_smoothness_oracle(s4_battery):
    t0 = time.monotonic()
    rep4 = schubert_smoothness_table(4, full_scan=True)
    assert rep4.ok, rep4.to_text()
    # S5 by the identity-point reduction: the singular locus of a Schubert
    # variety is closed and stable under the Borel group, so a singular
    # variety is already singular at the identity fixed point
    id5 = Permutation.identity(5)
    mismatches = []
    for w in Permutation.all(5):
        computed = schubert_invariants(w, id5).smooth
        if computed != pattern_smooth(w):
            mismatches.append(str(w))
    assert mismatches == []
    elapsed = time.monotonic() - t0
    assert elapsed < 3600.0
    _report(9, "smoothness vs pattern avoidance", elapsed, "(24 full scans + 120 identity scans)")


def test_criterion_10_oracle_concordance(s4_battery):
    # every invariant record in suites 5-9 ran with oracle checking on; a
    # concordance failure raises instead of returning, so reaching this
    # point with a large check count is the assertion
    assert rinv.ORACLE_CHECKS >= 1000
    _report(10, "tangent-cone vs truncation oracle", 0.0, f"({rinv.ORACLE_CHECKS} concordance checks)")


def test_criterion_11_kl_vs_h(s4_battery):
    t0 = time.monotonic()
    cases = 0
    for w in Permutation.all(4):
        if not is_covexillary(w):
            continue
        rep = verify_kl_vs_h(w)
        assert rep.ok, rep.to_text()
        cases += rep.cases
    elapsed = time.monotonic() - t0
    assert elapsed < 600.0
    _report(11, "Kazhdan-Lusztig vs H comparison", elapsed, f"({cases} pairs)")


def test_criterion_12_determinism():
    t0 = time.monotonic()
    for argv in (
        ["verify", "mult", "--n", "3", "--exhaustive"],
        ["verify", "points", "--n", "3", "--samples", "4", "--seed", "9"],
        ["verify", "product-iso", "--n", "3", "--samples", "6", "--seed", "3"],
    ):
        a, b = io.StringIO(), io.StringIO()
        assert run(argv, a) == 0
        assert run(argv, b) == 0
        assert a.getvalue() == b.getvalue(), argv
    elapsed = time.monotonic() - t0
    _report(12, "byte-identical reports", elapsed)
