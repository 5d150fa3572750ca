"""Acceptance suite: one test per acceptance criterion, one verdict line each.

Each test prints a single `acceptance criterion N: PASS/FAIL` line and then
asserts, so the suite doubles as a human-readable checklist. Sample sizes,
grids, tolerances and runtime budgets are pinned here on purpose; loosening
them is a contract change, not a refactor.
"""

import json
import math
import random
import re
import time
from fractions import Fraction

import pytest

from turancheck import exact
from turancheck.cli import main as cli_main
from turancheck.report import FAIL, PASS
from turancheck.runner import conjecture_scan
from turancheck.specials import bessel_turanian, kummer, kummer_derivative
from turancheck.suites import (
    build_bessel,
    build_hypergeometric,
    build_phi,
    build_lambda,
    random_rational,
    run_task,
)

REL_TOL = 1e-9
SEED = 20260823


def _verdict(n: int, ok: bool, detail: str) -> None:
    print(f"acceptance criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")


@pytest.fixture(scope="module")
def identity_sample():
    """2,000 random rational tuples (m <= 12; mu, a, b in (0, 5])."""
    rng = random.Random(SEED)
    return [
        (
            rng.randint(0, 12),
            random_rational(rng, Fraction(5)),
            random_rational(rng, Fraction(5)),
            random_rational(rng, Fraction(5)),
        )
        for _ in range(2000)
    ]


def test_criterion_01_gamma_sum_identity(identity_sample):
    start = time.perf_counter()
    bad = 0
    for m, mu, a, b in identity_sample:
        total = exact.gamma_sum_terms(m, mu, a, b)
        closed = exact.gamma_sum_closed(m, mu, a, b)
        if (total.p - closed.p, total.q - closed.q) != (0, 0):
            bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 60.0
    _verdict(1, ok, f"2000 tuples, {bad} mismatches, {elapsed:.1f}s (< 60s)")
    assert bad == 0
    assert elapsed < 60.0


def test_criterion_02_telescoping_identity(identity_sample):
    start = time.perf_counter()
    bad = 0
    for m, mu, _, beta in identity_sample:
        total, closed = exact.telescoping_sum(m, mu, beta)
        if not total.equals(closed) or total.sign() != 1:
            bad += 1
        total0, closed0 = exact.telescoping_sum(m, mu, Fraction(0))
        if not total0.equals(closed0) or total0.sign() != 0:
            bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 30.0
    _verdict(2, ok, f"2000 tuples + beta=0 slice, {bad} mismatches, {elapsed:.1f}s (< 30s)")
    assert bad == 0
    assert elapsed < 30.0


def test_criterion_03_phi_coefficients_positive():
    start = time.perf_counter()
    tasks = build_phi({"samples": 200, "m_max": 30, "seed": SEED})
    assert len(tasks) == 200
    failures = [r for r in map(run_task, tasks) if r.status != PASS]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300.0
    _verdict(3, ok, f"200 sequences, m <= 30, {len(failures)} failures, {elapsed:.1f}s (< 300s)")
    assert not failures
    assert elapsed < 300.0


def test_criterion_04_lambda_coefficients_positive():
    start = time.perf_counter()
    tasks = build_lambda({"samples": 200, "m_max": 30, "seed": SEED})
    assert len(tasks) == 203  # 200 random + eta in {1, 3/2, 2}
    failures = [r for r in map(run_task, tasks) if r.status != PASS]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300.0
    _verdict(4, ok, f"203 sequences, m <= 30, {len(failures)} failures, {elapsed:.1f}s (< 300s)")
    assert not failures
    assert elapsed < 300.0


def test_criterion_05_mk_sign_structure(identity_sample):
    bad_pattern = bad_sum = 0
    for m, mu, a, b in identity_sample:
        pattern = exact.m_k_values(m, mu, a, b)
        if not pattern.legal:
            bad_pattern += 1
        folded = exact.GammaQuotientSum.zero(mu, a, b)
        for k in range(m // 2 + 1):
            w = Fraction(1, math.factorial(k) * math.factorial(m - k))
            folded = folded + pattern.values[k].scale(w)
        if not folded.equals(exact.gamma_sum_terms(m, mu, a, b)):
            bad_sum += 1
    ok = bad_pattern == 0 and bad_sum == 0
    _verdict(5, ok, f"2000 tuples, {bad_pattern} illegal patterns, {bad_sum} sum mismatches")
    assert bad_pattern == 0
    assert bad_sum == 0


def test_criterion_06_bessel_suite():
    start = time.perf_counter()
    results = [run_task(t) for t in build_bessel({})]
    sandwich = [r for r in results if r.check_id == "bessel.sandwich"]
    coeffs = [r for r in results if r.check_id == "bessel.coefficients_positive"]
    assert len(sandwich) == 13 * 40  # nu in {-1,...,5} step 1/2, u in {1/2,...,20} step 1/2
    bad_sandwich = [r for r in sandwich if r.status != PASS or r.margin <= 0.0]
    bad_coeffs = [r for r in coeffs if r.status != PASS]
    oracle = 2.66638354729608370169  # I_0(2)^2 - I_1(2)^2, 30-digit reference
    delta = bessel_turanian(0.0, 1.0, 2.0)
    oracle_ok = abs(delta - oracle) <= REL_TOL * oracle
    elapsed = time.perf_counter() - start
    ok = not bad_sandwich and not bad_coeffs and oracle_ok and elapsed < 120.0
    _verdict(
        6,
        ok,
        f"{len(sandwich)} sandwich points, {len(coeffs)} coefficient checks, "
        f"oracle rel err {abs(delta - oracle) / oracle:.1e}, {elapsed:.1f}s (< 120s)",
    )
    assert not bad_sandwich
    assert not bad_coeffs
    assert oracle_ok
    assert elapsed < 120.0


def test_criterion_07_kummer_bounds_and_residuals():
    rng = random.Random(SEED)
    flipped = outside = 0
    for _ in range(200):
        a = 1.0 + rng.random() * 4.0
        b = rng.random() * 6.0 + 0.05
        if abs(b - a) < 1e-6:
            b += 0.5
        x = rng.random() * 10.0 + 1e-6
        from turancheck.specials import kummer_logderiv_bounds

        lower, upper = kummer_logderiv_bounds(a, b, x)
        ratio = kummer_derivative(a, b, x) / kummer(a, b, x)
        if not (lower < ratio < upper):
            outside += 1
        if 0.0 < b < a:
            flipped += 1
    bad_residuals = 0
    from turancheck.specials import contiguous_residuals

    for _ in range(100):
        a = rng.random() * 4.0 + 0.2
        b = rng.random() * 4.0 + 1.1
        x = rng.random() * 5.0 + 0.1
        scale = max(abs(kummer(a, b, x)) * max(a, b, x, 1.0), 1.0)
        if max(abs(r) for r in contiguous_residuals(a, b, x)) > REL_TOL * scale:
            bad_residuals += 1
    ok = outside == 0 and flipped > 0 and bad_residuals == 0
    _verdict(
        7,
        ok,
        f"200 bound points ({flipped} with 0<b<a), {outside} escapes; "
        f"100 residual points, {bad_residuals} above 1e-9",
    )
    assert outside == 0
    assert flipped > 0
    assert bad_residuals == 0


def test_criterion_08_pfq_chain_implies_logconcavity():
    results = [run_task(t) for t in build_hypergeometric({"samples": 60, "n_max": 50, "seed": SEED})]
    violations = [r for r in results if r.status == FAIL]
    satisfied = [r for r in results if r.status == PASS]
    ok = not violations and len(satisfied) > 0
    _verdict(
        8,
        ok,
        f"60 rational tuples (q <= 3), {len(satisfied)} chains satisfied, "
        f"{len(violations)} log-concavity violations",
    )
    assert not violations
    assert satisfied


def test_criterion_09_param_derivative_example():
    from turancheck.specials import harmonic_shift_weights
    from turancheck.gamma_core import pochhammer_rational
    from turancheck.suites import op_param_derivative_sandwich

    bad_lc = 0
    for a in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5)):
        w = harmonic_shift_weights(a, 41)
        h = [w[k] * pochhammer_rational(a, k) / math.factorial(k) for k in range(42)]
        for k in range(1, 41):
            if h[k] * h[k] < h[k - 1] * h[k + 1]:
                bad_lc += 1
    sandwich_failures = 0
    points = 0
    for nu in (0.5, 1.0, 1.5, 2.0, 3.0, 4.0):
        for x in (0.5, 1.0, 2.0, 4.0):
            points += 1
            r = op_param_derivative_sandwich(Fraction(3, 2), nu, x)
            if r.status != PASS:
                sandwich_failures += 1
    ok = bad_lc == 0 and sandwich_failures == 0
    _verdict(
        9,
        ok,
        f"h_k log-concave for a in {{1, 3/2, 2, 5}}, k <= 40 ({bad_lc} violations); "
        f"sandwich on {points} (nu, x) points ({sandwich_failures} failures)",
    )
    assert bad_lc == 0
    assert sandwich_failures == 0


def test_criterion_10_conjecture_scan_default_grid():
    start = time.perf_counter()
    report = conjecture_scan({}, jobs=4)
    counterexamples = [r for r in report.results if r.status == FAIL]
    evaluated = [r for r in report.results if r.check_id == "conjecture.finite_sum_positive"]
    quarters = [Fraction(n, 4) for n in range(1, 17)]
    assert len(evaluated) == len(quarters) ** 3 * 11
    slice_mismatch = 0
    for mu in quarters:
        for beta in quarters:
            for m in range(11):
                v = exact.conjecture_sum(m, mu, Fraction(1), beta)
                total, _ = exact.telescoping_sum(m, mu, beta)
                if (v.p, v.q) != (total.p, total.q):
                    slice_mismatch += 1
    elapsed = time.perf_counter() - start
    ok = not counterexamples and slice_mismatch == 0 and elapsed < 600.0
    _verdict(
        10,
        ok,
        f"{len(evaluated)} grid points, {len(counterexamples)} counterexamples, "
        f"alpha=1 slice mismatches {slice_mismatch}, {elapsed:.1f}s (< 600s)",
    )
    assert not counterexamples
    assert slice_mismatch == 0
    assert elapsed < 600.0


def test_criterion_11_cli_contract(tmp_path):
    cfg = tmp_path / "config.toml"
    cfg.write_text("[run]\nseed = 99\n[suite.identities]\nsamples = 10\nm_max = 8\n")

    def run(args, name):
        out = tmp_path / name
        code = cli_main(args + ["--out", str(out)])
        data = re.sub(rb'"timestamp": "[^"]*"', b'"timestamp": ""', out.read_bytes())
        return code, data

    base = ["run", "--suite", "identities", "--config", str(cfg)]
    code1, blob1 = run(base, "a.json")
    code2, blob2 = run(base, "b.json")
    code3, blob3 = run(base + ["--jobs", "2"], "c.json")
    deterministic = blob1 == blob2
    parallel_equal = blob1 == blob3

    fail_cfg = tmp_path / "fail.toml"
    fail_cfg.write_text('[suite.exp_remainder.grid]\neta = ["1/10"]\nnu = ["0"]\nx = ["8"]\n')
    code_fail = cli_main(
        ["run", "--suite", "exp_remainder", "--config", str(fail_cfg),
         "--out", str(tmp_path / "f.json")]
    )
    code_usage = cli_main(["run", "--suite", "no-such-suite"])

    ok = (
        code1 == code2 == code3 == 0
        and deterministic
        and parallel_equal
        and code_fail == 1
        and code_usage == 2
    )
    _verdict(
        11,
        ok,
        f"repeat byte-identical (modulo timestamp): {deterministic}, "
        f"parallel == serial: {parallel_equal}, exit codes (0, 1, 2) = "
        f"({code1}, {code_fail}, {code_usage})",
    )
    assert deterministic
    assert parallel_equal
    assert code1 == code2 == code3 == 0
    assert code_fail == 1
    assert code_usage == 2


def test_verdict_summary(capsys):
    # keep the acceptance criteria count pinned: 11 criteria, 11 tests above
    names = [n for n in globals() if n.startswith("test_criterion_")]
    assert len(names) == 11
