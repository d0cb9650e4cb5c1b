"""Exit criteria for the package, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; a pass/fail line per criterion
is printed in the terminal summary.
"""
import json
import math
import time
from pathlib import Path

import numpy as np
import pytest

from dirichlet_l1.arith import EULER_GAMMA, coprime_harmonic, euler_phi, factorize, mobius_sums, tau
from dirichlet_l1.bounds import (
    check_work_budget,
    corollary_bound,
    lemma2_main_term,
    primorial_study,
    theorem_truncation,
)
from dirichlet_l1.chargroup import build_group, enumerate_characters, sup_tail_sum_from_values
from dirichlet_l1.lfun import l1_digamma, l1_digamma_batch, l1_truncated_values, DEFAULT_TRUNCATION
from dirichlet_l1.specfun import gauss_identity_residual

FIXTURE = Path(__file__).parent / "fixtures" / "primorial_13.json"


def nonprincipal(q):
    g = build_group(q)
    return g, enumerate_characters(g)[1:]


def test_criterion_1_lemma_identity(acceptance_report):
    t0 = time.perf_counter()
    failures = 0
    worst = 0.0
    for q in range(1, 201):
        f = factorize(q)
        for x in (q, 10 * q, 100 * q):
            ratio = abs(coprime_harmonic(x, f) - lemma2_main_term(f, x)) * x / tau(f)
            worst = max(worst, ratio)
            failures += ratio > 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed < 10
    acceptance_report(1, "Lemma identity |residual| <= tau(q)/x, q <= 200", ok,
                      f"worst residual/bound {worst:.3e}, {elapsed:.1f}s")
    assert failures == 0
    assert elapsed < 10


def test_criterion_2_corollary_strict(acceptance_report):
    t0 = time.perf_counter()
    count = 0
    worst = math.inf
    for q in range(3, 301):
        g, chars = nonprincipal(q)
        vals, err = l1_digamma_batch(g, chars)
        margin = corollary_bound(g.factorization) - np.abs(vals) - err
        worst = min(worst, float(margin.min()))
        count += len(chars)
    elapsed = time.perf_counter() - t0
    ok = worst > 0 and elapsed < 120
    acceptance_report(2, "strict corollary bound, 3 <= q <= 300", ok,
                      f"{count} characters, min margin {worst:.4f}, {elapsed:.1f}s")
    assert worst > 0
    assert elapsed < 120


def test_criterion_3_closed_values(acceptance_report):
    (chi4,) = nonprincipal(4)[1]
    (chi3,) = nonprincipal(3)[1]
    e4 = abs(l1_digamma(chi4).value - math.pi / 4)
    e3 = abs(l1_digamma(chi3).value - math.pi / (3 * math.sqrt(3)))
    ok = e4 < 1e-9 and e3 < 1e-9
    acceptance_report(3, "L(1,chi_4) = pi/4 and L(1,chi_3) = pi/(3 sqrt 3)", ok,
                      f"errors {e4:.1e}, {e3:.1e}")
    assert e4 < 1e-9
    assert e3 < 1e-9


def test_criterion_4_gauss_identity(acceptance_report):
    t0 = time.perf_counter()
    worst = max(abs(gauss_identity_residual(m)) for m in range(1, 501))
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-9 and elapsed < 5
    acceptance_report(4, "Gauss digamma sum, m <= 500", ok, f"max residual {worst:.2e}, {elapsed:.2f}s")
    assert worst < 1e-9
    assert elapsed < 5


def test_criterion_5_cross_method(acceptance_report):
    failures = 0
    count = 0
    worst = 0.0
    for q in range(3, 301):
        g, chars = nonprincipal(q)
        dig, err = l1_digamma_batch(g, chars)
        x = max(q, DEFAULT_TRUNCATION)
        for chi, dv in zip(chars, dig):
            tv, terr = l1_truncated_values(chi.values(), x)
            gap = abs(dv - tv) / (err + terr)
            worst = max(worst, gap)
            failures += gap > 1
            count += 1
    acceptance_report(5, "digamma vs truncated agreement, q <= 300", failures == 0,
                      f"{count} characters, {failures} failures, worst gap/radius {worst:.3f}")
    assert failures == 0


def test_criterion_6_theorem_domination(acceptance_report):
    t0 = time.perf_counter()
    failures = 0
    count = 0
    worst = math.inf
    for q in range(3, 501):
        g, chars = nonprincipal(q)
        f = g.factorization
        vals, _ = l1_digamma_batch(g, chars)
        x = theorem_truncation(q)
        base = lemma2_main_term(f, x) + tau(f) / x
        for chi, v in zip(chars, vals):
            rhs = base + sup_tail_sum_from_values(chi.values()) / x
            margin = rhs - abs(v)
            worst = min(worst, margin)
            failures += margin < 0
            count += 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed < 300
    acceptance_report(6, "|L(1,chi)| <= explicit truncation bound, q <= 500", ok,
                      f"{count} characters, min margin {worst:.4f}, {elapsed:.1f}s")
    assert failures == 0
    assert elapsed < 300


def test_criterion_7_orthogonality(acceptance_report):
    worst_chars = 0.0
    worst_res = 0.0
    for q in range(1, 101):
        chars = enumerate_characters(build_group(q))
        table = np.array([c.values() for c in chars])
        expected = np.zeros(q)
        expected[1 % q] = euler_phi(q)
        worst_chars = max(worst_chars, float(np.abs(table.sum(axis=0) - expected).max()))
        if len(chars) > 1:
            worst_res = max(worst_res, float(np.abs(table[1:].sum(axis=1)).max()))
    ok = worst_chars < 1e-10 and worst_res < 1e-10
    acceptance_report(7, "orthogonality over characters and residues, q <= 100", ok,
                      f"{worst_chars:.1e}, {worst_res:.1e}")
    assert worst_chars < 1e-10
    assert worst_res < 1e-10


def test_criterion_8_primorial_study(acceptance_report):
    check_work_budget(13)
    rows = primorial_study(13)
    frozen = json.loads(FIXTURE.read_text())
    loglog = [r.log_log_q for r in rows]
    monotone = all(a < b for a, b in zip(loglog, loglog[1:]))
    same_moduli = [r.q for r in rows] == [r["q"] for r in frozen] == [6, 30, 210, 2310, 30030]
    stable = same_moduli and all(
        math.isclose(r.ratio, fr["ratio"], rel_tol=1e-12) for r, fr in zip(rows, frozen)
    )
    ok = monotone and stable
    ratios = ", ".join(f"{r.ratio:.4f}" for r in rows)
    acceptance_report(8, "primorial study to x=13 (trend only, liminf not asserted)", ok,
                      f"ratios {ratios}; reference 1/2 e^-gamma = {0.5 * math.exp(-EULER_GAMMA):.5f}")
    assert monotone
    assert stable


def test_criterion_9_mobius_rewriting(acceptance_report):
    worst = 0.0
    for q in range(3, 1001):
        _, logs = mobius_sums(q)
        lhs = euler_phi(q) / q * math.log(q) - logs
        worst = max(worst, abs(lhs - corollary_bound(q)))
    acceptance_report(9, "Mobius form equals prime-sum form of the corollary bound, q <= 1000",
                      worst <= 1e-10, f"max deviation {worst:.1e}")
    assert worst <= 1e-10


@pytest.mark.parametrize("q", [3, 4])
def test_acceptance_helpers_consistent(q):
    # guards the shortcuts used above against the public per-character API
    g, chars = nonprincipal(q)
    vals, err = l1_digamma_batch(g, chars)
    for chi, v in zip(chars, vals):
        est = l1_digamma(chi)
        assert abs(est.value - v) <= 1e-15 and est.abs_error == err
