"""Bound expressions for |L(1, chi)|, per-modulus verification and the primorial study.

All inequalities are checked in an explicit form: the harmonic tail constant
is 1 (|H_y - log y - gamma| <= 1/y for real y >= 1), and the character tail is
controlled by the exact supremum of partial sums instead of a Polya-Vinogradov
constant.
"""
from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass

import numpy as np

from .arith import (
    EULER_GAMMA,
    ArithmeticOverflow,
    IntOrFactorization,
    as_factorization,
    coprime_harmonic,
    euler_phi,
    mertens_product,
    phi_ratio,
    prime_log_sum,
    primes_upto,
    primorial,
    radical,
    tau,
)
from .chargroup import (
    MODULUS_CAP,
    DirichletCharacter,
    build_group,
    enumerate_characters,
    sup_tail_sum,
    sup_tail_sum_from_values,
)
from .lfun import l1_digamma_batch, max_l1_over_characters

log = logging.getLogger(__name__)

WORK_BUDGET = 2 * 10**9
LEMMA2_MULTIPLIERS = (1, 10, 100)
THEOREM_REFERENCE = 0.5 * math.exp(-EULER_GAMMA)
COROLLARY_REFERENCE = math.exp(-EULER_GAMMA)


class WorkBudgetExceeded(RuntimeError):
    """A requested computation would exceed the q * phi(q) work budget."""


def lemma2_main_term(q: IntOrFactorization, x: float) -> float:
    """(phi(q)/q) (log x + sum_{p|q} log p/(p-1) + gamma)."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    f = as_factorization(q)
    return phi_ratio(f) * (math.log(x) + prime_log_sum(f) + EULER_GAMMA)


def lemma2_residual(q: IntOrFactorization, x: float) -> float:
    """Coprime harmonic sum minus its main term; |result| <= tau(q)/x whenever x >= q."""
    f = as_factorization(q)
    if x < f.n:
        raise ValueError(f"lemma2_residual needs x >= q, got x={x}, q={f.n}")
    return coprime_harmonic(x, f) - lemma2_main_term(f, x)


def lemma2_radical_gap(q: IntOrFactorization) -> float:
    """sum_{p|q} log p/(p-1) - log log rad(q)."""
    f = as_factorization(q)
    rad = radical(f)
    if rad <= 2:
        raise ValueError(f"radical of {f.n} is {rad}; need at least 3")
    return prime_log_sum(f) - math.log(math.log(rad))


def corollary_bound(q: IntOrFactorization) -> float:
    f = as_factorization(q)
    if f.n < 3:
        raise ValueError("corollary_bound needs q >= 3")
    return phi_ratio(f) * (math.log(f.n) + prime_log_sum(f))


def theorem_main(q: IntOrFactorization) -> float:
    f = as_factorization(q)
    return 0.5 * phi_ratio(f) * math.log(f.n)


def theorem_truncation(q: int) -> float:
    # sqrt(q) log q, raised to q so the explicit residual bound applies; since
    # log q < sqrt(q) the maximum is always q itself
    return max(float(q), math.sqrt(q) * math.log(q))


def _theorem_rhs(f, sup: float) -> float:
    x = theorem_truncation(f.n)
    return lemma2_main_term(f, x) + tau(f) / x + sup / x


def theorem_rhs_explicit(chi: DirichletCharacter) -> float:
    """Explicit upper bound for |L(1, chi)| following the truncation argument."""
    q = chi.modulus
    if q < 3:
        raise ValueError("theorem_rhs_explicit needs q >= 3")
    return _theorem_rhs(chi.group.factorization, sup_tail_sum(chi))


@dataclass(frozen=True)
class BoundReport:
    q: int
    phi_ratio: float
    lemma2_residual_max: float
    corollary_bound: float
    theorem_main: float
    max_abs_l1: float
    theorem_residual_ratio: float
    corollary_margin_min: float
    pv_ratio_max: float
    theorem_margin_min: float
    n_characters: int
    abs_error: float

    @property
    def lemma2_ok(self) -> bool:
        return self.lemma2_residual_max <= 1.0

    @property
    def corollary_ok(self) -> bool:
        return self.corollary_margin_min > 0

    @property
    def theorem_ok(self) -> bool:
        return self.theorem_margin_min >= 0

    @property
    def passed(self) -> bool:
        return self.corollary_ok and self.theorem_ok

    def as_dict(self) -> dict:
        return asdict(self)


def verify_modulus(q: int) -> BoundReport:
    """Evaluate every nonprincipal character mod q against both bounds.

    ``lemma2_residual_max`` is normalised: the largest |residual| * x / tau(q)
    over x in {q, 10q, 100q}, so values <= 1 mean the explicit identity holds.
    ``theorem_margin_min`` is the smallest rhs - (|L| - abs_error).
    """
    if q < 3:
        raise ValueError(f"no nonprincipal characters modulo {q}")
    g = build_group(q)
    f = g.factorization
    chars = enumerate_characters(g)[1:]
    lvals, err = l1_digamma_batch(g, chars)
    absl = np.abs(lvals)

    sups = np.array([sup_tail_sum_from_values(c.values()) for c in chars])
    x = theorem_truncation(q)
    rhs = lemma2_main_term(f, x) + tau(f) / x + sups / x

    t = tau(f)
    lemma_max = max(abs(lemma2_residual(f, m * q)) * (m * q) / t for m in LEMMA2_MULTIPLIERS)
    cb = corollary_bound(f)
    tm = theorem_main(f)
    ratio = phi_ratio(f)
    max_abs = float(absl.max())
    loglog = math.log(math.log(q))
    resid_ratio = (max_abs - tm) / (ratio * loglog) if q >= 16 else math.nan
    return BoundReport(
        q=q,
        phi_ratio=ratio,
        lemma2_residual_max=lemma_max,
        corollary_bound=cb,
        theorem_main=tm,
        max_abs_l1=max_abs,
        theorem_residual_ratio=resid_ratio,
        corollary_margin_min=float((cb - absl - err).min()),
        pv_ratio_max=float(sups.max() / (math.sqrt(q) * math.log(q))),
        theorem_margin_min=float((rhs - (absl - err)).min()),
        n_characters=len(chars),
        abs_error=err,
    )


@dataclass(frozen=True)
class PrimorialRow:
    x: int
    q: int
    phi_ratio: float
    mertens_reference: float
    log_log_q: float
    max_abs_l1: float
    ratio: float
    theorem_reference: float
    corollary_reference: float
    theorem_main_ratio: float
    corollary_bound_ratio: float
    abs_error: float

    def as_dict(self) -> dict:
        return asdict(self)


def primorial_moduli(x_max: float) -> list[tuple[int, int]]:
    """(largest prime, primorial) for every prime up to x_max."""
    out = []
    for p in primes_upto(x_max):
        out.append((int(p), primorial(int(p)).n))
    return out


def check_work_budget(x_max: float) -> None:
    """Refuse a primorial study whose largest modulus is over the cap or the q * phi(q) budget."""
    try:
        moduli = primorial_moduli(x_max)
    except ArithmeticOverflow as exc:
        raise WorkBudgetExceeded(f"primorial up to {x_max} overflows: {exc}") from None
    if not moduli:
        return
    q = moduli[-1][1]
    if q > MODULUS_CAP:
        raise WorkBudgetExceeded(f"primorial {q} exceeds the modulus cap {MODULUS_CAP}")
    work = q * euler_phi(q)
    if work > WORK_BUDGET:
        raise WorkBudgetExceeded(f"q * phi(q) = {work} for q = {q} exceeds {WORK_BUDGET}")


def primorial_study(x_max: float) -> list[PrimorialRow]:
    """max |L(1, chi)| / (log q / log log q) over the primorials q = prod_{p <= x}."""
    if x_max < 2:
        raise ValueError(f"x_max must be >= 2, got {x_max}")
    check_work_budget(x_max)
    rows = []
    for p, q in primorial_moduli(x_max):
        if q < 3:
            log.warning("skipping primorial q=%d: no nonprincipal characters", q)
            continue
        _, est = max_l1_over_characters(q)
        scale = math.log(q) / math.log(math.log(q))
        rows.append(
            PrimorialRow(
                x=p,
                q=q,
                phi_ratio=phi_ratio(q),
                mertens_reference=COROLLARY_REFERENCE / math.log(p),
                log_log_q=math.log(math.log(q)),
                max_abs_l1=abs(est.value),
                ratio=abs(est.value) / scale,
                theorem_reference=THEOREM_REFERENCE,
                corollary_reference=COROLLARY_REFERENCE,
                theorem_main_ratio=theorem_main(q) / scale,
                corollary_bound_ratio=corollary_bound(q) / scale,
                abs_error=est.abs_error,
            )
        )
    return rows


def primorial_growth_constant(x_max: float = 47) -> float:
    """max of (q/phi(q)) / log log q over primorials q >= 6 up to x_max."""
    best = 0.0
    for _, q in primorial_moduli(x_max):
        if q >= 6:
            best = max(best, (1.0 / phi_ratio(q)) / math.log(math.log(q)))
    return best


def mertens_check(x: float) -> tuple[float, float]:
    """(prod_{p<=x} (1 - 1/p), e^-gamma / log x)."""
    return mertens_product(x), COROLLARY_REFERENCE / math.log(x)
