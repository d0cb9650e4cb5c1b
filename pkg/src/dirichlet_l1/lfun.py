"""L(1, chi) by two independent routes.

* ``digamma``: the finite formula L(1, chi) = -(1/q) sum_k chi(k) psi(k/q).
* ``truncated``: the partial sum of chi(n)/n up to x, with the exact tail
  majorant sup_tail_sum(chi)/x from Abel summation.

Both carry rigorous error radii, so agreement within the summed radii is a
genuine consistency check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import EULER_GAMMA
from .chargroup import (
    CharacterGroup,
    DirichletCharacter,
    build_group,
    enumerate_characters,
    sup_tail_sum_from_values,
)
from .specfun import UNIT_ROUNDOFF, digamma_row, digamma_row_errors

DEFAULT_TRUNCATION = 10**4
_GAMMA_CANCEL_TOL = 1e-12


class CrossValidationError(AssertionError):
    """The two evaluation routes disagree beyond their combined error radii."""


@dataclass(frozen=True)
class LValueEstimate:
    chi: DirichletCharacter
    value: complex
    abs_error: float
    method: str

    def __abs__(self):
        return abs(self.value)


def _require_nonprincipal(chi: DirichletCharacter) -> None:
    if chi.is_principal:
        raise ValueError("L(1, chi) diverges for the principal character")


def _dot_rounding(q: int, weight: float) -> float:
    # pairwise-summation bound plus one rounding per product and per chi value
    return (math.ceil(math.log2(max(q, 2))) + 4) * UNIT_ROUNDOFF * weight


@lru_cache(maxsize=64)
def _digamma_setup(q: int) -> tuple[np.ndarray, float]:
    """psi(k/q) reindexed by residue (position 0 holds k = q) and the L error radius."""
    row = digamma_row(q)
    errs = digamma_row_errors(q)
    g = build_group(q)
    by_residue = np.roll(row, 1)
    err_by_residue = np.roll(errs, 1)
    mask = g.coprime
    mean_err = math.fsum(err_by_residue[mask]) / q
    rounding = _dot_rounding(q, math.fsum(np.abs(by_residue[mask])) / q)
    by_residue.setflags(write=False)
    return by_residue, mean_err + rounding


def _l1_digamma_values(values: np.ndarray, q: int) -> complex:
    psi, _ = _digamma_setup(q)
    total = complex(values.sum())
    gamma_term = EULER_GAMMA * total / q
    if abs(gamma_term) > _GAMMA_CANCEL_TOL:
        raise ArithmeticError(f"character sum does not cancel: {total}")
    return complex(-(values @ psi) / q - gamma_term)


def l1_digamma(chi: DirichletCharacter) -> LValueEstimate:
    _require_nonprincipal(chi)
    q = chi.modulus
    value = _l1_digamma_values(chi.values(), q)
    return LValueEstimate(chi, value, _digamma_setup(q)[1], "digamma")


def l1_digamma_batch(g: CharacterGroup, chars, batch: int = 64) -> tuple[np.ndarray, float]:
    """L(1, chi) for many characters of one modulus; returns (values, common abs_error)."""
    q = g.modulus
    psi, err = _digamma_setup(q)
    out = np.empty(len(chars), dtype=np.complex128)
    for start in range(0, len(chars), batch):
        block = chars[start : start + batch]
        if any(c.is_principal for c in block):
            raise ValueError("L(1, chi) diverges for the principal character")
        weights = np.stack([c._weights() for c in block], axis=1)
        vals = g.roots[(g.dlog_table @ weights) % g.exponent]
        vals[~g.coprime] = 0
        totals = vals.sum(axis=0)
        if np.any(np.abs(EULER_GAMMA * totals / q) > _GAMMA_CANCEL_TOL):
            raise ArithmeticError("character sum does not cancel")
        out[start : start + len(block)] = -(psi @ vals) / q - EULER_GAMMA * totals / q
    return out, err


def _progression_harmonics(q: int, x: float) -> np.ndarray:
    """h[r] = sum of 1/n over 1 <= n <= x with n = r (mod q), each exactly rounded."""
    return _progression_harmonics_cached(q, int(math.floor(x)))


@lru_cache(maxsize=8)
def _progression_harmonics_cached(q: int, n_max: int) -> np.ndarray:
    inv = 1.0 / np.arange(1, n_max + 1, dtype=np.float64)
    h = np.zeros(q)
    for r in range(q):
        h[r] = math.fsum(inv[(r - 1) % q :: q])
    h.setflags(write=False)
    return h


def l1_truncated_values(values: np.ndarray, x: float) -> tuple[complex, float]:
    q = len(values)
    h = _progression_harmonics(q, x)
    value = complex(values @ h)
    sup = sup_tail_sum_from_values(values)
    # every h[r] is within one ulp of its true value
    rounding = _dot_rounding(q, math.fsum(h)) + 2 * UNIT_ROUNDOFF * math.fsum(h)
    return value, sup / x + rounding


def l1_truncated(chi: DirichletCharacter, x: float) -> LValueEstimate:
    """Partial sum of chi(n)/n for n <= x with radius sup_tail_sum(chi)/x."""
    _require_nonprincipal(chi)
    if x < 1:
        raise ValueError(f"truncation point must be >= 1, got {x}")
    value, err = l1_truncated_values(chi.values(), x)
    return LValueEstimate(chi, value, err, "truncated")


def l1_cross_validated(chi: DirichletCharacter, x: float | None = None) -> LValueEstimate:
    """Digamma estimate, checked against the truncated series at x = max(q, 10^4)."""
    if x is None:
        x = max(chi.modulus, DEFAULT_TRUNCATION)
    a = l1_digamma(chi)
    b = l1_truncated(chi, x)
    gap = abs(a.value - b.value)
    if gap > a.abs_error + b.abs_error:
        raise CrossValidationError(
            f"{chi!r}: |digamma - truncated| = {gap:.3e} exceeds {a.abs_error + b.abs_error:.3e}"
        )
    return a


def max_l1_over_characters(q: int) -> tuple[DirichletCharacter, LValueEstimate]:
    """Nonprincipal character of largest |L(1, chi)|; ties go to the earlier one."""
    if q < 3:
        raise ValueError(f"no nonprincipal characters modulo {q}")
    g = build_group(q)
    chars = enumerate_characters(g)[1:]
    vals, err = l1_digamma_batch(g, chars)
    i = int(np.argmax(np.abs(vals)))
    return chars[i], LValueEstimate(chars[i], complex(vals[i]), err, "digamma")
