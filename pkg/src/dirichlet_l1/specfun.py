"""Digamma function on the positive reals.

Arguments are shifted upward with the recurrence psi(z) = psi(z + 1) - 1/z
until they reach at least 16, where the Bernoulli asymptotic series is
accurate far beyond double precision. Every value carries an a priori error
bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import EULER_GAMMA

SHIFT_TARGET = 16.0
UNIT_ROUNDOFF = 2.0**-53

# B_2, B_4, ..., B_14
_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
)
_B16 = Fraction(-3617, 510)
# coefficients B_2k / (2k) for k = 1..7
_ASYM_COEFFS = tuple(float(b / (2 * k)) for k, b in enumerate(_BERNOULLI, start=1))
_REMAINDER_COEFF = float(abs(_B16) / 16)


@dataclass(frozen=True)
class DigammaValue:
    argument: float
    value: float
    abs_error: float


def _digamma_array(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    z = np.asarray(z, dtype=np.float64)
    if np.any(~(z > 0)):
        raise ValueError("digamma is only defined here for z > 0")
    shift = np.maximum(0, np.ceil(SHIFT_TARGET - z)).astype(np.int64)
    w = z + shift

    # Neumaier-compensated sum of 1/(z + j), j < shift, vectorized over z
    s = np.zeros_like(z)
    c = np.zeros_like(z)
    for j in range(int(shift.max(initial=0))):
        active = j < shift
        t = np.where(active, 1.0 / (z + j), 0.0)
        u = s + t
        c += np.where(np.abs(s) >= np.abs(t), (s - u) + t, (t - u) + s)
        s = u
    shifted_sum = s + c

    r2 = 1.0 / (w * w)
    poly = np.zeros_like(w)
    for coeff in reversed(_ASYM_COEFFS):
        poly = (poly + coeff) * r2
    logw = np.log(w)
    asym = logw - 0.5 / w - poly
    value = asym - shifted_sum

    remainder = _REMAINDER_COEFF * r2**8
    rounding = 4.0 * UNIT_ROUNDOFF * (shifted_sum + np.abs(logw) + 1.0)
    return value, remainder + rounding


def digamma(z: float) -> DigammaValue:
    """psi(z) for z > 0 with a rigorous (a priori) absolute error bound."""
    if not z > 0:
        raise ValueError(f"digamma needs z > 0, got {z}")
    v, e = _digamma_array(np.array([z], dtype=np.float64))
    return DigammaValue(float(z), float(v[0]), float(e[0]))


@lru_cache(maxsize=64)
def _row(q: int) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(1, q + 1, dtype=np.float64)
    vals, errs = _digamma_array(k / q)
    # psi(1) = -gamma is known exactly to double precision
    vals[-1] = -EULER_GAMMA
    errs[-1] = UNIT_ROUNDOFF
    vals.setflags(write=False)
    errs.setflags(write=False)
    return vals, errs


def digamma_row(q: int) -> np.ndarray:
    """Values psi(k/q) for k = 1..q (read-only array)."""
    if q < 1:
        raise ValueError(f"digamma_row needs q >= 1, got {q}")
    return _row(int(q))[0]


def digamma_row_errors(q: int) -> np.ndarray:
    if q < 1:
        raise ValueError(f"digamma_row needs q >= 1, got {q}")
    return _row(int(q))[1]


def gauss_identity_residual(m: int) -> float:
    """sum_{k<=m} psi(k/m) + m (gamma + log m); zero in exact arithmetic."""
    row = digamma_row(m)
    return math.fsum(np.concatenate([row, [m * EULER_GAMMA, m * math.log(m)]]))
