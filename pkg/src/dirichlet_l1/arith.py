"""Integer arithmetic, multiplicative functions and harmonic/Mertens oracles.

Integers are treated as unsigned 64-bit quantities: anything that would not
fit raises :class:`ArithmeticOverflow` instead of silently growing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

import numpy as np

EULER_GAMMA = 0.57721566490153286061
UINT64_MAX = 2**64 - 1

_TRIAL_LIMIT = 10**6
# Deterministic witness set for n < 3.3e24, covers all 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ArithmeticOverflow(OverflowError):
    """A result does not fit in an unsigned 64-bit integer."""


@dataclass(frozen=True)
class Factorization:
    """A positive integer ``n`` together with its prime-power decomposition."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"factorization of non-positive integer {self.n}")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factor list {self.factors!r}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors {self.factors!r} do not multiply to {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)

    def __int__(self):
        return self.n


IntOrFactorization = Union[int, Factorization]


def _checked_mul(a: int, b: int) -> int:
    c = a * b
    if c > UINT64_MAX:
        raise ArithmeticOverflow(f"{a} * {b} exceeds 64-bit range")
    return c


def as_factorization(n: IntOrFactorization) -> Factorization:
    if isinstance(n, Factorization):
        return n
    return factorize(n)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit ``n``."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Return a nontrivial factor of composite odd ``n`` (Brent's variant)."""
    for c in range(1, n):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"pollard rho failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    """Factor ``n`` by trial division up to 10^6, then Pollard rho."""
    n = int(n)
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    if n > UINT64_MAX:
        raise ArithmeticOverflow(f"{n} exceeds 64-bit range")
    return _factorize_cached(n)


@lru_cache(maxsize=4096)
def _factorize_cached(n: int) -> Factorization:
    found: dict[int, int] = {}
    m = n
    for p in (2, 3):
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    p = 5
    step = 2
    while p <= _TRIAL_LIMIT and p * p <= m:
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
        p += step
        step = 6 - step
    if m > 1:
        if p * p > m:
            found[m] = found.get(m, 0) + 1
        else:
            _split(m, found)
    return Factorization(n, tuple(sorted(found.items())))


def euler_phi(f: IntOrFactorization) -> int:
    f = as_factorization(f)
    out = 1
    for p, e in f.factors:
        out *= p ** (e - 1) * (p - 1)
    return out


def mobius(f: IntOrFactorization) -> int:
    f = as_factorization(f)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def tau(f: IntOrFactorization) -> int:
    """Number of divisors."""
    f = as_factorization(f)
    return math.prod(e + 1 for _, e in f.factors)


def radical(f: IntOrFactorization) -> int:
    f = as_factorization(f)
    return math.prod(f.primes)


def phi_ratio(f: IntOrFactorization) -> float:
    """phi(q)/q as a float, computed from the exact rational."""
    f = as_factorization(f)
    return float(Fraction(euler_phi(f), f.n))


def prime_log_sum(f: IntOrFactorization) -> float:
    """Sum of log(p)/(p-1) over the distinct primes dividing n."""
    f = as_factorization(f)
    return math.fsum(math.log(p) / (p - 1) for p in f.primes)


def coprime_harmonic(x: float, f: IntOrFactorization) -> float:
    """Sum of 1/n over 1 <= n <= x with gcd(n, q) = 1, exactly rounded via fsum."""
    if x < 1:
        raise ValueError(f"coprime_harmonic needs x >= 1, got {x}")
    f = as_factorization(f)
    n = np.arange(1, int(math.floor(x)) + 1, dtype=np.int64)
    if f.n > 1:
        n = n[np.gcd(n, f.n) == 1]
    return math.fsum(1.0 / n)


def harmonic(y: int) -> float:
    return coprime_harmonic(y, Factorization(1, ()))


def primes_upto(x: float) -> np.ndarray:
    """Primes p <= x by the sieve of Eratosthenes."""
    m = int(math.floor(x))
    if m < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(m + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(m) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def mertens_product(x: float) -> float:
    """Product of (1 - 1/p) over primes p <= x."""
    if x < 2:
        raise ValueError(f"mertens_product needs x >= 2, got {x}")
    ps = primes_upto(x)
    # log-domain fsum keeps the rounding independent of the number of primes
    return math.exp(math.fsum(np.log1p(-1.0 / ps)))


def primorial(x: float) -> Factorization:
    """Product of all primes p <= x, as a Factorization; overflow is an error."""
    if x < 2:
        raise ValueError(f"primorial needs x >= 2, got {x}")
    n = 1
    ps = [int(p) for p in primes_upto(x)]
    for p in ps:
        n = _checked_mul(n, p)
    return Factorization(n, tuple((p, 1) for p in ps))


def mobius_sums(f: IntOrFactorization) -> tuple[Fraction, float]:
    """Return (sum mu(d)/d, sum mu(d) log(d)/d) over the divisors d of q."""
    f = as_factorization(f)
    plain = Fraction(0)
    logs = []
    for d in _squarefree_divisors(f.primes):
        mu = (-1) ** len(d)
        dd = math.prod(d)
        plain += Fraction(mu, dd)
        if dd > 1:
            logs.append(mu * math.log(dd) / dd)
    return plain, math.fsum(logs)


def _squarefree_divisors(primes: Iterable[int]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for p in primes:
        out += [d + (p,) for d in out]
    return out
