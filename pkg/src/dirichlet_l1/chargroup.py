"""Dirichlet characters modulo q.

(Z/qZ)^* is split by the Chinese remainder theorem into cyclic components,
one per odd prime power (generated by its smallest primitive root) and up to
two for the power of 2 (generated by -1 and 5). A character is an exponent
vector against these components; its values are stored as exact angle
numerators over the group exponent and only turned into complex numbers on
evaluation.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .arith import Factorization, factorize

MODULUS_CAP = 10**7


def _multiplicative_order_ok(g: int, n: int, order: int, order_primes) -> bool:
    return all(pow(g, order // ell, n) != 1 for ell in order_primes)


def smallest_primitive_root(pk: int, p: int, k: int) -> int:
    """Smallest positive primitive root modulo the odd prime power p^k."""
    order = p ** (k - 1) * (p - 1)
    order_primes = factorize(order).primes
    for g in range(2, pk):
        if g % p and _multiplicative_order_ok(g, pk, order, order_primes):
            return g
    raise ArithmeticError(f"no primitive root mod {pk}")


def _local_tables(p: int, k: int) -> list[tuple[int, int, np.ndarray]]:
    """Cyclic components of (Z/p^kZ)^*: (local generator, order, dlog table).

    Each dlog table has length p^k, holding -1 at non-units.
    """
    pk = p**k
    if p != 2:
        g = smallest_primitive_root(pk, p, k)
        order = pk - pk // p
        tab = np.full(pk, -1, dtype=np.int64)
        cur = 1
        for j in range(order):
            tab[cur] = j
            cur = cur * g % pk
        return [(g, order, tab)]
    if k == 1:
        return []
    if k == 2:
        tab = np.full(4, -1, dtype=np.int64)
        tab[1], tab[3] = 0, 1
        return [(3, 2, tab)]
    half = pk // 4
    sign = np.full(pk, -1, dtype=np.int64)
    five = np.full(pk, -1, dtype=np.int64)
    cur = 1
    for j in range(half):
        sign[cur], five[cur] = 0, j
        sign[pk - cur], five[pk - cur] = 1, j
        cur = cur * 5 % pk
    return [(pk - 1, 2, sign), (5, half, five)]


def _roots_of_unity(n: int) -> np.ndarray:
    """exp(2 pi i j / n), j < n, exact at multiples of quarter turns and conjugate-symmetric."""
    j = np.arange(n)
    ang = 2.0 * np.pi * j / n
    roots = np.cos(ang) + 1j * np.sin(ang)
    roots[n - j[1 : (n + 1) // 2]] = np.conj(roots[1 : (n + 1) // 2])
    for num, val in ((0, 1), (1, 1j), (2, -1), (3, -1j)):
        if (num * n) % 4 == 0:
            roots[num * n // 4] = val
    return roots


@dataclass(frozen=True, eq=False)
class CharacterGroup:
    """(Z/qZ)^* as a product of cyclic components with a full discrete-log table."""

    modulus: int
    factorization: Factorization
    components: tuple[tuple[int, int], ...]
    dlog_table: np.ndarray = field(repr=False)
    coprime: np.ndarray = field(repr=False)
    exponent: int = 1
    roots: np.ndarray = field(repr=False, default=None)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(o for _, o in self.components)

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(g for g, _ in self.components)

    @property
    def phi(self) -> int:
        return math.prod(self.orders)

    def dlog(self, a: int) -> tuple[int, ...]:
        a %= self.modulus
        if not self.coprime[a]:
            raise ValueError(f"{a} is not a unit modulo {self.modulus}")
        return tuple(int(v) for v in self.dlog_table[a])

    def character(self, exponents) -> "DirichletCharacter":
        return DirichletCharacter(self, tuple(int(e) for e in exponents))

    def principal(self) -> "DirichletCharacter":
        return self.character((0,) * len(self.components))

    def __len__(self):
        return self.phi


def build_group(q: int) -> CharacterGroup:
    """Construct the character group modulo ``q`` (1 <= q <= 10^7)."""
    q = int(q)
    if q < 1:
        raise ValueError(f"modulus must be positive, got {q}")
    if q > MODULUS_CAP:
        raise ValueError(f"modulus {q} exceeds the cap {MODULUS_CAP}")
    return _build_group(q)


@lru_cache(maxsize=32)
def _build_group(q: int) -> CharacterGroup:
    fac = factorize(q)
    residues = np.arange(q, dtype=np.int64)
    coprime = np.ones(q, dtype=bool)
    components = []
    columns = []
    for p, k in fac.factors:
        pk = p**k
        local = residues % pk
        coprime &= local % p != 0
        other = q // pk
        # lift a local generator g to G = g mod p^k, G = 1 mod q/p^k
        lift = other * pow(other, -1, pk) if pk > 1 else 0
        for g, order, tab in _local_tables(p, k):
            components.append(((1 + (g - 1) * lift) % q, order))
            columns.append(tab[local])
    if columns:
        dlog = np.stack(columns, axis=1)
        dlog[~coprime] = -1
    else:
        dlog = np.zeros((q, 0), dtype=np.int64)
    dlog.setflags(write=False)
    coprime.setflags(write=False)
    expo = math.lcm(*(o for _, o in components)) if components else 1
    roots = _roots_of_unity(expo)
    roots.setflags(write=False)
    return CharacterGroup(q, fac, tuple(components), dlog, coprime, expo, roots)


@dataclass(frozen=True, eq=False)
class DirichletCharacter:
    group: CharacterGroup
    exponents: tuple[int, ...]

    def __post_init__(self):
        orders = self.group.orders
        if len(self.exponents) != len(orders) or any(
            not 0 <= e < o for e, o in zip(self.exponents, orders)
        ):
            raise ValueError(f"exponents {self.exponents} invalid for orders {orders}")

    @property
    def modulus(self) -> int:
        return self.group.modulus

    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)

    @property
    def order(self) -> int:
        return math.lcm(1, *(o // math.gcd(o, e) for e, o in zip(self.exponents, self.group.orders)))

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(
            self.group, tuple((-e) % o for e, o in zip(self.exponents, self.group.orders))
        )

    def _weights(self) -> np.ndarray:
        g = self.group
        return np.array(
            [e * (g.exponent // o) for e, o in zip(self.exponents, g.orders)], dtype=np.int64
        )

    def angle(self, n: int) -> tuple[int, int] | None:
        """chi(n) = exp(2 pi i num/den) as (num, den), or None when chi(n) = 0."""
        g = self.group
        a = n % g.modulus
        if not g.coprime[a]:
            return None
        num = int(g.dlog_table[a] @ self._weights()) % g.exponent
        return num, g.exponent

    def angle_numerators(self) -> np.ndarray:
        """Angle numerator of chi(a) for every residue a (meaningless at non-units)."""
        g = self.group
        return (g.dlog_table @ self._weights()) % g.exponent

    def values(self) -> np.ndarray:
        """chi(a) for a = 0..q-1 as a complex array."""
        g = self.group
        out = g.roots[self.angle_numerators()]
        out[~g.coprime] = 0
        return out

    def __call__(self, n: int) -> complex:
        return chi_eval(self, n)

    def __eq__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return self.modulus == other.modulus and self.exponents == other.exponents

    def __hash__(self):
        return hash((self.modulus, self.exponents))

    def __repr__(self):
        return f"DirichletCharacter(q={self.modulus}, exponents={self.exponents})"


def enumerate_characters(g: CharacterGroup) -> list[DirichletCharacter]:
    """All phi(q) characters, lexicographic in exponent vectors (principal first)."""
    return [DirichletCharacter(g, e) for e in itertools.product(*(range(o) for o in g.orders))]


def chi_eval(chi: DirichletCharacter, n: int) -> complex:
    ang = chi.angle(n)
    if ang is None:
        return 0j
    return complex(chi.group.roots[ang[0]])


def _prefix_sums(values: np.ndarray) -> np.ndarray:
    """S(m) = sum_{1<=k<=m} chi(k) for m = 0..q."""
    q = len(values)
    seq = values[np.arange(1, q + 1) % q]
    return np.concatenate([[0j], np.cumsum(seq)])


def partial_sum(chi: DirichletCharacter, a: int, b: int) -> complex:
    """sum_{a < k <= b} chi(k), using q-periodicity."""
    if a > b:
        raise ValueError(f"partial_sum needs a <= b, got ({a}, {b})")
    q = chi.modulus
    if b - a < q:
        k = np.arange(a + 1, b + 1) % q
        return complex(chi.values()[k].sum()) if len(k) else 0j
    pref = _prefix_sums(chi.values())
    period = complex(chi.group.phi) if chi.is_principal else 0j

    def s(m):
        return (m // q) * period + pref[m % q]

    return complex(s(b) - s(a))


def _diameter(points: np.ndarray) -> float:
    """Largest distance between two points of a planar point set."""
    if np.all(np.abs(points.imag) < 1e-12):
        return float(points.real.max() - points.real.min())
    pts = np.unique(np.column_stack([points.real, points.imag]), axis=0)
    try:
        pts = pts[ConvexHull(pts).vertices]
    except QhullError:
        pass
    d = pts[:, None, :] - pts[None, :, :]
    return float(np.sqrt((d**2).sum(axis=-1)).max())


def sup_tail_sum_from_values(values: np.ndarray) -> float:
    return _diameter(_prefix_sums(values))


def sup_tail_sum(chi: DirichletCharacter) -> float:
    """sup over x >= 0 and n > x of |sum_{x < k <= n} chi(k)|.

    By periodicity this is max |S(b) - S(a)| over 0 <= a, b <= q, i.e. the
    diameter of the partial-sum walk.
    """
    if chi.is_principal:
        raise ValueError("tail sums of the principal character are unbounded")
    return sup_tail_sum_from_values(chi.values())


def pv_ratio(chi: DirichletCharacter) -> float:
    """sup_tail_sum(chi) / (sqrt(q) log q)."""
    q = chi.modulus
    if q < 3:
        raise ValueError("pv_ratio needs q >= 3")
    return sup_tail_sum(chi) / (math.sqrt(q) * math.log(q))
