"""Integer plumbing and the closed-form order-sum formulas for cyclic groups.

Everything here is exact: sums are arbitrary-precision integers and every
ratio is a ``fractions.Fraction`` (auto-reduced, denominator positive).
Floats never appear in results.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Factorization",
    "factorize",
    "is_prime",
    "is_mersenne_exponent",
    "psi_cyclic",
    "psi_cyclic_lower_bound",
    "frobenius_ratio_closed_form",
    "index_ratio_bound",
]


@dataclass(frozen=True)
class Factorization:
    """n = p1^a1 * p2^a2 * ... * pk^ak with p1 < p2 < ... < pk.

    ``factors`` is empty exactly when value == 1.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    @property
    def smallest_prime(self) -> int:
        return self.factors[0][0]

    @property
    def largest_prime(self) -> int:
        return self.factors[-1][0]


def factorize(n: int) -> Factorization:
    """Deterministic trial-division factorization of n >= 1."""
    if n < 1:
        raise ValueError(f"cannot factor {n}: need n >= 1")
    m = n
    factors = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    """Trial division; exact for all 64-bit-sized inputs we actually see."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % p == 0:
            return False
        p += 2
    return True


def is_mersenne_exponent(r: int) -> bool:
    """True iff 2^r - 1 is prime (Lucas-Lehmer for r >= 3, direct for r = 2)."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if r == 2:
        return True  # 2^2 - 1 = 3
    if not is_prime(r):
        return False  # composite r forces 2^r - 1 composite
    m = (1 << r) - 1
    s = 4
    for _ in range(r - 2):
        s = (s * s - 2) % m
    return s == 0


def psi_cyclic(n: int) -> int:
    """Sum of element orders of the cyclic group of order n.

    Multiplicative over the prime factorization: each prime power p^a
    contributes (p^(2a+1) + 1) / (p + 1), an exact integer.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    total = 1
    for p, a in factorize(n):
        num = p ** (2 * a + 1) + 1
        total *= num // (p + 1)
    return total


def psi_cyclic_lower_bound(n: int) -> Fraction:
    """Quadratic lower bound p_min * n^2 / (p_max + 1) for psi_cyclic(n), n >= 2."""
    if n < 2:
        raise ValueError(f"need n >= 2 (n = 1 has no prime divisors), got {n}")
    fac = factorize(n)
    return Fraction(fac.smallest_prime * n * n, fac.largest_prime + 1)


def frobenius_ratio_closed_form(r: int) -> Fraction:
    """Exact value of (3*2^(2r) - 9*2^r + 15) / (2^(2r+1) + 1).

    For r with 2^r - 1 prime this is the ratio of the relative order sum of
    the affine Frobenius group over GF(2^r) (relative to its complement) to
    the matching cyclic-group reference; as a rational function it is defined
    for every r >= 3.
    """
    if r < 3:
        raise ValueError(f"need r >= 3, got {r}")
    return Fraction(3 * 2 ** (2 * r) - 9 * 2 ** r + 15, 2 ** (2 * r + 1) + 1)


def index_ratio_bound(q: int) -> Fraction:
    """(q^2 - q + 1) / psi_cyclic(q): the envelope controlling relative-order
    ratios of subgroups of index q. Not bounded by 3/2 in general; along
    q = 3*2^a it increases toward 27/14."""
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    return Fraction(q * q - q + 1, psi_cyclic(q))
