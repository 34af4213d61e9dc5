"""Finite groups on integer encodings.

Every group fixes a deterministic bijection between its elements and
[0, order), with the identity at encoding 0. The interface is call-based
(multiply/inverse on encodings) so medium-sized groups never materialize an
order x order table; tables exist only for ingested Cayley tables and
quotients.
"""

from __future__ import annotations

import itertools
import math
import random

import numpy as np

from .finite_field import FiniteField
from .numtheory import is_prime

__all__ = [
    "FiniteGroup",
    "CyclicGroup",
    "CayleyTableGroup",
    "PermutationGroup",
    "FrobeniusFieldGroup",
    "DirectProductGroup",
    "CayleyTableError",
    "cyclic",
    "abelian_of_type",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "frobenius_field",
    "direct_product",
    "from_cayley_table",
    "element_order",
]

_ASSOC_FULL_CAP = 512
_ORDER_CAP = 1 << 16


class CayleyTableError(ValueError):
    """Raised when ingested Cayley-table data fails validation."""


class FiniteGroup:
    """Abstract finite group; concrete classes define multiply/inverse."""

    order: int
    name: str = "G"
    identity: int = 0

    def multiply(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inverse(self, a: int) -> int:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    def check_encoding(self, a: int) -> None:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not a valid element encoding of {self.name}")

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inverse(a), -e
        result = self.identity
        while e:
            if e & 1:
                result = self.multiply(result, a)
            a = self.multiply(a, a)
            e >>= 1
        return result

    def element_order(self, a: int) -> int:
        """Smallest m >= 1 with a^m = identity; scans divisors of |G|."""
        self.check_encoding(a)
        for d in self._order_divisors():
            if self.power(a, d) == self.identity:
                return d
        raise AssertionError("element order must divide group order")

    def _order_divisors(self) -> list[int]:
        cached = getattr(self, "_divisors", None)
        if cached is None:
            n = self.order
            small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
            large = [n // d for d in reversed(small) if d * d != n]
            cached = self._divisors = small + large
        return cached

    def is_cyclic(self) -> bool:
        return any(self.element_order(x) == self.order for x in self.elements())

    def cayley_table(self) -> np.ndarray:
        if self.order > 4096:
            raise ValueError(f"refusing to materialize {self.order}x{self.order} table")
        n = self.order
        table = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            table[a] = [self.multiply(a, b) for b in range(n)]
        return table

    def validate(self, seed: int = 0, samples: int = 100_000) -> None:
        """Check the group axioms: identity/inverse exhaustively, associativity
        exhaustively for order <= 512 and on seeded random triples above."""
        e = self.identity
        for a in self.elements():
            if self.multiply(e, a) != a or self.multiply(a, e) != a:
                raise AssertionError(f"identity axiom fails at {a}")
            if self.multiply(self.inverse(a), a) != e:
                raise AssertionError(f"inverse axiom fails at {a}")
        if self.order <= _ASSOC_FULL_CAP:
            _check_associativity_full(self.cayley_table())
        else:
            rng = random.Random(seed)
            n = self.order
            for _ in range(samples):
                a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
                if self.multiply(self.multiply(a, b), c) != self.multiply(a, self.multiply(b, c)):
                    raise AssertionError(f"associativity fails at ({a},{b},{c})")

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} of order {self.order}>"


def _check_associativity_full(table: np.ndarray) -> None:
    n = table.shape[0]
    for a in range(n):
        if not np.array_equal(table[table[a]], table[a][table]):
            raise CayleyTableError(f"associativity fails for left factor {a}")


class CyclicGroup(FiniteGroup):
    """C_n, written additively: multiply(a, b) = (a + b) mod n."""

    def __init__(self, n: int):
        if not 1 <= n <= _ORDER_CAP:
            raise ValueError(f"cyclic order must be in [1, 2^16], got {n}")
        self.order = n
        self.name = f"C{n}"

    def multiply(self, a, b):
        return (a + b) % self.order

    def inverse(self, a):
        return -a % self.order

    def element_order(self, a):
        self.check_encoding(a)
        return self.order // math.gcd(self.order, a)


class CayleyTableGroup(FiniteGroup):
    """Group given by an explicit n x n multiplication table."""

    def __init__(self, table: np.ndarray, name: str = "table-group", validate: bool = True):
        table = np.asarray(table, dtype=np.int64)
        if validate:
            _validate_table(table)
        self.table = table
        self.order = int(table.shape[0])
        self.name = name
        inv = np.full(self.order, -1, dtype=np.int64)
        for a in range(self.order):
            inv[a] = int(np.nonzero(table[a] == 0)[0][0])
        self._inv = inv

    def multiply(self, a, b):
        return int(self.table[a, b])

    def inverse(self, a):
        return int(self._inv[a])

    def cayley_table(self):
        return self.table


def _validate_table(table: np.ndarray) -> None:
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise CayleyTableError(f"table is not square: shape {table.shape}")
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise CayleyTableError("table entries must lie in [0, n)")
    ident = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(table[i]), ident):
            raise CayleyTableError(f"row {i} is not a permutation (not a Latin square)")
        if not np.array_equal(np.sort(table[:, i]), ident):
            raise CayleyTableError(f"column {i} is not a permutation (not a Latin square)")
    if not np.array_equal(table[0], ident) or not np.array_equal(table[:, 0], ident):
        raise CayleyTableError("element 0 is not a two-sided identity")
    for a in range(n):
        if not np.any(table[a] == 0):
            raise CayleyTableError(f"element {a} has no inverse")
    if n <= _ASSOC_FULL_CAP:
        _check_associativity_full(table)
    else:
        rng = random.Random(0)
        for _ in range(100_000):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if table[table[a, b], c] != table[a, table[b, c]]:
                raise CayleyTableError(f"associativity fails at ({a},{b},{c})")


class PermutationGroup(FiniteGroup):
    """Group of permutations of [0, degree), elements sorted lexicographically
    (which puts the identity at encoding 0)."""

    def __init__(self, degree: int, generators=None, perms=None, name: str = "perm-group"):
        self.degree = degree
        if perms is None:
            perms = _closure(degree, [tuple(g) for g in generators])
        perms = sorted(set(map(tuple, perms)))
        ident = tuple(range(degree))
        if perms[0] != ident:
            raise ValueError("element set does not contain the identity")
        self.perms = perms
        self.order = len(perms)
        self._index = {p: i for i, p in enumerate(perms)}
        self.name = name

    def multiply(self, a, b):
        pa, pb = self.perms[a], self.perms[b]
        return self._index[tuple(pa[i] for i in pb)]

    def inverse(self, a):
        pa = self.perms[a]
        inv = [0] * self.degree
        for i, j in enumerate(pa):
            inv[j] = i
        return self._index[tuple(inv)]


def _closure(degree, generators):
    for g in generators:
        if sorted(g) != list(range(degree)):
            raise ValueError(f"{g} is not a permutation of [0, {degree})")
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        p = frontier.pop()
        for g in generators:
            q = tuple(p[i] for i in g)
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return seen


class FrobeniusFieldGroup(FiniteGroup):
    """Affine maps x -> g^k * x + a over GF(p^r), i.e. the semidirect product
    of the additive group (kernel) by the multiplicative group (complement).

    Element (a, k) is encoded as enc(a) * (p^r - 1) + k; the identity (0, 0)
    lands at 0.
    """

    def __init__(self, p: int, r: int):
        field = FiniteField(p, r)
        q = field.size
        if q < 3:
            raise ValueError("need p^r >= 3 for a nontrivial multiplicative part")
        self.field = field
        self.q = q
        self.order = q * (q - 1)
        self.name = f"Frob({p},{r})"
        self._g = field.primitive_element

    def encode(self, a: int, k: int) -> int:
        return a * (self.q - 1) + k

    def decode(self, e: int) -> tuple[int, int]:
        return divmod(e, self.q - 1)

    def multiply(self, x, y):
        q1 = self.q - 1
        a, k = divmod(x, q1)
        b, l = divmod(y, q1)
        f = self.field
        gb = f.mul(f.pow(self._g, k), b)
        return (f.add(a, gb)) * q1 + (k + l) % q1

    def inverse(self, x):
        q1 = self.q - 1
        a, k = divmod(x, q1)
        f = self.field
        g_inv_k = f.pow(self._g, (q1 - k) % q1)
        b = f.neg(f.mul(g_inv_k, a))
        return b * q1 + (q1 - k) % q1

    def kernel_elements(self) -> list[int]:
        """Encodings of the normal elementary-abelian part {(a, 0)}."""
        return [a * (self.q - 1) for a in range(self.q)]

    def complement_elements(self) -> list[int]:
        """Encodings of the cyclic part {(0, k)} of order p^r - 1."""
        return list(range(self.q - 1))


class DirectProductGroup(FiniteGroup):
    """Componentwise product; encodings packed mixed-radix, first factor most
    significant, so the identity tuple maps to 0."""

    def __init__(self, factors):
        factors = list(factors)
        if not factors:
            raise ValueError("direct product needs at least one factor")
        self.factors = factors
        self.order = math.prod(g.order for g in factors)
        self.name = "x".join(g.name for g in factors)

    def encode(self, parts) -> int:
        e = 0
        for g, x in zip(self.factors, parts):
            e = e * g.order + x
        return e

    def decode(self, e: int) -> tuple[int, ...]:
        parts = []
        for g in reversed(self.factors):
            e, x = divmod(e, g.order)
            parts.append(x)
        return tuple(reversed(parts))

    def multiply(self, a, b):
        pa, pb = self.decode(a), self.decode(b)
        return self.encode(g.multiply(x, y) for g, x, y in zip(self.factors, pa, pb))

    def inverse(self, a):
        return self.encode(g.inverse(x) for g, x in zip(self.factors, self.decode(a)))


# ---------------------------------------------------------------------------
# named constructors
# ---------------------------------------------------------------------------

def cyclic(n: int) -> CyclicGroup:
    return CyclicGroup(n)


def abelian_of_type(type_map: dict[int, list[int]]) -> FiniteGroup:
    """Abelian group as a product of cyclic prime-power factors.

    ``type_map`` sends each prime to its partition of exponents, e.g.
    {2: [2, 1], 3: [1]} -> C4 x C2 x C3. Order is deterministic: primes
    ascending, exponents descending.
    """
    factors = []
    for p in sorted(type_map):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        for a in sorted(type_map[p], reverse=True):
            if a < 1:
                raise ValueError(f"exponents must be >= 1, got {a}")
            factors.append(CyclicGroup(p ** a))
    if not factors:
        return CyclicGroup(1)
    if len(factors) == 1:
        return factors[0]
    g = DirectProductGroup(factors)
    return g


def dihedral(n: int) -> PermutationGroup:
    """Dihedral group of order 2n as symmetries of the n-gon, n >= 3."""
    if not 3 <= n <= 512:
        raise ValueError(f"dihedral parameter must be in [3, 512], got {n}")
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((n - i) % n for i in range(n))
    return PermutationGroup(n, generators=[rot, ref], name=f"D{n}")


def symmetric(d: int) -> PermutationGroup:
    if not 1 <= d <= 8:
        raise ValueError(f"symmetric degree must be in [1, 8], got {d}")
    perms = list(itertools.permutations(range(d)))
    return PermutationGroup(d, perms=perms, name=f"S{d}")


def alternating(d: int) -> PermutationGroup:
    if not 1 <= d <= 8:
        raise ValueError(f"alternating degree must be in [1, 8], got {d}")
    perms = [p for p in itertools.permutations(range(d)) if _parity(p) == 0]
    return PermutationGroup(d, perms=perms, name=f"A{d}")


def _parity(p):
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def quaternion8() -> CayleyTableGroup:
    """The quaternion group {+-1, +-i, +-j, +-k}."""
    units = [
        (1, 0, 0, 0), (-1, 0, 0, 0),
        (0, 1, 0, 0), (0, -1, 0, 0),
        (0, 0, 1, 0), (0, 0, -1, 0),
        (0, 0, 0, 1), (0, 0, 0, -1),
    ]
    index = {u: i for i, u in enumerate(units)}

    def qmul(x, y):
        w1, x1, y1, z1 = x
        w2, x2, y2, z2 = y
        return (
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    table = [[index[qmul(a, b)] for b in units] for a in units]
    return CayleyTableGroup(np.array(table), name="Q8")


def frobenius_field(p: int, r: int) -> FrobeniusFieldGroup:
    return FrobeniusFieldGroup(p, r)


def direct_product(factors) -> DirectProductGroup:
    return DirectProductGroup(factors)


def from_cayley_table(table, name: str = "table-group") -> CayleyTableGroup:
    """Validate and wrap raw table data (nested lists or array)."""
    arr = np.asarray(table)
    if arr.dtype.kind not in "iu":
        raise CayleyTableError("table entries must be integers")
    return CayleyTableGroup(arr.astype(np.int64), name=name, validate=True)


def element_order(group: FiniteGroup, x: int) -> int:
    return group.element_order(x)
