"""Nilpotency and solvability tests for catalog groups."""

from __future__ import annotations

from .group_core import FiniteGroup
from .numtheory import factorize
from .subgroup_lattice import Subgroup, generate

__all__ = ["derived_subgroup", "is_solvable", "is_nilpotent"]

_CLASSIFY_CAP = 1 << 16


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    """Closure of all commutators a b a^-1 b^-1."""
    if G.order > _CLASSIFY_CAP:
        raise ValueError(f"classification budget exceeded at order {G.order}")
    return _derived_of_members(G, list(G.elements()))


def _derived_of_members(G: FiniteGroup, members) -> Subgroup:
    commutators = set()
    inv = {a: G.inverse(a) for a in members}
    for a in members:
        for b in members:
            c = G.multiply(G.multiply(a, b), G.multiply(inv[a], inv[b]))
            commutators.add(c)
    return generate(G, commutators)


def is_solvable(G: FiniteGroup) -> bool:
    """Derived series reaches the trivial subgroup."""
    if G.order > _CLASSIFY_CAP:
        raise ValueError(f"classification budget exceeded at order {G.order}")
    members = list(G.elements())
    # the series strictly decreases, so log2(n) steps suffice
    for _ in range(G.order.bit_length() + 1):
        if len(members) == 1:
            return True
        nxt = _derived_of_members(G, members)
        if nxt.order == len(members):
            return False
        members = list(nxt.elements())
    raise AssertionError("derived series failed to stabilize")


def is_nilpotent(G: FiniteGroup) -> bool:
    """True iff for every prime p | n the elements of p-power order form a
    subgroup of full p-part size (unique Sylow subgroup criterion)."""
    if G.order > _CLASSIFY_CAP:
        raise ValueError(f"classification budget exceeded at order {G.order}")
    n = G.order
    orders = {x: G.element_order(x) for x in G.elements()}
    for p, a in factorize(n):
        p_part = p ** a
        p_elements = [x for x, o in orders.items() if _is_power_of(o, p)]
        if len(p_elements) != p_part:
            return False
        members = set(p_elements)
        for x in p_elements:
            for y in p_elements:
                if G.multiply(x, y) not in members:
                    return False
    return True


def _is_power_of(o: int, p: int) -> bool:
    while o % p == 0:
        o //= p
    return o == 1
