"""Subgroups: closure generation, full enumeration, normality, quotients,
and the isolated/malnormal tests used by the Frobenius construction."""

from __future__ import annotations

import numpy as np

from .group_core import CayleyTableGroup, FiniteGroup

__all__ = [
    "Subgroup",
    "generate",
    "all_subgroups",
    "is_normal",
    "quotient",
    "is_isolated",
    "conjugates_intersect_trivially",
]

_LATTICE_CAP = 200
_QUOTIENT_INDEX_CAP = 512


class Subgroup:
    """Immutable element set inside a parent group."""

    __slots__ = ("parent", "members", "_sorted", "generators")

    def __init__(self, parent: FiniteGroup, members, generators=()):
        self.parent = parent
        self.members = frozenset(int(m) for m in members)
        self._sorted = tuple(sorted(self.members))
        self.generators = tuple(sorted(set(int(g) for g in generators)))

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, x) -> bool:
        return x in self.members

    def elements(self) -> tuple[int, ...]:
        return self._sorted

    def is_trivial(self) -> bool:
        return self.order == 1

    def check(self) -> None:
        """Exhaustive closure/identity/inverse check."""
        G = self.parent
        if G.identity not in self.members:
            raise AssertionError("subgroup misses the identity")
        for a in self._sorted:
            if G.inverse(a) not in self.members:
                raise AssertionError(f"subgroup not closed under inverse at {a}")
            for b in self._sorted:
                if G.multiply(a, b) not in self.members:
                    raise AssertionError(f"subgroup not closed at ({a},{b})")
        if G.order % self.order != 0:
            raise AssertionError("subgroup order does not divide group order")

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.members == self.members
        )

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __repr__(self):
        return f"<Subgroup of {self.parent.name}, order {self.order}>"


def generate(G: FiniteGroup, gens) -> Subgroup:
    """Smallest subgroup of G containing ``gens`` (breadth-first closure)."""
    gens = sorted(set(int(g) for g in gens))
    for g in gens:
        G.check_encoding(g)
    members = {G.identity}
    frontier = [G.identity]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.multiply(x, g)
            if y not in members:
                members.add(y)
                frontier.append(y)
    return Subgroup(G, members, generators=gens)


def all_subgroups(G: FiniteGroup, cap: int = _LATTICE_CAP) -> list[Subgroup]:
    """Every subgroup of G, each exactly once, sorted by (order, element tuple).

    Seeds with the cyclic subgroups and repeatedly joins known subgroups with
    cyclic seeds until a fixpoint; correct because every subgroup is a join of
    cyclic ones.
    """
    if G.order > cap:
        raise ValueError(f"subgroup enumeration capped at order {cap}, group has {G.order}")
    seeds: dict[frozenset, tuple] = {}
    for x in G.elements():
        sub = generate(G, [x])
        seeds.setdefault(sub.members, sub.generators)
    known: dict[frozenset, tuple] = dict(seeds)
    frontier = list(seeds.items())
    seed_list = list(seeds.items())
    while frontier:
        new_frontier = []
        for members, gens in frontier:
            for s_members, s_gens in seed_list:
                if s_members <= members:
                    continue
                joined = generate(G, gens + s_gens)
                if joined.members not in known:
                    known[joined.members] = joined.generators
                    new_frontier.append((joined.members, joined.generators))
        frontier = new_frontier
    subs = [Subgroup(G, m, generators=g) for m, g in known.items()]
    subs.sort(key=lambda s: (s.order, s.elements()))
    return subs


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    for g in G.elements():
        g_inv = G.inverse(g)
        for h in H.elements():
            if G.multiply(G.multiply(g, h), g_inv) not in H:
                return False
    return True


def quotient(G: FiniteGroup, K: Subgroup, name: str | None = None) -> CayleyTableGroup:
    """G/K as an explicit Cayley-table group; cosets are ordered by their
    minimal element encoding, which puts the identity coset first."""
    if not is_normal(G, K):
        raise ValueError(f"subgroup of order {K.order} is not normal in {G.name}")
    index = G.order // K.order
    if index > _QUOTIENT_INDEX_CAP:
        raise ValueError(f"quotient index {index} exceeds cap {_QUOTIENT_INDEX_CAP}")
    coset_of = {}
    reps = []
    for x in G.elements():
        if x in coset_of:
            continue
        coset = sorted(G.multiply(x, k) for k in K.elements())
        rep = coset[0]
        reps.append(rep)
        for y in coset:
            coset_of[y] = rep
    reps.sort()
    rep_index = {rep: i for i, rep in enumerate(reps)}
    table = np.empty((index, index), dtype=np.int64)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            table[i, j] = rep_index[coset_of[G.multiply(a, b)]]
    qname = name or f"{G.name}/{K.order}"
    return CayleyTableGroup(table, name=qname, validate=True)


def is_isolated(G: FiniteGroup, H: Subgroup) -> bool:
    """True iff every element of G either lies in H or generates a cyclic
    subgroup meeting H only in the identity."""
    e = G.identity
    for x in G.elements():
        if x in H:
            continue
        y = x
        while y != e:
            if y in H:
                return False
            y = G.multiply(y, x)
    return True


def conjugates_intersect_trivially(G: FiniteGroup, H: Subgroup) -> bool:
    """Malnormality: H meets each conjugate g*H*g^-1 with g outside H only in
    the identity."""
    e = G.identity
    for g in G.elements():
        if g in H:
            continue
        g_inv = G.inverse(g)
        for h in H.elements():
            c = G.multiply(G.multiply(g, h), g_inv)
            if c != e and c in H:
                return False
    return True
