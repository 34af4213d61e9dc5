"""Claim-level harness: subgroup ratio scans, the Frobenius counterexample
pipeline, the order-divisibility bijection decision, and catalog sweeps."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import group_core
from .classify import is_nilpotent, is_solvable
from .group_core import CyclicGroup, FiniteGroup
from .numtheory import (
    factorize,
    frobenius_ratio_closed_form,
    is_mersenne_exponent,
    is_prime,
    psi_cyclic,
)
from .order_sums import cyclic_reference, psi, psi_relative, relative_order
from .matching import MaxFlow
from .subgroup_lattice import Subgroup, all_subgroups, generate

__all__ = [
    "ViolationRecord",
    "CounterexampleSpec",
    "BijectionResult",
    "GroupScanResult",
    "CatalogReport",
    "subgroup_ratio_scan",
    "build_counterexample",
    "bijection_exists",
    "scan_catalog",
    "frobenius_ratio_table",
    "default_catalog",
]

_BIJECTION_CAP = 10_000


@dataclass(frozen=True)
class ViolationRecord:
    """Outcome of comparing one subgroup against its cyclic reference."""

    group: str
    group_order: int
    subgroup_order: int
    subgroup_generators: tuple[int, ...]
    psi_h: int
    cyclic_reference: int
    ratio: Fraction
    nilpotent: bool
    solvable: bool

    @property
    def is_violation(self) -> bool:
        return self.ratio > 1

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "group_order": self.group_order,
            "subgroup_order": self.subgroup_order,
            "subgroup_generators": list(self.subgroup_generators),
            "psi_h": str(self.psi_h),
            "cyclic_reference": str(self.cyclic_reference),
            "ratio": {"num": str(self.ratio.numerator), "den": str(self.ratio.denominator)},
            "is_violation": self.is_violation,
            "nilpotent": self.nilpotent,
            "solvable": self.solvable,
        }


def subgroup_ratio_scan(G: FiniteGroup, threads: int = 1) -> list[ViolationRecord]:
    """One record per subgroup of G, with the exact ratio against the cyclic
    reference and a violation flag where the ratio exceeds 1."""
    nilpotent = is_nilpotent(G)
    solvable = is_solvable(G)
    records = []
    for H in all_subgroups(G):
        value = psi_relative(G, H, threads=threads)
        reference = cyclic_reference(G.order, H.order)
        records.append(
            ViolationRecord(
                group=G.name,
                group_order=G.order,
                subgroup_order=H.order,
                subgroup_generators=H.generators,
                psi_h=value,
                cyclic_reference=reference,
                ratio=Fraction(value, reference),
                nilpotent=nilpotent,
                solvable=solvable,
            )
        )
    return records


@dataclass(frozen=True)
class CounterexampleSpec:
    """Parameters of the Frobenius counterexample family: the group is the
    affine group over GF(2^r) (2^r - 1 prime), optionally crossed with C_q
    for an odd prime q not dividing 2^r - 1."""

    r: int
    q: int = 0

    def validate(self) -> None:
        if self.r < 3:
            raise ValueError(f"need r >= 3, got {self.r}")
        if not is_mersenne_exponent(self.r):
            raise ValueError(f"2^{self.r}-1 is not prime")
        if self.q:
            if self.q % 2 == 0:
                raise ValueError(f"cofactor q must be odd, got {self.q}")
            if not is_prime(self.q):
                raise ValueError(f"cofactor q must be prime, got {self.q}")
            if (2 ** self.r - 1) % self.q == 0:
                raise ValueError(f"cofactor q = {self.q} divides 2^{self.r}-1")

    @property
    def group_order(self) -> int:
        n = 2 ** self.r * (2 ** self.r - 1)
        return n * self.q if self.q else n

    @property
    def subgroup_order(self) -> int:
        m = 2 ** self.r - 1
        return m * self.q if self.q else m


def build_counterexample(spec: CounterexampleSpec) -> tuple[FiniteGroup, Subgroup]:
    """The group/subgroup pair whose psi ratio is the closed-form value > 1."""
    spec.validate()
    frob = group_core.frobenius_field(2, spec.r)
    comp_gen = frob.encode(0, 1)
    if not spec.q:
        H = generate(frob, [comp_gen])
        return frob, H
    G = group_core.direct_product([frob, CyclicGroup(spec.q)])
    gens = [G.encode((comp_gen, 0)), G.encode((0, 1))]
    H = generate(G, gens)
    return G, H


@dataclass(frozen=True)
class BijectionResult:
    exists: bool
    # on success: bijection as a list f with f[x] = image encoding in C_n
    witness: tuple[int, ...] | None = None
    # on failure: Hall-violating multiset of relative-order values on the
    # group side, with the (smaller) reachable multiset on the cyclic side
    deficient_values: dict[int, int] | None = None
    neighborhood_values: dict[int, int] | None = None

    def deficiency(self) -> int:
        if self.exists:
            return 0
        return sum(self.deficient_values.values()) - sum(self.neighborhood_values.values())


def _cyclic_relative_order_counts(n: int, m: int) -> Counter:
    # in C_n, the unique subgroup of order m is the multiples of q = n/m and
    # the relative order of k is q / gcd(q, k)
    q = n // m
    counts = Counter()
    for k in range(n):
        counts[q // gcd(q, k)] += 1
    return counts


def bijection_exists(G: FiniteGroup, H: Subgroup, threads: int = 1) -> BijectionResult:
    """Decide whether G maps bijectively onto C_n so that each element's
    relative order (over H) divides its image's relative order (over the
    order-|H| subgroup of C_n).

    Works on the multiset of relative-order values: edges depend only on the
    value pair, so a capacitated matching between value buckets decides the
    element-level question and inflates back to an explicit bijection.
    """
    n = G.order
    if n > _BIJECTION_CAP:
        raise ValueError(f"bijection decision capped at order {_BIJECTION_CAP}")
    left_of = [relative_order(G, H, x) for x in G.elements()]
    left = Counter(left_of)
    right = _cyclic_relative_order_counts(n, H.order)
    left_vals = sorted(left)
    right_vals = sorted(right)
    # nodes: source, left buckets, right buckets, sink
    source = 0
    sink = 1 + len(left_vals) + len(right_vals)
    flow = MaxFlow(sink + 1)
    left_node = {v: 1 + i for i, v in enumerate(left_vals)}
    right_node = {v: 1 + len(left_vals) + i for i, v in enumerate(right_vals)}
    for v in left_vals:
        flow.add_edge(source, left_node[v], left[v])
    for w in right_vals:
        flow.add_edge(right_node[w], sink, right[w])
    for v in left_vals:
        for w in right_vals:
            if w % v == 0:
                flow.add_edge(left_node[v], right_node[w], n)
    total = flow.max_flow(source, sink)
    if total == n:
        witness = _inflate_witness(n, n // H.order, left_of, flow, left_node, right_node)
        return BijectionResult(exists=True, witness=witness)
    reachable = flow.min_cut_reachable(source)
    deficient = {v: left[v] for v in left_vals if left_node[v] in reachable}
    neighborhood = {w: right[w] for w in right_vals if right_node[w] in reachable}
    return BijectionResult(exists=False, deficient_values=deficient, neighborhood_values=neighborhood)


def _inflate_witness(n, q, left_of, flow, left_node, right_node):
    node_to_right = {node: w for w, node in right_node.items()}
    # queue of available C_n elements per relative-order value, ascending
    right_pool: dict[int, list[int]] = {}
    for k in range(n):
        right_pool.setdefault(q // gcd(q, k), []).append(k)
    for pool in right_pool.values():
        pool.reverse()  # pop() then yields ascending order
    # per left value, the list of (right value, remaining flow)
    assignments: dict[int, list[list[int]]] = {}
    for v, node in left_node.items():
        assignments[v] = [[node_to_right[t], f] for t, f in flow.flow_on_edges(node)]
    out = []
    for x in range(n):
        v = left_of[x]
        slots = assignments[v]
        w, remaining = slots[-1][0], slots[-1][1]
        out.append(right_pool[w].pop())
        if remaining == 1:
            slots.pop()
        else:
            slots[-1][1] = remaining - 1
    return tuple(out)


@dataclass
class GroupScanResult:
    group: str
    group_order: int
    nilpotent: bool
    solvable: bool
    cyclic: bool
    psi_value: int
    psi_cyclic_value: int
    records: list[ViolationRecord]
    error: str | None = None

    @property
    def violations(self) -> list[ViolationRecord]:
        return [rec for rec in self.records if rec.is_violation]

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "group_order": self.group_order,
            "nilpotent": self.nilpotent,
            "solvable": self.solvable,
            "cyclic": self.cyclic,
            "psi": str(self.psi_value),
            "psi_cyclic": str(self.psi_cyclic_value),
            "violations": [rec.to_json_dict() for rec in self.violations],
            "subgroup_count": len(self.records),
            "error": self.error,
        }


@dataclass
class CatalogReport:
    results: list[GroupScanResult] = field(default_factory=list)
    errors: list[tuple[str, str]] = field(default_factory=list)

    @property
    def total_violations(self) -> int:
        return sum(len(r.violations) for r in self.results)

    @property
    def flagged_groups(self) -> list[str]:
        return [r.group for r in self.results if r.violations]

    def to_json_dict(self) -> dict:
        return {
            "groups_scanned": len(self.results),
            "total_violations": self.total_violations,
            "flagged_groups": self.flagged_groups,
            "errors": [{"group": g, "error": e} for g, e in self.errors],
            "results": [r.to_json_dict() for r in self.results],
        }


def scan_catalog(groups, include_subgroups: bool = True, threads: int = 1) -> CatalogReport:
    """Scan every group: classification flags, the plain order-sum comparison
    against C_n, and (optionally) the per-subgroup ratio records. Per-group
    failures are collected and the scan continues."""
    report = CatalogReport()
    for G in sorted(groups, key=lambda g: (g.order, g.name)):
        try:
            records = subgroup_ratio_scan(G, threads=threads) if include_subgroups else []
            result = GroupScanResult(
                group=G.name,
                group_order=G.order,
                nilpotent=is_nilpotent(G),
                solvable=is_solvable(G),
                cyclic=G.is_cyclic(),
                psi_value=psi(G),
                psi_cyclic_value=psi_cyclic(G.order),
                records=records,
            )
            report.results.append(result)
        except Exception as exc:  # noqa: BLE001 - collected per contract
            report.errors.append((G.name, str(exc)))
    return report


def frobenius_ratio_table(r_max: int):
    """Rows (r, exact ratio, 2^r-1 prime?, ratio < 3/2?) for r = 3..r_max."""
    if not 3 <= r_max <= 64:
        raise ValueError(f"need 3 <= r_max <= 64, got {r_max}")
    rows = []
    for r in range(3, r_max + 1):
        ratio = frobenius_ratio_closed_form(r)
        rows.append((r, ratio, is_mersenne_exponent(r), ratio < Fraction(3, 2)))
    return rows


def default_catalog(max_order: int = 64, include_frobenius: bool = False) -> list[FiniteGroup]:
    """Deterministic sample of groups reachable from the named constructors.

    Not an isomorphism-complete census: cyclic groups of every order, the
    non-cyclic abelian groups up to order 32, dihedral groups, small symmetric
    and alternating groups, the quaternion group, and a few direct products.
    The two smallest affine Frobenius field groups join only on request,
    since they are designed to be flagged by the scan.
    """
    groups: list[FiniteGroup] = []
    for n in range(1, max_order + 1):
        groups.append(CyclicGroup(n))
    for n in range(4, min(max_order, 32) + 1):
        for type_map in _noncyclic_abelian_types(n):
            groups.append(group_core.abelian_of_type(type_map))
    for n in range(3, 13):
        if 2 * n <= max_order:
            groups.append(group_core.dihedral(n))
    if max_order >= 6:
        groups.append(group_core.symmetric(3))
    if max_order >= 24:
        groups.append(group_core.symmetric(4))
    if max_order >= 12:
        groups.append(group_core.alternating(4))
    if max_order >= 60:
        groups.append(group_core.alternating(5))
    if max_order >= 8:
        groups.append(group_core.quaternion8())
    if max_order >= 18:
        groups.append(group_core.direct_product([group_core.symmetric(3), CyclicGroup(3)]))
    if max_order >= 24:
        groups.append(group_core.direct_product([group_core.quaternion8(), CyclicGroup(3)]))
    if include_frobenius:
        if max_order >= 56:
            groups.append(group_core.frobenius_field(2, 3))
        if max_order >= 72:
            groups.append(group_core.frobenius_field(3, 2))
    return groups


def _noncyclic_abelian_types(n: int):
    fac = factorize(n)
    per_prime = []
    for p, a in fac:
        per_prime.append((p, _partitions(a)))
    out = []

    def rec(i, acc):
        if i == len(per_prime):
            if any(len(parts) > 1 for _, parts in acc):
                out.append({p: list(parts) for p, parts in acc})
            return
        p, parts_list = per_prime[i]
        for parts in parts_list:
            rec(i + 1, acc + [(p, parts)])

    rec(0, [])
    return out


def _partitions(a: int):
    if a == 0:
        return [()]
    out = []

    def rec(remaining, maximum, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, maximum), 0, -1):
            rec(remaining - part, part, acc + [part])

    rec(a, a, [])
    return out
