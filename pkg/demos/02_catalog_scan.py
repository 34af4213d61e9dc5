"""
Scanning a catalog of small groups
==================================

Sweep every subgroup of every group in the built-in catalog and compare the
relative order sum against its cyclic reference.  Two things show up:

* nilpotent groups never exceed the reference, for any subgroup;
* below order 56 nothing in the catalog exceeds it either -- the affine
  group of GF(8) is the first (and only) offender we construct.
"""

import relpsi as rp

# The plain catalog: cyclic, abelian, dihedral, symmetric/alternating,
# quaternion, and a couple of direct products -- but no Frobenius groups.
report = rp.scan_catalog(rp.default_catalog(max_order=64))
print(f"scanned {len(report.results)} groups, "
      f"{report.total_violations} violations")
assert report.total_violations == 0

# Opt the Frobenius groups in and the order-56 group is flagged at once.
report = rp.scan_catalog(rp.default_catalog(max_order=64, include_frobenius=True))
print(f"with Frobenius groups: flagged = {report.flagged_groups}")
assert report.flagged_groups == ["Frob(2,3)"]

# Drill into the flagged group: the violating subgroups are exactly the
# eight conjugates of the order-7 complement, all at the same ratio.
records = rp.subgroup_ratio_scan(rp.frobenius_field(2, 3))
violations = [rec for rec in records if rec.is_violation]
print(f"Frob(2,3): {len(violations)} violating subgroups "
      f"out of {len(records)}, ratio {violations[0].ratio}")
for rec in violations:
    assert rec.subgroup_order == 7 and not rec.nilpotent

# Nilpotent groups stay at or below the reference everywhere.  Check the
# statement directly on every nilpotent group in the catalog.
checked = 0
for G in rp.default_catalog(max_order=48):
    if not rp.is_nilpotent(G):
        continue
    for rec in rp.subgroup_ratio_scan(G):
        assert rec.ratio <= 1
        checked += 1
print(f"nilpotent groups: {checked} subgroup ratios, all <= 1")
