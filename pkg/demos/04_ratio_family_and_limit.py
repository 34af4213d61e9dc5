"""
The Frobenius ratio family and the 27/14 envelope
=================================================

Two exact computations with no group enumeration at all.

First, the closed-form ratio (3*4^r - 9*2^r + 15) / (2^(2r+1) + 1) for the
affine group of GF(2^r) against its complement: it starts at 45/43, increases
with r, and stays below 3/2.  Only the rows where 2^r - 1 is a Mersenne prime
correspond to actual groups in the family; the formula is monotone regardless.

Second, the envelope f(q) = (q^2 - q + 1) / psi(C_q) that controls how far any
subgroup of index q can push the ratio.  Along the sequence q = 3 * 2^a it
climbs past 3/2 and converges to 27/14 from below.
"""

from fractions import Fraction

import relpsi as rp

# --- the family ratio -------------------------------------------------------
print(f"{'r':>3}  {'2^r-1 prime':>11}  ratio")
for r, ratio, mersenne, below in rp.frobenius_ratio_table(13):
    mark = "yes" if mersenne else "no"
    print(f"{r:>3}  {mark:>11}  {ratio}  (~{float(ratio):.6f})")
    assert below  # every row sits strictly under 3/2

# Monotone in r: each row beats the one before.
rows = rp.frobenius_ratio_table(20)
for (_, a, *_), (_, b, *_) in zip(rows, rows[1:]):
    assert a < b
print("ratios strictly increase with r, all below 3/2")

# --- the index envelope -----------------------------------------------------
target = Fraction(27, 14)
print(f"\nf(q) along q = 3 * 2^a, target {target} (~{float(target):.6f})")
prev = Fraction(0)
for a in range(1, 13):
    q = 3 * 2 ** a
    f = rp.index_ratio_bound(q)
    assert prev < f < target
    prev = f
    crossed = "  <-- past 3/2" if f > Fraction(3, 2) else ""
    print(f"a={a:>2}  q={q:>5}  f(q) ~ {float(f):.8f}{crossed}")

# The first crossing of 3/2 happens at a = 2, i.e. q = 12.
first = next(a for a in range(1, 13)
             if rp.index_ratio_bound(3 * 2 ** a) > Fraction(3, 2))
assert first == 2
print(f"first crossing of 3/2 at a = {first} (q = {3 * 2 ** first})")

# --- per-index bounds on actual ratios --------------------------------------
# For an index q with prime divisors p_1 < ... < p_k, the ratio of any
# index-q subgroup is below prod (p_i + 1)/p_i and below (p_k + 1)/p_1.
b = rp.ratio_bounds_for_index(8)
print(f"\nindex 8: product bound {b.product}, spread bound {b.spread}")
assert rp.frobenius_ratio_closed_form(3) < b.product == b.spread == Fraction(3, 2)
print("the 45/43 counterexample sits safely inside both bounds")
