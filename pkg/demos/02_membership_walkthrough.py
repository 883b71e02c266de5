"""Walk through the membership test that drives the direct count.

Each standard monomial A (all exponents below q) either survives into the
quotient basis or collapses onto earlier monomials.  Collapse happens in
exactly two ways: the trail term of f divides A, or the lead term does
and repeatedly trading one lead factor for one trail factor pushes some
exponent past q before any exponent goes negative.

This script traces the scan for every monomial of a tiny instance and
tallies the survivors, which is the Hilbert-Kunz value itself.
"""

import itertools

from hkbinomial import PrimePower, hk_oracle, member_scan, parse_binomial, render

f = parse_binomial("x1^3 - x2^2", p=5)
q = PrimePower(5, 1)
print(f"f = {render(f)}, q = 5\n")

survivors = 0
for A in itertools.product(range(5), repeat=2):
    result, steps = member_scan(A, f, q)
    if result.member:
        how = result.witness if result.witness_m is None else f"mutation at M={result.witness_m}"
        print(f"  {A}: collapses ({how})")
        for M, inter, cand, conv in steps:
            print(f"      M={M}: holds {inter}, candidate {cand}, convergent={conv}")
    else:
        survivors += 1
        print(f"  {A}: SURVIVES (scan bound {result.mmax_scanned})")

print(f"\nsurvivors: {survivors}")
print(f"oracle   : {hk_oracle(f, q)}  (independent relation-graph count)")
