"""Peek inside the closed-form evaluation.

The closed form classifies variables by the difference of their powers
between the two terms, derives per-variable bracket tables for the scan
bound, counts the zero/growing block per bound, and assembles the total
with product chains.  All of those intermediates are exposed for audit.
"""

from hkbinomial import (
    classification_summary,
    classify,
    hk_closed_form_tables,
    mmax_params,
    parse_binomial,
    phi_recursive,
    render,
)

f = parse_binomial("x1^2*x2 - x2*x3", p=3)
print(f"f = {render(f)} over F_3, q = 3\n")

cls = classify(f)
summary = classification_summary(cls)
print(f"classification: r={summary['r']} s={summary['s']} t={summary['t']}")
print(f"  shrinking: {summary['neg']}")
print(f"  fixed    : {summary['zero']}")
print(f"  growing  : {summary['pos']}\n")

for prm in mmax_params(cls, 3, 1):
    print(
        f"bracket table for x{prm.var}: top value {prm.top_value}, "
        f"first width {1 + prm.excess}, step {prm.a}, last width {prm.a_prime}"
    )

print("\nblock counts by scan bound:")
for M in (1, 2):
    print(f"  bound {M}: {phi_recursive(M, cls, 3, 1)}")

value, tables, _ = hk_closed_form_tables(f, 3, 1)
print(f"\nchain values per shrinking variable: {tables.g_n}")
print(f"integral vector at the outer level  : {tables.ints_level_top}")
print(f"assembled value                     : {value}")
