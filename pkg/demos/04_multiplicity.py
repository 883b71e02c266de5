"""Multiplicities: exact integers in two variables, estimates beyond.

The length grows like c * q^d with d = m - 1.  In two variables c is an
integer with a closed-form case split; the estimator's exact-rational
samples converge to it.  In three or more variables the tool reports the
rational samples and the convergence gap without claiming a closed form.
"""

from hkbinomial import (
    estimate_multiplicity,
    hk_1dim,
    hk_multiplicity_1dim,
    parse_binomial,
    render,
)

print("Two variables: the closed form pins the integer.")
for poly, p in [("x1^3 - x2^2", 5), ("x1^3*x2 - x1*x2", 3), ("x2^5 - x1*x2^2", 5)]:
    f = parse_binomial(poly, p)
    c, case = hk_multiplicity_1dim(f)
    rep = estimate_multiplicity(f, p, range(1, 4))
    ests = ", ".join(str(e) for _, _, e in rep.samples)
    print(f"  {render(f):<22} case {case:<7} multiplicity {c}; estimates {ests}"
          f" -> limit {rep.limit}")
    for n in (1, 2, 3):
        v, _ = hk_1dim(f, p, n)
        print(f"      n={n}: closed two-variable value {v}")

print("\nThree variables: exact rationals and a convergence flag only.")
f = parse_binomial("x1^2*x2 - x2*x3", 3)
rep = estimate_multiplicity(f, 3, range(1, 5))
for n, v, est in rep.samples:
    print(f"  n={n}: value {v:>6}  value/q^2 = {est} (~{float(est):.5f})")
print(f"  converged: {rep.converged} (last gap {rep.gap})")
