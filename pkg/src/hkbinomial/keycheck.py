"""Key ideals, the membership criterion, and the direct-count engine.

Every standard monomial A (all exponents <= q-1) gets a monomial key
ideal A_c; the length of the quotient equals the number of standard
monomials NOT lying in A_c + (f).  For a binomial f the membership test
reduces to divisibility by the trail term, or a finite scan that trades
one lead factor for one trail factor per step until the running monomial
either leaves the standard range (some exponent reaches q) or runs out
of lead divisibility.

The scan's convergence test compares monomials in the delta-sorted frame
of `classify`; in that frame the scan can only converge by an exponent
reaching q, never by the lexicographic route, which keeps the per-class
bookkeeping consistent with the filtration.  Evaluating the criterion in
an unsorted frame gives wrong counts (see tests for a two-variable
instance that exercises this).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Binomial, PrimePower
from .classify import classify
from .errors import ContractError, DomainError, ResourceError


def _check_standard(A, q: PrimePower, what="monomial"):
    if any(e >= q.q for e in A):
        raise DomainError(f"{what} {A} has an exponent >= q = {q.q}")
    if any(e < 0 for e in A):
        raise DomainError(f"{what} {A} has a negative exponent")


def key_ideal_generators(A, q: PrimePower) -> set:
    """Generators of the key ideal of A: the step monomials B_i plus x_i^q.

    B_1 = x_1^(a_1+1) when a_1 < q-1; B_i = x_1^a_1 ... x_{i-1}^a_{i-1} x_i^(a_i+1)
    when a_i < q-1; B_i is dropped when a_i = q-1.
    """
    _check_standard(A, q)
    m = len(A)
    gens = set()
    for i in range(m):
        if A[i] < q.q - 1:
            gens.add(tuple(A[:i]) + (A[i] + 1,) + (0,) * (m - i - 1))
    for i in range(m):
        gens.add(tuple(q.q if j == i else 0 for j in range(m)))
    return gens


def monomial_divides(g, c) -> bool:
    return all(gi <= ci for gi, ci in zip(g, c))


def is_convergent(C, A, q: PrimePower) -> bool:
    """True iff the monomial C lies in the key ideal of A.

    Fast path: some exponent of C is >= q, or C is strictly greater than A
    in pure lex order with x_1 most significant.  Equivalent to divisibility
    by one of `key_ideal_generators(A, q)`; the equivalence is exercised
    exhaustively in the tests.
    """
    _check_standard(A, q, "key monomial")
    if len(C) != len(A):
        raise DomainError("exponent vectors of different lengths")
    if any(c >= q.q for c in C):
        return True
    if C == tuple(A):
        raise ContractError("the key monomial itself never lies in its key ideal")
    for c, a in zip(C, A):
        if c != a:
            return c > a
    return False


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    witness: str | None  # "trail" | "mutation" | None
    witness_m: int | None
    mmax_scanned: int

    def __post_init__(self):
        assert self.member == (self.witness is not None)


def _lead_scan_bound(A, e2, delta):
    """Largest M >= 1 with A - M*e2 + (M-1)*e1 componentwise >= 0.

    Returns 0 when the lead term does not divide A, and None when no
    exponent shrinks (impossible for a normalized binomial, kept for
    robustness).
    """
    best = None
    for a, e, d in zip(A, e2, delta):
        if a < e:
            return 0
        if d < 0:
            cap = 1 + (a - e) // (-d)
            if best is None or cap < best:
                best = cap
    return best


def _first_escape(A, delta, qq):
    """Least M >= 1 at which some growing exponent of A + M*delta reaches q."""
    best = None
    for a, d in zip(A, delta):
        if d > 0:
            need = -((a - qq) // d)  # ceil((qq - a) / d)
            if best is None or need < best:
                best = need
    return best


def is_member(A, f: Binomial, q: PrimePower) -> MembershipResult:
    """Decide whether A lies in its key ideal plus (f).

    Membership holds iff the trail term divides A, or the lead term does
    and the exchange scan reaches a convergent monomial within the bound
    where intermediate exponents stay nonnegative.  Both conditions are
    evaluated in closed form; `member_scan` performs the literal scan and
    the tests check they agree.
    """
    if q.p != f.p:
        raise DomainError(f"prime power {q.p}^{q.n} does not match f over F_{f.p}")
    _check_standard(A, q)
    if len(A) != f.m:
        raise DomainError(f"monomial has {len(A)} exponents, expected {f.m}")
    e2, e1 = f.lead.exps, f.trail.exps
    delta = tuple(b - a for a, b in zip(e2, e1))
    mm = _lead_scan_bound(A, e2, delta)
    if all(a >= e for a, e in zip(A, e1)):
        return MembershipResult(True, "trail", None, mm if mm is not None else 0)
    if mm == 0:
        return MembershipResult(False, None, None, 0)
    mw = _first_escape(A, delta, q.q)
    if mw is not None and (mm is None or mw <= mm):
        return MembershipResult(True, "mutation", mw, mm if mm is not None else mw)
    return MembershipResult(False, None, None, mm)


def member_scan(A, f: Binomial, q: PrimePower):
    """Literal scan: returns (MembershipResult, steps).

    Each step is (M, intermediate, candidate, convergent) with exponent
    vectors in the original variable frame; the convergence test runs in
    the sorted frame.  Used by the trace front end and as the reference
    implementation in tests.
    """
    _check_standard(A, q)
    e2, e1 = f.lead.exps, f.trail.exps
    cls = classify(f)
    a_sorted = cls.sorted_vector(A)
    steps = []
    if all(a >= e for a, e in zip(A, e1)):
        res = is_member(A, f, q)
        return MembershipResult(True, "trail", None, res.mmax_scanned), steps
    mvec = list(A)
    mmax = 0
    member = None
    cap = q.q * f.m + 2  # safety bound; unreachable for normalized binomials
    for M in range(1, cap):
        inter = tuple(v - e for v, e in zip(mvec, e2))
        if any(v < 0 for v in inter):
            break
        mmax = M
        cand = tuple(v + e for v, e in zip(inter, e1))
        conv = is_convergent(cls.sorted_vector(cand), a_sorted, q)
        steps.append((M, inter, cand, conv))
        if conv:
            member = MembershipResult(True, "mutation", M, _full_scan_bound(A, f))
            break
        mvec = list(cand)
    if member is None:
        member = MembershipResult(False, None, None, mmax)
    return member, steps


def _full_scan_bound(A, f):
    e2, e1 = f.lead.exps, f.trail.exps
    delta = tuple(b - a for a, b in zip(e2, e1))
    mm = _lead_scan_bound(A, e2, delta)
    return 0 if mm is None else mm


def hk_direct_count(f: Binomial, q: PrimePower, enum_cap: int = 10**7) -> int:
    """Count standard monomials outside their key ideal plus (f).

    This equals the length of the quotient by the Frobenius power plus (f):
    the filtration over standard monomials has a one-dimensional slice
    exactly at each non-member.  Enumeration is row-major; the count is
    order independent.
    """
    if q.p != f.p:
        raise DomainError(f"prime power {q.p}^{q.n} does not match f over F_{f.p}")
    qq = q.q
    m = f.m
    total = qq**m
    if total > enum_cap:
        raise ResourceError(
            f"direct count needs {total} membership tests, budget is {enum_cap}",
            required=total,
            budget=enum_cap,
        )
    e2, e1 = f.lead.exps, f.trail.exps
    neg = [(i, e2[i] - e1[i]) for i in range(m) if e1[i] < e2[i]]  # (index, -delta)
    pos = [(i, e1[i] - e2[i]) for i in range(m) if e1[i] > e2[i]]
    count = 0
    for A in itertools.product(range(qq), repeat=m):
        if all(a >= e for a, e in zip(A, e1)):
            continue  # trail divides: member
        if any(a < e for a, e in zip(A, e2)):
            count += 1  # neither term divides: never a member
            continue
        mm = min(1 + (A[i] - e2[i]) // d for i, d in neg) if neg else None
        mw = min(-((A[i] - qq) // d) for i, d in pos) if pos else None
        if mw is not None and (mm is None or mw <= mm):
            continue  # scan converges: member
        count += 1
    return count
