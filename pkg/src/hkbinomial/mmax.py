"""Closed-form scan bounds per shrinking variable.

For a shrinking variable with drop a and minimum power b, and q = p^n,
write q - 1 = a*M + rem.  The largest step count at which the variable's
exponent stays nonnegative depends on its distance k from the top
exponent q-1 through a bracket table: the first bracket (width 1+E) gives
the top value M - shift, and each further bracket of width a lowers the
value by one.  The table is exact for all k in [1, q - nmax]; the final
bracket may be short (width a_prime, possibly zero).
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import Classification
from .errors import ContractError, NotApplicableError


def ceil_div(x: int, d: int) -> int:
    return -((-x) // d)


@dataclass(frozen=True)
class MmaxParams:
    """Arithmetic constants for one shrinking variable at fixed p, n."""

    var: int  # original 1-based variable index
    a: int
    b: int
    nmax: int
    m_div: int  # quotient of q-1 by a
    rem: int  # remainder, 0 <= rem < a
    y: int | None  # least positive multiple of a that is >= b - rem (b >= a only)
    q_y: int | None  # y // a
    shift: int  # the 0 / 1 / q_y branch value
    excess: int  # E: width of the first bracket minus one
    ktilde_last: int  # index of the last bracket (>= 1 by convention)
    a_prime: int  # width of the last bracket, 0 <= a_prime <= a

    @property
    def top_value(self) -> int:
        """Scan bound at distance k = 1 (first bracket)."""
        return self.m_div - self.shift


def mmax_params(cls: Classification, p: int, n: int) -> tuple:
    """Per-variable constants, one MmaxParams per shrinking variable (N_1 first).

    Not applicable when there is no shrinking variable or when q <= nmax for
    some shrinking variable (then no standard monomial is divisible by the
    lead term and the whole closed-form route is vacuous).
    """
    if cls.r == 0:
        raise NotApplicableError("no shrinking variable")
    qq = p**n
    out = []
    for rec in cls.neg:
        a, b = rec.a, rec.b
        K = qq - rec.nmax
        if K < 1:
            raise NotApplicableError(
                f"q = {qq} does not exceed the max power {rec.nmax} of x{rec.var}"
            )
        m_div, rem = divmod(qq - 1, a)
        y = q_y = None
        if b < a and rem >= b:
            shift, excess = 0, rem - b
        elif b < a:
            shift, excess = 1, rem - b + a
        else:
            d = b - rem  # positive: rem < a <= b
            y = a * ceil_div(d, a)
            q_y = y // a
            shift, excess = q_y, y - d
        kt = max(1, ceil_div(K - 1 - excess, a))
        a_prime = K - (1 + excess + a * (kt - 1))
        out.append(
            MmaxParams(
                var=rec.var,
                a=a,
                b=b,
                nmax=rec.nmax,
                m_div=m_div,
                rem=rem,
                y=y,
                q_y=q_y,
                shift=shift,
                excess=excess,
                ktilde_last=kt,
                a_prime=a_prime,
            )
        )
    return tuple(out)


def bracket_index(prm: MmaxParams, k: int) -> int:
    """Bracket number of distance k: 0 for k <= 1+E, then one per width a."""
    if k <= 1 + prm.excess:
        return 0
    return ceil_div(k - 1 - prm.excess, prm.a)


def mmax_closed(A, cls: Classification, params, q) -> int:
    """Largest valid scan step count for A, as the minimum of per-variable
    bracket-table values.  Requires the lead term to divide A."""
    qq = q.q if hasattr(q, "q") else int(q)
    if any(a < e for a, e in zip(A, cls.lead_exps)):
        raise ContractError("the lead term does not divide the monomial")
    if any(a >= qq for a in A):
        raise ContractError("monomial is not standard")
    best = None
    for prm in params:
        k = qq - A[prm.var - 1]
        val = prm.top_value - bracket_index(prm, k)
        if best is None or val < best:
            best = val
    return best


def params_summary(params) -> list:
    return [
        {
            "var": f"x{prm.var}",
            "a": prm.a,
            "b": prm.b,
            "m_div": prm.m_div,
            "rem": prm.rem,
            "y": prm.y,
            "q_y": prm.q_y,
            "shift": prm.shift,
            "excess": prm.excess,
            "ktilde_last": prm.ktilde_last,
            "a_prime": prm.a_prime,
        }
        for prm in params
    ]
