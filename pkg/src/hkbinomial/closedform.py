"""The iterative closed-form count and its building blocks.

Layout of the computation, all in the delta-sorted frame:

* phi_recursive: for a fixed scan bound, counts the non-members among
  monomials whose shrinking exponents are fixed while the zero and
  growing exponents range freely.  Built from suffix chains over the
  growing variables followed by a fold over the zero variables.
* g_chain: counts, per shrinking variable, the non-members that arise
  once the lead term stops dividing (membership then reduces to trail
  divisibility); a single descending product chain.
* hk_closed_form: assembles the total by enumerating each shrinking
  variable's exponent through its bracket table, folding levels from the
  least negative variable outward with running suffix sums.

Everything is exact integer arithmetic; no floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Binomial
from .classify import Classification, classify
from .errors import DomainError, FormulaDomainError, NotApplicableError
from .mmax import MmaxParams, mmax_params


# ---------------------------------------------------------------------------
# phi: counts over the zero/growing block at a fixed scan bound


def _minc(M, P, qq):
    """Escape threshold width for one growing variable: min(q - pmin, M*dp)."""
    cap = qq - P.pmin
    grow = M * P.dp
    return cap if grow >= cap else grow


def _phi_value(M: int, cls: Classification, qq: int) -> int:
    """Chain evaluation of the block count at scan bound M (t >= 1)."""
    pos = cls.pos
    t, s = cls.t, cls.s
    A, C, D, Dt = 0, 1, 1, 0
    for qi in range(t, 1, -1):
        P = pos[qi - 1]
        minc = _minc(M, P, qq)
        rest = qq - P.pmin - minc
        if rest > 0:
            h = qq - minc - P.pmax
            if h < 0:
                h = 0
            Dt_new = minc * A + h * Dt + (rest - h) * D + P.pmin * C
        else:
            Dt_new = minc * A + P.pmin * C
        A, C, D, Dt = (
            (qq - P.pmin) * A + P.pmin * C,
            C * qq,
            minc * A + rest * D + P.pmin * C,
            Dt_new,
        )
    P = pos[0]
    minc = _minc(M, P, qq)
    rest = qq - P.pmin - minc
    if rest > 0:
        h = qq - minc - P.pmax
        if h < 0:
            h = 0
        B = h * Dt + (rest - h) * D
    else:
        B = 0
    S = A * minc + B + C * P.pmin
    for j in range(1, s + 1):
        z = cls.zero[j - 1]
        S = S * (qq - z.zmin) + qq ** (t + j - 1) * z.zmin
    return S


def phi_recursive(M: int, cls: Classification, p: int, n: int) -> int:
    """Non-member count over the zero/growing block at scan bound M."""
    if cls.t == 0:
        raise NotApplicableError("no growing variable: the block count is undefined")
    if M < 1:
        raise DomainError(f"scan bound must be >= 1, got {M}")
    return _phi_value(M, cls, p**n)


@dataclass(frozen=True)
class PhiTables:
    """Intermediate chain values, kept for auditing."""

    m_bound: int
    minc: tuple
    s_: tuple
    d_: tuple
    h_: tuple
    chain: tuple  # rows (q, A_q, C_q, D_q, Dt_q) for q = t+1 down to 2
    s_values: tuple  # folded values for j = 0..s
    phi: int


def phi_tables(M: int, cls: Classification, p: int, n: int) -> PhiTables:
    if cls.t == 0:
        raise NotApplicableError("no growing variable")
    if M < 1:
        raise DomainError(f"scan bound must be >= 1, got {M}")
    qq = p**n
    t, s = cls.t, cls.s
    minc = tuple(_minc(M, P, qq) for P in cls.pos)
    s_ = tuple(min(P.pmax - 1, qq - minc[k] - 1) for k, P in enumerate(cls.pos))
    d_ = tuple(s_[k] - P.pmin + 1 for k, P in enumerate(cls.pos))
    h_ = tuple(max(0, (qq - minc[k]) - P.pmax) for k, P in enumerate(cls.pos))
    A, C, D, Dt = 0, 1, 1, 0
    chain = [(t + 1, A, C, D, Dt)]
    for qi in range(t, 1, -1):
        P = cls.pos[qi - 1]
        k = qi - 1
        if minc[k] < qq - P.pmin:
            Dt_new = minc[k] * A + h_[k] * Dt + d_[k] * D + P.pmin * C
        else:
            Dt_new = minc[k] * A + P.pmin * C
        A, C, D, Dt = (
            (qq - P.pmin) * A + P.pmin * C,
            qq ** (t - qi + 1),
            minc[k] * A + (qq - P.pmin - minc[k]) * D + P.pmin * C,
            Dt_new,
        )
        chain.append((qi, A, C, D, Dt))
    P = cls.pos[0]
    B = (h_[0] * Dt + d_[0] * D) if minc[0] < qq - P.pmin else 0
    S = A * minc[0] + B + C * P.pmin
    s_values = [S]
    for j in range(1, s + 1):
        z = cls.zero[j - 1]
        S = S * (qq - z.zmin) + qq ** (t + j - 1) * z.zmin
        s_values.append(S)
    return PhiTables(M, minc, s_, d_, h_, tuple(chain), tuple(s_values), S)


def _phi_product(M: int, cls: Classification, p: int, n: int) -> int:
    """Independent product form of the block count (used to cross-check the
    chains): escapees-by-small-exponent plus the window product minus the
    all-windows-above-trail product, then the zero-variable fold."""
    qq = p**n
    t, s = cls.t, cls.s
    prod_div = 1
    prod_rest = 1
    prod_h = 1
    for P in cls.pos:
        minc = _minc(M, P, qq)
        rest = qq - P.pmin - minc
        prod_div *= max(0, qq - P.pmin)
        prod_rest *= rest
        prod_h *= max(0, qq - minc - P.pmax)
    S = (qq**t - prod_div) + (prod_rest - prod_h)
    for j in range(1, s + 1):
        z = cls.zero[j - 1]
        S = S * (qq - z.zmin) + qq ** (t + j - 1) * z.zmin
    return S


def phi_closed_simple(M: int, cls: Classification, p: int, n: int) -> int:
    """Single-formula block count, valid only in the simple case where
    every escape threshold sits strictly between the two trivial regimes:
    q - pmax <= minc_q < q - pmin for every growing variable.
    """
    if cls.t == 0:
        raise NotApplicableError("no growing variable")
    if M < 1:
        raise DomainError(f"scan bound must be >= 1, got {M}")
    qq = p**n
    t, s = cls.t, cls.s
    mincs = []
    for P in cls.pos:
        minc = _minc(M, P, qq)
        if not (qq - P.pmax <= minc < qq - P.pmin):
            raise NotApplicableError(
                f"simple-case guard fails for x{P.var}: "
                f"need {qq - P.pmax} <= {minc} < {qq - P.pmin}"
            )
        mincs.append(minc)
    base = 1
    for P in cls.pos:
        base *= qq - M * P.dp
    acc = base
    pmins = [P.pmin for P in cls.pos]
    for l in range(2, t + 1):
        e_l = 0
        for subset in itertools.combinations(range(t), l):
            for picks in itertools.product((0, 1), repeat=l):
                if all(picks) or not any(picks):
                    continue  # need a mix of both item types
                prod = 1
                for pos_idx, pick in zip(subset, picks):
                    prod *= mincs[pos_idx] if pick else pmins[pos_idx]
                e_l += prod
        acc += (-1) ** l * e_l * qq ** (t - l)
    zmins = [z.zmin for z in cls.zero]
    phi = acc
    for z in zmins:
        phi *= qq - z
    for k in range(1, s + 1):
        e_k = sum(
            _prod(zmins[i] for i in subset)
            for subset in itertools.combinations(range(s), k)
        )
        phi += (-1) ** (k + 1) * qq ** (t + s - k) * e_k
    return phi


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


# ---------------------------------------------------------------------------
# G chains: counts once the lead term has stopped dividing


@dataclass(frozen=True)
class GChains:
    g_p: tuple  # value for P_q, q = 1..t-1 (empty when t <= 1)
    g_z: tuple  # value for Z_l, l = 1..s
    g_n: tuple  # value for N_i, i = 1..r


def g_chain(cls: Classification, p: int, n: int) -> GChains:
    """Descending product chain seeded at the top growing variable.

    The value attached to a variable counts the tuples of later-sorted
    exponents that break trail divisibility; each step consumes the
    variable immediately above.  Chain segments for absent variable
    kinds simply pass the running value through.
    """
    if cls.r == 0 or cls.t == 0:
        raise NotApplicableError("chain needs a shrinking and a growing variable")
    qq = p**n
    t, s, r = cls.t, cls.s, cls.r
    seq = [("P", qi) for qi in range(t - 1, 0, -1)]
    seq += [("Z", l) for l in range(1, s + 1)]
    seq += [("N", i) for i in range(1, r + 1)]

    def consumed(kind, idx):
        # weight = trail-term exponent of the variable, count of variables above it
        if kind == "P":
            P = cls.pos[idx - 1]
            return P.pmax, t - idx
        if kind == "Z":
            Z = cls.zero[idx - 1]
            return Z.zmin, t + idx - 1
        N = cls.neg[idx - 1]
        return N.nmin, s + t + idx - 1

    g_p, g_z, g_n = {}, {}, {}
    prev = ("P", t)
    cur = None
    for kind, idx in seq:
        if cur is None:
            cur = min(cls.pos[t - 1].pmax, qq)  # seed consumes P_t
        else:
            w, above = consumed(*prev)
            cur = max(0, qq - w) * cur + min(w, qq) * qq**above
        {"P": g_p, "Z": g_z, "N": g_n}[kind][idx] = cur
        prev = (kind, idx)
    return GChains(
        g_p=tuple(g_p[qi] for qi in range(1, t)),
        g_z=tuple(g_z[l] for l in range(1, s + 1)),
        g_n=tuple(g_n[i] for i in range(1, r + 1)),
    )


def _g_complement(cls: Classification, p: int, n: int, i: int) -> int:
    """Reference form of the chain value for N_i: all later-sorted tuples
    minus those keeping every exponent at or above its trail power."""
    qq = p**n
    prod, cnt = 1, 0
    for k in range(1, i):
        prod *= max(0, qq - cls.neg[k - 1].nmin)
        cnt += 1
    for z in cls.zero:
        prod *= max(0, qq - z.zmin)
        cnt += 1
    for P in cls.pos:
        prod *= max(0, qq - P.pmax)
        cnt += 1
    return qq**cnt - prod


# ---------------------------------------------------------------------------
# full assembly


@dataclass(frozen=True)
class ClosedFormTables:
    g_p: tuple
    g_z: tuple
    g_n: tuple
    d_consts: tuple  # first-bracket-width constant per shrinking variable
    xtilde: tuple  # last offset contributed by each shrinking variable
    ints_level_top: tuple  # integral vector at the outermost level


def _widths(prm: MmaxParams):
    """Bracket widths [first, a, ..., a, last]; a zero-width last bracket is
    dropped so the list length equals the number of populated brackets."""
    w = [1 + prm.excess]
    w.extend([prm.a] * (prm.ktilde_last - 1))
    if prm.a_prime > 0:
        w.append(prm.a_prime)
    return w


def _setup(f: Binomial, p: int, n: int):
    cls = classify(f)
    qq = p**n
    if cls.t == 0:
        raise NotApplicableError("no growing variable (t = 0): use the direct count")
    for z in cls.zero:
        if z.zmin > qq - 1:
            raise NotApplicableError(
                f"lead power of x{z.var} exceeds q-1: no standard monomial divisible"
            )
    for P in cls.pos:
        if P.pmin > qq - 1:
            raise NotApplicableError(
                f"lead power of x{P.var} exceeds q-1: no standard monomial divisible"
            )
    params = mmax_params(cls, p, n)
    return cls, qq, params


def _levels(cls, qq, params, p, n, naive=False):
    """Integral vectors per shrinking level, outermost last."""
    r, s, t = cls.r, cls.s, cls.t
    V = [prm.top_value for prm in params]
    Vr = V[r - 1]
    if Vr < 1:
        raise FormulaDomainError("top scan bound below 1")
    gch = g_chain(cls, p, n)
    level = [_phi_value(Vr - j, cls, qq) for j in range(Vr)]
    for i in range(2, r + 1):
        prm = params[i - 2]
        rec = cls.neg[i - 2]
        delta = Vr - V[i - 2]
        widths = _widths(prm)
        L = len(widths)
        const = (rec.nmax - rec.nmin) * gch.g_n[i - 2] + rec.nmin * qq ** (s + t + i - 2)
        if naive:
            level = [
                sum(
                    widths[jp] * level[max(j, jp + delta)]
                    for jp in range(L)
                )
                + const
                for j in range(Vr)
            ]
            continue
        K = qq - prm.nmax
        lo = max(0, -delta)
        suffix = [0] * (L + 1)
        for jp in range(L - 1, lo - 1, -1):
            suffix[jp] = suffix[jp + 1] + widths[jp] * level[jp + delta]
        new = []
        for j in range(Vr):
            x = j - delta
            stay = 0 if x < 0 else min(1 + prm.excess + prm.a * x, K)
            tail_from = max(x + 1, lo)
            tail = suffix[tail_from] if tail_from <= L else 0
            new.append(stay * level[j] + tail + const)
        level = new
    return level, gch, V


def _assemble(f: Binomial, p: int, n: int, naive=False):
    cls, qq, params = _setup(f, p, n)
    r, s, t = cls.r, cls.s, cls.t
    level, gch, V = _levels(cls, qq, params, p, n, naive=naive)
    prm = params[r - 1]
    rec = cls.neg[r - 1]
    widths = _widths(prm)
    total = sum(w * level[jp] for jp, w in enumerate(widths))
    total += (rec.nmax - rec.nmin) * gch.g_n[r - 1] + rec.nmin * qq ** (s + t + r - 1)
    return total, cls, params, gch, level, V


def hk_closed_form(f: Binomial, p: int, n: int) -> int:
    """Exact quotient length via the iterative closed form.

    Applicable when there is at least one growing variable and every lead
    exponent is at most q-1; raises NotApplicableError otherwise so the
    engine layer can fall back to enumeration.
    """
    total, *_ = _assemble(f, p, n)
    return total


def hk_closed_form_tables(f: Binomial, p: int, n: int):
    """Closed-form value plus the audit tables and per-variable constants."""
    total, cls, params, gch, level, V = _assemble(f, p, n)
    Vr = V[cls.r - 1]
    d_consts = tuple(
        (1 + prm.excess) + prm.a * (V[i] - Vr) for i, prm in enumerate(params)
    )
    xtilde = tuple((Vr - V[i]) + prm.ktilde_last for i, prm in enumerate(params))
    tables = ClosedFormTables(
        g_p=gch.g_p,
        g_z=gch.g_z,
        g_n=gch.g_n,
        d_consts=d_consts,
        xtilde=xtilde,
        ints_level_top=tuple(level),
    )
    return total, tables, params


def _hk_closed_form_reference(f: Binomial, p: int, n: int) -> int:
    """Quadratic-time assembly without suffix sums; tests compare it with
    the production path."""
    total, *_ = _assemble(f, p, n, naive=True)
    return total
