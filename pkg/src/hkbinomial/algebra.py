"""Terms, binomials, and the degree-lexicographic term order.

Exponent vectors are plain tuples of nonnegative ints, one entry per
variable.  Coefficients are elements of the prime field F_p stored as
least nonnegative residues.  Everything here is immutable and pure, so
all operations are safe under unrestricted concurrent use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    ConstantTermError,
    DegenerateBinomialError,
    DimensionError,
    DomainError,
    ParseError,
    ZeroCoefficientError,
)

# deglex_compare return values
LESS, EQUAL, GREATER = -1, 0, 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def total_degree(u) -> int:
    return sum(u)


def deglex_compare(u, v) -> int:
    """Compare exponent vectors by total degree, ties broken lexicographically
    with the last variable most significant.  Returns -1, 0 or 1.
    """
    if len(u) != len(v):
        raise DimensionError(
            f"cannot compare exponent vectors of lengths {len(u)} and {len(v)}"
        )
    du, dv = sum(u), sum(v)
    if du != dv:
        return GREATER if du > dv else LESS
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            return GREATER if a > b else LESS
    return EQUAL


@dataclass(frozen=True)
class Term:
    """A scalar coefficient times a monomial."""

    coeff: int
    exps: tuple

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise DomainError(f"negative exponent in {self.exps}")

    @property
    def degree(self) -> int:
        return sum(self.exps)


@dataclass(frozen=True)
class PrimePower:
    """q = p^n, computed exactly."""

    p: int
    n: int
    q: int = field(init=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if self.n < 1:
            raise DomainError(f"exponent n must be positive, got {self.n}")
        object.__setattr__(self, "q", self.p**self.n)


@dataclass(frozen=True)
class Binomial:
    """A two-term polynomial over F_p, with `lead` deglex-greater than `trail`.

    Invariants enforced at construction: distinct exponent vectors, nonzero
    coefficients mod p, no constant term, lead strictly greater in deglex.
    """

    p: int
    m: int
    lead: Term
    trail: Term

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if len(self.lead.exps) != self.m or len(self.trail.exps) != self.m:
            raise DimensionError("term length does not match variable count")
        for t in (self.lead, self.trail):
            if not 0 < t.coeff < self.p:
                raise ZeroCoefficientError(f"coefficient {t.coeff} not in F_{self.p}*")
            if t.degree == 0:
                raise ConstantTermError("terms must have total degree >= 1")
        if self.lead.exps == self.trail.exps:
            raise DegenerateBinomialError("the two terms share an exponent vector")
        if deglex_compare(self.lead.exps, self.trail.exps) != GREATER:
            raise DomainError("lead term is not deglex-greater than trail term")


def normalize(p: int, term_a: Term, term_b: Term) -> Binomial:
    """Order two terms into a Binomial, reducing coefficients mod p."""
    if len(term_a.exps) != len(term_b.exps):
        raise DimensionError("terms with different numbers of variables")
    terms = []
    for t in (term_a, term_b):
        c = t.coeff % p
        if c == 0:
            raise ZeroCoefficientError(f"coefficient {t.coeff} is 0 mod {p}")
        if t.degree == 0:
            raise ConstantTermError("constant term: polynomial not in the maximal ideal")
        terms.append(Term(c, tuple(t.exps)))
    a, b = terms
    if a.exps == b.exps:
        raise DegenerateBinomialError("terms share an exponent vector")
    if deglex_compare(a.exps, b.exps) == GREATER:
        lead, trail = a, b
    else:
        lead, trail = b, a
    return Binomial(p=p, m=len(a.exps), lead=lead, trail=trail)


_FACTOR_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")
_INT_RE = re.compile(r"\d+$")
_TERM_SPLIT_RE = re.compile(r"([+-])")


def _parse_term(chunk: str, sign: int):
    """Parse one signed term into (coeff, {var_index: exp})."""
    parts = chunk.split("*")
    coeff = sign
    exps = {}
    for k, part in enumerate(parts):
        if not part:
            raise ParseError(f"empty factor in term {chunk!r}")
        if _INT_RE.match(part):
            if k != 0:
                raise ParseError(f"integer factor must come first in {chunk!r}")
            coeff *= int(part)
            continue
        mt = _FACTOR_RE.match(part)
        if not mt:
            raise ParseError(f"bad factor {part!r} in term {chunk!r}")
        idx = int(mt.group(1))
        if idx < 1:
            raise ParseError(f"variables are 1-indexed, got x{idx}")
        exp = int(mt.group(2)) if mt.group(2) else 1
        exps[idx] = exps.get(idx, 0) + exp
    return coeff, exps


def parse_binomial(text: str, p: int, num_vars: int | None = None) -> Binomial:
    """Parse ASCII polynomial text into a normalized Binomial.

    Grammar: term := [int "*"] factor ("*" factor)*; factor := var ["^" int];
    var := "x" int (1-indexed); poly := term (("+"|"-") term)*.  Whitespace is
    ignored.  Like terms are combined mod p; exactly two distinct monomials
    with nonzero coefficients must remain.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT_RE.split(s)[1:]  # sign, chunk, sign, chunk, ...
    if len(pieces) % 2 != 0:
        raise ParseError(f"dangling sign in {text!r}")
    raw = []
    max_var = 0
    for sgn, chunk in zip(pieces[::2], pieces[1::2]):
        coeff, exps = _parse_term(chunk, 1 if sgn == "+" else -1)
        raw.append((coeff, exps))
        if exps:
            max_var = max(max_var, max(exps))
    m = num_vars if num_vars is not None else max_var
    if m < 1:
        raise ParseError("no variables found")
    if max_var > m:
        raise ParseError(f"variable x{max_var} exceeds declared count {m}")
    combined = {}
    for coeff, exps in raw:
        vec = tuple(exps.get(i, 0) for i in range(1, m + 1))
        combined[vec] = (combined.get(vec, 0) + coeff) % p
    monomials = [(vec, c) for vec, c in combined.items() if c != 0]
    if len(monomials) != 2:
        raise DegenerateBinomialError(
            f"expected exactly 2 distinct monomials after combining, got {len(monomials)}"
        )
    (va, ca), (vb, cb) = monomials
    return normalize(p, Term(ca, va), Term(cb, vb))


def render_term(t: Term) -> str:
    facs = []
    for i, e in enumerate(t.exps):
        if e == 1:
            facs.append(f"x{i + 1}")
        elif e > 1:
            facs.append(f"x{i + 1}^{e}")
    if not facs:
        return str(t.coeff)
    if t.coeff != 1:
        facs.insert(0, str(t.coeff))
    return "*".join(facs)


def render(b: Binomial) -> str:
    """Canonical text form; parse_binomial(render(b), b.p, b.m) round-trips."""
    return f"{render_term(b.lead)} + {render_term(b.trail)}"


def parse_monomial(text: str, num_vars: int | None = None) -> tuple:
    """Parse a single monomial ("x1^4*x2") or a comma list ("4,1") of exponents."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty monomial")
    if re.match(r"^\d+(,\d+)*$", s):
        vec = tuple(int(x) for x in s.split(","))
        if num_vars is not None and len(vec) != num_vars:
            raise DimensionError(
                f"expected {num_vars} exponents, got {len(vec)}"
            )
        return vec
    coeff, exps = _parse_term(s, 1)
    if coeff != 1:
        raise ParseError("a monomial must not carry a coefficient")
    max_var = max(exps) if exps else 0
    m = num_vars if num_vars is not None else max_var
    if max_var > m:
        raise ParseError(f"variable x{max_var} exceeds declared count {m}")
    return tuple(exps.get(i, 0) for i in range(1, m + 1))
