import itertools

import pytest

from hkbinomial import (
    Binomial,
    ConstantTermError,
    DegenerateBinomialError,
    DimensionError,
    ParseError,
    PrimePower,
    Term,
    ZeroCoefficientError,
    deglex_compare,
    normalize,
    parse_binomial,
    parse_monomial,
    render,
)
from hkbinomial.algebra import GREATER, LESS, EQUAL
from tests.conftest import random_binomials


def test_deglex_degree_dominates():
    assert deglex_compare((3, 0), (0, 2)) == GREATER


def test_deglex_tie_break_last_variable_most_significant():
    assert deglex_compare((2, 1), (0, 3)) == LESS
    assert deglex_compare((1, 1), (1, 1)) == EQUAL


def test_deglex_dimension_mismatch():
    with pytest.raises(DimensionError):
        deglex_compare((1, 2), (1, 2, 3))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_deglex_total_order_exhaustive(m):
    vecs = list(itertools.product(range(4), repeat=m))
    for u in vecs:
        assert deglex_compare(u, u) == EQUAL
        for v in vecs:
            c = deglex_compare(u, v)
            assert c == -deglex_compare(v, u)
            if u != v:
                assert c != EQUAL
            if c == GREATER:
                assert sum(u) >= sum(v)
    if m == 3:
        vecs = list(itertools.product(range(3), repeat=m))
    for u, v, w in itertools.product(vecs, repeat=3):
        if deglex_compare(u, v) != LESS and deglex_compare(v, w) != LESS:
            assert deglex_compare(u, w) != LESS


def test_normalize_by_degree():
    f = normalize(5, Term(1, (3, 0)), Term(4, (0, 2)))
    assert f.lead.exps == (3, 0)
    assert f.trail == Term(4, (0, 2))


def test_normalize_tie_break():
    f = normalize(3, Term(2, (1, 1)), Term(1, (2, 0)))
    assert f.lead.exps == (1, 1)


def test_normalize_zero_coefficient():
    with pytest.raises(ZeroCoefficientError):
        normalize(5, Term(5, (2, 0)), Term(1, (0, 1)))


def test_normalize_degenerate_and_constant():
    with pytest.raises(DegenerateBinomialError):
        normalize(5, Term(1, (2, 1)), Term(2, (2, 1)))
    with pytest.raises(ConstantTermError):
        normalize(5, Term(1, (0, 0)), Term(2, (2, 1)))


def test_normalize_swap_invariant_and_idempotent():
    a, b = Term(2, (1, 3)), Term(4, (4, 0))
    f1 = normalize(5, a, b)
    f2 = normalize(5, b, a)
    assert f1 == f2
    assert normalize(5, f1.lead, f1.trail) == f1


def test_parse_basic():
    f = parse_binomial("x1^3 - x2^2", 5)
    assert f.lead == Term(1, (3, 0))
    assert f.trail == Term(4, (0, 2))


def test_parse_char2_collapse():
    with pytest.raises(DegenerateBinomialError):
        parse_binomial("x1*x2^2 + x1*x2^2", 2)


def test_parse_combines_and_orders():
    f = parse_binomial("x1^3*x2 - x1*x2", 3)
    assert f.lead.exps == (3, 1)
    assert f.trail == Term(2, (1, 1))


def test_parse_coefficients_and_whitespace():
    f = parse_binomial(" 2*x1^3*x2  -  x2^5 ", 7)
    assert f.lead == Term(2, (3, 1)) or f.trail == Term(2, (3, 1))
    assert f.m == 2


def test_parse_vars_override():
    f = parse_binomial("x1^2 - x2", 5, num_vars=3)
    assert f.m == 3
    assert f.lead.exps == (2, 0, 0)
    with pytest.raises(ParseError):
        parse_binomial("x1 - x3", 5, num_vars=2)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_binomial("x1 + + x2", 5)
    with pytest.raises(ParseError):
        parse_binomial("y1 - x2", 5)
    with pytest.raises(DegenerateBinomialError):
        parse_binomial("x1 + x2 + x1^2", 5)
    with pytest.raises(ConstantTermError):
        parse_binomial("x1 - 3", 5)


def test_parse_render_round_trip():
    for f, _, _ in random_binomials(99, 40):
        assert parse_binomial(render(f), f.p, f.m) == f


def test_parse_monomial_forms():
    assert parse_monomial("x1^4*x2") == (4, 1)
    assert parse_monomial("4,1") == (4, 1)
    assert parse_monomial("x2^3", num_vars=3) == (0, 3, 0)
    with pytest.raises(ParseError):
        parse_monomial("2*x1")


def test_prime_power():
    q = PrimePower(5, 3)
    assert q.q == 125
    with pytest.raises(Exception):
        PrimePower(6, 2)


def test_binomial_rejects_unise_lead():
    with pytest.raises(Exception):
        Binomial(p=5, m=2, lead=Term(1, (0, 2)), trail=Term(1, (3, 0)))
