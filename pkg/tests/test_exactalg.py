from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bmaps.exactalg import (
    ALPHA,
    BETA,
    IndeterminateMismatch,
    NonPolynomial,
    NotInSpan,
    Poly,
    RatFunc,
    as_polynomial,
    b_basis,
    b_basis_decompose,
    poly_var,
    substitute_alpha_to_beta,
)

b = poly_var(BETA)
a = RatFunc.var(ALPHA)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions, max_size=5).map(lambda cs: Poly(cs, BETA))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_poly_examples():
    assert (1 + b) * (1 + b) == Poly([1, 2, 1], BETA)
    assert (b * b)(-1) == 1
    assert (b - b)(7) == 0
    assert (b - b).degree == -1


def test_json_round_trip():
    p = Poly([Fraction(1, 3), 0, -2], BETA)
    assert p.to_json() == ["1/3", "0/1", "-2/1"]
    assert Poly.from_json(p.to_json(), BETA) == p


def test_ratfunc_normalizes():
    assert (a * a - 1) / (a - 1) == a + 1
    assert (a / a) == 1
    assert a.inverse() + a.inverse() == RatFunc.const(2) / a
    with pytest.raises(ZeroDivisionError):
        a / RatFunc.const(0)


def test_alpha_to_beta():
    beta = RatFunc.var(BETA)
    assert substitute_alpha_to_beta(a - 1) == beta
    assert substitute_alpha_to_beta(a * a) == beta * beta + beta * 2 + 1
    assert substitute_alpha_to_beta((a - 1) / (a + 1)) == beta / (beta + 2)


def test_as_polynomial():
    beta = RatFunc.var(BETA)
    assert as_polynomial(beta * beta + beta) == Poly([0, 1, 1], BETA)
    assert as_polynomial(RatFunc.const(0, BETA)).is_zero()
    with pytest.raises(NonPolynomial):
        as_polynomial(beta / (beta + 2), context="triple")


def test_mixed_indeterminates_rejected():
    with pytest.raises(IndeterminateMismatch):
        poly_var(ALPHA) + poly_var(BETA)


def test_b_basis_examples():
    assert b_basis_decompose(b, 1) == [1]
    assert b_basis_decompose(b * b + (b + 1) * 2, 2) == [1, 2]
    with pytest.raises(NotInSpan):
        b_basis_decompose((b + 1) * (b + 1), 2)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p - p == Poly((), BETA)


@given(polys, polys, fractions)
def test_evaluation_is_a_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@given(polys, nonzero_polys)
def test_divmod(p, q):
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


@given(polys, nonzero_polys, nonzero_polys)
def test_ratfunc_cancels_common_factors(p, q, c):
    lhs = RatFunc(p * c, q * c)
    assert lhs == RatFunc(p, q)
    assert lhs.den.lc == 1


@given(st.integers(0, 6), st.lists(fractions, min_size=4, max_size=4))
def test_b_basis_decomposition_recovers_coefficients(g, cs):
    cs = cs[: g // 2 + 1]
    p = Poly((), BETA)
    for c, q in zip(cs, b_basis(g)):
        p = p + q.scale(c)
    got = b_basis_decompose(p, g)
    assert got == cs + [0] * (g // 2 + 1 - len(cs))
