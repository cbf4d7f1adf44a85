import pytest
from hypothesis import given, strategies as st

from bmaps.exactalg import ALPHA, RatFunc
from bmaps.partitions import Partition, all_partitions
from bmaps.symfun import (
    SymFunc,
    hall_scalar,
    m_to_p,
    monomial,
    p_product,
    p_to_m,
    power_sum,
    specialize_single_variable,
)

a = RatFunc.var(ALPHA)
P = Partition


def test_p_to_m_examples():
    assert p_to_m(power_sum([2])) == monomial([2])
    assert p_to_m(power_sum([1, 1])) == SymFunc(2, "m", {P([2]): 1, P([1, 1]): 2})
    assert m_to_p(p_to_m(power_sum([3, 1]))) == power_sum([3, 1])


def test_hall_scalar_examples():
    assert hall_scalar(power_sum([2]), power_sum([2])) == a * 2
    assert hall_scalar(power_sum([1, 1]), power_sum([1, 1])) == a * a * 2
    assert hall_scalar(power_sum([2]), power_sum([1, 1])) == 0


def test_p_product_examples():
    assert p_product(power_sum([2]), power_sum([1])) == power_sum([2, 1])
    f = power_sum([3, 1])
    assert p_product(SymFunc(0, "p", {P(): 1}), f) == f
    p1 = power_sum([1])
    assert p_product(p_product(p1, p1), p1) == power_sum([1, 1, 1])


def test_single_variable():
    assert specialize_single_variable(power_sum([2, 1])) == {3: RatFunc.const(1)}
    j2 = SymFunc(2, "p", {P([1, 1]): 1, P([2]): a})
    j11 = SymFunc(2, "p", {P([1, 1]): 1, P([2]): -1})
    assert specialize_single_variable(j2) == {2: a + 1}
    assert specialize_single_variable(j11) == {}


def test_mixing_degrees_fails():
    with pytest.raises(ValueError):
        power_sum([2]) + power_sum([1])
    with pytest.raises(ValueError):
        hall_scalar(power_sum([2]), power_sum([1]))


@st.composite
def symfuncs(draw, n):
    parts = all_partitions(n)
    coeffs = draw(st.lists(st.integers(-5, 5), min_size=len(parts), max_size=len(parts)))
    powers = draw(st.lists(st.integers(0, 2), min_size=len(parts), max_size=len(parts)))
    return SymFunc(n, "p", {lam: a**e * c for lam, c, e in zip(parts, coeffs, powers)})


@given(st.data(), st.integers(1, 5))
def test_basis_change_round_trip(data, n):
    f = data.draw(symfuncs(n))
    assert m_to_p(p_to_m(f)) == f


@given(st.data(), st.integers(1, 4))
def test_scalar_product_symmetric_bilinear(data, n):
    f, g, h = (data.draw(symfuncs(n)) for _ in range(3))
    assert hall_scalar(f, g) == hall_scalar(g, f)
    assert hall_scalar(f + g, h) == hall_scalar(f, h) + hall_scalar(g, h)
    assert hall_scalar(p_to_m(f), g) == hall_scalar(f, g)
