import pytest
from hypothesis import given, settings, strategies as st

from bmaps.exactalg import ALPHA, BETA, Poly, RatFunc
from bmaps.hseries import (
    HTable,
    TripleSeries,
    build_phi,
    degree_bound_violations,
    exp_series,
    expansion_check,
    extract_h,
    log_series,
    marginal_sum_check,
    symmetry_check,
    unit,
)
from bmaps.partitions import EMPTY, Partition, all_partitions

a = RatFunc.var(ALPHA)
P = Partition
b = Poly([0, 1], BETA)
one1 = (P([1]), P([1]), P([1]))


def h_at(n):
    return extract_h(n)


def test_phi_low_degrees():
    phi = build_phi(2)
    assert phi.constant() == 1
    assert phi.slices[1] == {one1: a.inverse()}
    two = (P([2]), P([2]), P([2]))
    want = a / ((a + 1) * 2) - ((a + 1) * a * 2).inverse()
    assert phi[two] == want
    assert phi[two] == (a - 1) / (a * 2)


def test_log_by_hand():
    c = RatFunc.const(3)
    series = unit(2)
    series.slices[1] = {one1: c}
    lg1 = log_series(TripleSeries(1, {0: dict(series.slices[0]), 1: dict(series.slices[1])}))
    assert lg1.slices[1] == {one1: c}
    lg2 = log_series(series)
    assert lg2.slices[2] == {(P([1, 1]),) * 3: -c * c / 2}


def test_log_rejects_bad_constant():
    with pytest.raises(ValueError):
        log_series(TripleSeries(1, {0: {(EMPTY,) * 3: RatFunc.const(2)}}))


@st.composite
def small_series(draw):
    """Random degree <= 3 series without constant term, coefficients in Q(alpha)."""
    out = TripleSeries(3)
    for n in range(1, 4):
        parts = all_partitions(n)
        keys = draw(
            st.lists(st.tuples(*(st.sampled_from(parts),) * 3), max_size=3, unique=True)
        )
        sl = {}
        for k in keys:
            c = draw(st.integers(-3, 3))
            e = draw(st.integers(-1, 1))
            if c:
                sl[k] = a**e * c if e >= 0 else a.inverse() * c
        out.slices[n] = sl
    return out


@settings(max_examples=25, deadline=None)
@given(small_series())
def test_log_inverts_exp(f):
    assert log_series(exp_series(f)).equals(f)


def test_log_of_phi_exponentiates_back():
    phi = build_phi(3)
    assert exp_series(log_series(phi)).equals(phi)


def test_degree_two_hand_values():
    table = h_at(2)
    assert table[((1,), (1,), (1,))] == Poly([1], BETA)
    assert table[((2,), (2,), (2,))] == b
    assert table[((2,), (2,), (1, 1))] == Poly([1], BETA)
    assert table[((2,), (1, 1), (2,))] == Poly([1], BETA)
    assert table[((1, 1), (1, 1), (2,))].is_zero()


@pytest.mark.parametrize("n", range(1, 5))
def test_structural_checks(n):
    table = h_at(4)
    assert degree_bound_violations(table, n) == []
    assert marginal_sum_check(table, n) == []
    assert expansion_check(table, n) == []
    assert symmetry_check(table, n) == []


def test_marginal_examples():
    table = h_at(2)
    two = P([2])
    assert sum((table.entries[2][(two, two, t)] for t in all_partitions(2)), Poly((), BETA)) == b + 1
    assert all(not table.entries[2][(P([1, 1]), P([1, 1]), t)] for t in all_partitions(2))


def test_json_and_csv_round_trip(tmp_path):
    table = h_at(3)
    path = tmp_path / "h.json"
    table.write_json(path, 3)
    back = HTable.from_json(__import__("json").loads(path.read_text()))
    assert back.entries[3] == table.entries[3]
    table.write_csv(tmp_path / "h.csv", 3)
    lines = (tmp_path / "h.csv").read_text().splitlines()
    assert lines[0] == "mu,nu,tau,h" and len(lines) == 1 + 27
