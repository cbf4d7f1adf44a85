from collections import Counter
from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from bmaps.partitions import (
    EMPTY,
    Partition,
    all_partitions,
    dominance_leq,
    down,
    splits,
    union,
    z_factor,
)


def brute_partitions(n):
    """Every weakly decreasing composition, built from all compositions of n."""
    out = set()
    for k in range(1, n + 1):
        for comp in product(range(1, n + 1), repeat=k):
            if sum(comp) == n:
                out.add(tuple(sorted(comp, reverse=True)))
    return out


def test_small_counts():
    assert all_partitions(0) == (EMPTY,)
    assert len(all_partitions(4)) == 5
    assert len(all_partitions(7)) == 15


@pytest.mark.parametrize("n", range(1, 7))
def test_matches_brute_force(n):
    assert set(all_partitions(n)) == brute_partitions(n)


def test_order_extends_dominance():
    for n in range(1, 8):
        parts = all_partitions(n)
        assert parts[0] == Partition([n]) and parts[-1] == Partition([1] * n)
        for i, lam in enumerate(parts):
            for mu in parts[i + 1 :]:
                assert not (dominance_leq(lam, mu) and lam != mu)


def test_dominance_examples():
    assert dominance_leq(Partition([1, 1, 1]), Partition([2, 1]))
    assert dominance_leq(Partition([2, 1]), Partition([3]))
    assert dominance_leq(Partition([2, 2]), Partition([3, 1]))
    assert not dominance_leq(Partition([3, 1]), Partition([2, 2]))


def test_z_factor_examples():
    assert z_factor(Partition([1, 1])) == 2
    assert z_factor(Partition([2, 1])) == 2
    assert z_factor(EMPTY) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_class_sizes_sum_to_factorial(n):
    # n!/z_lambda is the size of the conjugacy class of cycle type lambda
    assert sum(factorial(n) // z_factor(lam) for lam in all_partitions(n)) == factorial(n)


def test_union_and_down():
    assert union(Partition([2, 1]), Partition([3, 1])) == Partition([3, 2, 1, 1])
    assert union(Partition([1]), Partition([1])) == Partition([1, 1])
    assert union(Partition([4, 2]), EMPTY) == Partition([4, 2])
    assert down(Partition([3, 2, 2]), 2) == Partition([3, 2, 1])
    assert down(Partition([1, 1]), 1) == Partition([1])
    assert down(Partition([5]), 5) == Partition([4])
    with pytest.raises(ValueError):
        down(Partition([3]), 2)


def test_splits_examples():
    assert splits(Partition([2, 1]), (1, 2)) == [(Partition([1]), Partition([2]))]
    lam = Partition([3, 1, 1])
    assert splits(lam, (5,)) == [(lam,)]
    assert splits(Partition([1, 1]), (1, 1)) == [(Partition([1]), Partition([1]))]
    with pytest.raises(ValueError):
        splits(lam, (2, 2))


def test_text_form():
    assert Partition.parse("3,2,1") == Partition([3, 2, 1])
    assert Partition.parse("") == EMPTY
    assert str(Partition([3, 2, 1])) == "3,2,1"


parts = st.lists(st.integers(1, 6), max_size=6).map(Partition)


@given(parts, parts)
def test_union_is_commutative_multiset_sum(a, b):
    assert union(a, b) == union(b, a)
    assert Counter(union(a, b)) == Counter(a) + Counter(b)


@given(parts, st.integers(0, 6))
def test_splits_reassemble(mu, k):
    if k > sum(mu):
        return
    found = splits(mu, (k, sum(mu) - k))
    assert len(set(found)) == len(found)
    for a, b in found:
        assert union(a, b) == mu and sum(a) == k
