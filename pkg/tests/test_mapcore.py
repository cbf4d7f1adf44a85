import random

import pytest
from hypothesis import given, settings, strategies as st

from bmaps.mapcore import (
    canonical_form,
    canonical_key,
    delete_root_edge,
    edge_labels,
    empty_map,
    faces,
    flag_orientation,
    genus2x,
    insert_bridge,
    insert_nonbridge_edge,
    is_connected,
    is_orientable,
    is_unicellular,
    key_to_string,
    map_from_string,
    map_type,
    relabel,
    single_edge_map,
    twist,
    validate,
    vertices,
    white_corners,
)
from bmaps.mapstats import EdgeType, classify_root_edge, enumerate_by_type, enumerate_maps
from bmaps.partitions import Partition

from conftest import maps_of, maps_up_to

P = Partition


def test_single_edge_map():
    m = single_edge_map()
    validate(m)
    assert map_type(m).as_tuple() == (P([1]), P([1]), P([1]))
    assert genus2x(m) == 0 and is_orientable(m) and is_unicellular(m)
    assert [len(f) for f in faces(m)] == [4]
    assert delete_root_edge(m) == (empty_map(), empty_map())
    assert insert_bridge(empty_map(), empty_map()) == m


def test_projective_plane_map():
    (m,) = enumerate_by_type([2], [2], [2])
    assert genus2x(m) == 1 and not is_orientable(m)
    assert classify_root_edge(m) is EdgeType.TWISTED
    assert delete_root_edge(m) == (single_edge_map(),)


def test_path_rooted_at_middle():
    (m,) = enumerate_by_type([2], [1, 1], [2])
    assert genus2x(m) == 0 and is_unicellular(m)
    parts = delete_root_edge(m)
    assert len(parts) == 2
    assert sorted(p.n_edges for p in parts) == [0, 1]


def test_two_gluings_at_the_white_corner():
    m = single_edge_map()
    (p,) = white_corners(m)
    results = [insert_nonbridge_edge(m, p, bit) for bit in (0, 1)]
    assert sorted(len(faces(r)) for r in results) == [1, 2]
    assert canonical_key(results[0]) != canonical_key(results[1])
    assert sorted(classify_root_edge(r).value for r in results) == ["Border", "Twisted"]


def test_trees_are_planar():
    for m in maps_up_to(4):
        if len(vertices(m)) == m.n_edges + 1:
            assert genus2x(m) == 0 and is_unicellular(m)


def test_every_generated_map_is_valid():
    for m in maps_up_to(5):
        validate(m)
        assert is_connected(m)
        assert m.root in m.black


@pytest.mark.parametrize("n", range(0, 5))
def test_nonbridge_round_trip(n):
    for m in maps_of(n):
        if m.is_empty():
            continue
        for p in white_corners(m):
            for bit in (0, 1):
                assert delete_root_edge(insert_nonbridge_edge(m, p, bit)) == (m,)


def test_bridge_round_trip():
    by_size = {k: maps_of(k) for k in range(5)}
    for n1 in range(5):
        for n2 in range(5 - n1):
            for a in by_size[n1]:
                for b in by_size[n2]:
                    m = insert_bridge(a, b)
                    assert m.n_edges == n1 + n2 + 1
                    assert delete_root_edge(m) == (a, b)


def test_twist_of_single_edge():
    m = single_edge_map()
    assert twist(m, 1) == m


@pytest.mark.parametrize("n", range(1, 5))
def test_twist_involution_and_labels(n):
    for m in maps_of(n):
        subs_bridge = [classify_root_edge(s) is EdgeType.BRIDGE for s in _subs(m)]
        for i in range(1, n + 1):
            t = twist(m, i)
            assert twist(t, i) == m
            assert map_type(t).as_tuple()[:2] == map_type(m).as_tuple()[:2]
            if not subs_bridge[i - 1]:
                assert edge_labels(t) == edge_labels(m)
                assert [classify_root_edge(s) is EdgeType.BRIDGE for s in _subs(t)] == subs_bridge


@pytest.mark.parametrize("n", range(2, 5))
def test_nonbridge_twists_commute(n):
    for m in maps_of(n):
        free = [i for i, s in enumerate(_subs(m), 1) if classify_root_edge(s) is not EdgeType.BRIDGE]
        for i in free:
            for j in free:
                if i < j:
                    assert twist(twist(m, i), j) == twist(twist(m, j), i)


def _subs(m):
    from bmaps.mapcore import deletion_sequence

    return deletion_sequence(m)


def test_canonical_form():
    for m in maps_up_to(4):
        c = canonical_form(m)
        assert canonical_form(c) == c and canonical_key(c) == canonical_key(m)
        assert map_from_string(key_to_string(canonical_key(m))) == m
    assert canonical_key(single_edge_map()) == canonical_key(insert_bridge(empty_map(), empty_map()))


all_small = maps_up_to(4)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(all_small), st.randoms(use_true_random=False))
def test_key_ignores_token_names(m, rng):
    tokens = list(m.flags)
    fresh = rng.sample(range(10 * len(tokens) + 10), len(tokens))
    assert canonical_key(relabel(m, dict(zip(tokens, fresh)))) == canonical_key(m)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.booleans(), st.integers(0, 10**6)), max_size=5))
def test_untwisted_construction_stays_orientable(ops):
    """Bridges and plain (bit 0) insertions from a planar start keep a global orientation."""
    m = single_edge_map()
    for bridge, r in ops:
        if bridge:
            m = insert_bridge(m, single_edge_map()) if r % 2 else insert_bridge(single_edge_map(), m)
        else:
            corners = white_corners(m)
            p = corners[r % len(corners)]
            # exactly one of the two gluings respects the global orientation
            options = [insert_nonbridge_edge(m, p, bit) for bit in (0, 1)]
            oriented = [o for o in options if flag_orientation(o) is not None]
            assert len(oriented) == 1
            m = oriented[0]
        assert is_orientable(m)
