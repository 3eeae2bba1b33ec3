"""Oriented node encoding and graph container behavior."""

import pytest
from hypothesis import given, strategies as st

from gbwt.model import (FORWARD, REVERSE, Graph, ReservedIdError,
                        decode_oriented, encode_oriented, flip, path_is_valid,
                        reverse_path)


@given(st.integers(min_value=1, max_value=10**9), st.integers(min_value=0, max_value=1))
def test_encode_decode_round_trip(base, orientation):
    node = encode_oriented(base, orientation)
    assert node >= 2
    assert decode_oriented(node) == (base, orientation)
    assert flip(flip(node)) == node
    assert decode_oriented(flip(node)) == (base, 1 - orientation)


def test_encoding_rejects_reserved_ids():
    with pytest.raises(ReservedIdError):
        encode_oriented(0, FORWARD)
    with pytest.raises(ValueError):
        encode_oriented(3, 2)
    with pytest.raises(ReservedIdError):
        decode_oriented(1)
    with pytest.raises(ReservedIdError):
        flip(0)


def test_reverse_path_example():
    path = (encode_oriented(1, FORWARD), encode_oriented(2, REVERSE))
    assert reverse_path(path) == (encode_oriented(2, FORWARD),
                                  encode_oriented(1, REVERSE))
    assert reverse_path(reverse_path(path)) == path
    assert reverse_path(()) == ()


def test_graph_basic_structure():
    g = Graph()
    g.add_edge(3, 5)
    g.add_edge(3, 4)
    g.add_edge(3, 4)
    assert g.successors(3) == [4, 5]
    assert g.predecessors(4) == [3]
    assert g.has_edge(3, 5) and not g.has_edge(5, 3)
    assert g.id_range() == (3, 5)
    assert list(g.edges()) == [(3, 4), (3, 5)]


def test_graph_orientation_closed_mirrors_edges():
    g = Graph(orientation_closed=True)
    u, v = encode_oriented(1, FORWARD), encode_oriented(2, FORWARD)
    g.add_edge(u, v)
    assert g.has_edge(flip(v), flip(u))
    assert flip(u) in g.nodes and flip(v) in g.nodes


def test_graph_empty_and_reserved():
    g = Graph()
    assert g.id_range() == (1, 0)
    with pytest.raises(ReservedIdError):
        g.add_node(0)


def test_path_is_valid_diagnostics():
    g = Graph()
    g.add_edge(1, 2)
    g.add_node(9)
    assert path_is_valid(g, (1, 2)) == (True, None)
    ok, why = path_is_valid(g, (1, 3))
    assert not ok and "node 3" in why
    ok, why = path_is_valid(g, (2, 9))
    assert not ok and "(2, 9)" in why and "step 0" in why
    assert path_is_valid(g, ()) == (True, None)
