import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from folkman.graph6 import (Graph6Error, decode_any, decode_graph6,
                            decode_sparse6, encode_graph6)
from folkman.graphs import Graph

from oracles import random_graph


def test_empty_five():
    g = decode_graph6("D??")
    assert g.n == 5 and g.edge_count == 0
    assert encode_graph6(Graph.empty(5)) == "D??"


def test_k4():
    g = decode_graph6("C~")
    assert g == Graph.complete(4)
    assert encode_graph6(Graph.complete(4)) == "C~"


def test_header_tolerated():
    assert decode_graph6(">>graph6<<C~") == Graph.complete(4)


def test_bytes_input():
    assert decode_graph6(b"C~") == Graph.complete(4)


def test_large_order_prefix():
    g = Graph.empty(100)
    s = encode_graph6(g)
    assert s.startswith("~")
    assert decode_graph6(s) == g


def test_malformed_length_prefix():
    with pytest.raises(Graph6Error, match="length prefix"):
        decode_graph6("~?")


def test_body_length_mismatch():
    with pytest.raises(Graph6Error, match="body length"):
        decode_graph6("D?")


def test_nonzero_padding_rejected():
    # order 2: one adjacency bit + five padding bits; '~' sets them all
    with pytest.raises(Graph6Error, match="padding"):
        decode_graph6("A~")


def test_order_cap():
    with pytest.raises(Graph6Error, match="exceeds"):
        decode_graph6(encode_graph6_order_hack(200))


def encode_graph6_order_hack(n: int) -> str:
    return "~" + "".join(
        chr(((n >> s) & 63) + 63) for s in (12, 6, 0)) + "?" * 10


def test_roundtrip_10000_random_graphs(rng):
    for _ in range(10000):
        n = rng.randint(1, 30)
        g = random_graph(rng, n, p=rng.random())
        assert decode_graph6(encode_graph6(g)) == g


@given(st.integers(1, 40), st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_roundtrip_property(n, rnd):
    g = random_graph(rnd, n)
    assert decode_graph6(encode_graph6(g)) == g


def _nx_graph_of(g: Graph):
    nx = pytest.importorskip("networkx")
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_graph6_encoding_matches_networkx(rng):
    nx = pytest.importorskip("networkx")
    for _ in range(300):
        n = rng.randint(1, 40)
        g = random_graph(rng, n, p=rng.random())
        reference = nx.to_graph6_bytes(_nx_graph_of(g), header=False).strip()
        assert encode_graph6(g).encode() == reference


def test_sparse6_decode_matches_networkx(rng):
    nx = pytest.importorskip("networkx")
    for _ in range(300):
        n = rng.randint(2, 40)
        g = random_graph(rng, n, p=0.15)
        s6 = nx.to_sparse6_bytes(_nx_graph_of(g), header=False).strip()
        assert decode_sparse6(s6) == g


def test_decode_any_sniffs_format():
    nx = pytest.importorskip("networkx")
    k3 = nx.to_sparse6_bytes(_nx_graph_of(Graph.complete(3)), header=False).strip()
    assert decode_any(k3) == Graph.complete(3)
    assert decode_any("C~") == Graph.complete(4)
