"""graph6 codec against the networkx reference implementation."""

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mycdist import Graph, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from mycdist.errors import MalformedGraph6, Unsupported

KNOWN = [
    ("@", 1, []),
    ("A_", 2, [(0, 1)]),
    ("B?", 3, []),
    ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
]


@pytest.mark.parametrize("g6,n,edges", KNOWN)
def test_known_encodings(g6, n, edges):
    g = parse_graph6(g6)
    assert g.n == n
    assert g.edges() == edges
    assert write_graph6(g) == g6


@pytest.mark.parametrize("g6,n,edges", KNOWN)
def test_known_encodings_match_reference_codec(g6, n, edges):
    ref = nx.from_graph6_bytes(g6.encode())
    assert ref.number_of_nodes() == n
    assert sorted(tuple(sorted(e)) for e in ref.edges()) == edges


def graphs(max_n):
    return st.integers(1, max_n).flatmap(
        lambda n: st.builds(
            Graph,
            st.just(n),
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] != e[1]),
                max_size=n * n)))


@settings(max_examples=200, deadline=None)
@given(graphs(10))
def test_roundtrip_matches_reference_codec(g):
    enc = write_graph6(g)
    assert parse_graph6(enc) == g
    ref = nx.from_graph6_bytes(enc.encode())
    assert ref.number_of_nodes() == g.n
    assert sorted(tuple(sorted(e)) for e in ref.edges()) == g.edges()
    assert nx.to_graph6_bytes(ref, header=False).strip().decode() == enc


def test_roundtrip_on_corpus(corpus_n7):
    for line, g in corpus_n7:
        assert write_graph6(g) == line


def test_order_boundary():
    g = Graph(62, [(0, 61)])
    assert parse_graph6(write_graph6(g)) == g
    with pytest.raises(Unsupported):
        write_graph6(Graph(63))
    with pytest.raises(Unsupported):
        parse_graph6("~" + "?" * 100)  # multi-byte order header


@pytest.mark.parametrize("bad", ["", "A", "Bww", "B" + chr(30), "Bx"])
def test_malformed_records_rejected(bad):
    # "Bx" has a nonzero padding bit; the rest are truncation/range errors
    with pytest.raises(MalformedGraph6):
        parse_graph6(bad)


def test_optional_header_accepted():
    assert parse_graph6(">>graph6<<Bw").edge_count == 3


def test_edge_list_roundtrip():
    g = parse_graph6("Bw")
    text = write_edge_list(g)
    assert parse_edge_list(text) == g
    withcomments = "# triangle\n3 3\n0 1\n0 2  # last two\n1 2\n"
    assert parse_edge_list(withcomments) == g


@pytest.mark.parametrize("bad", ["", "3", "3 2\n0 1", "3 1\n0 x"])
def test_malformed_edge_lists_rejected(bad):
    with pytest.raises(MalformedGraph6):
        parse_edge_list(bad)
