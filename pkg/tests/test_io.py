import json

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from girthtc.graph import Graph
from girthtc.io import ParseError, emit_graph, from_graph6, from_json, parse_graph, to_graph6, to_json


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 20))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    labelled = draw(st.booleans())
    labels = [f"v{i}" for i in range(n)] if labelled else None
    return Graph.from_edges(n, chosen, labels)


@given(graphs())
def test_json_roundtrip(g):
    h = from_json(to_json(g))
    assert h == g and h.labels == g.labels


@given(graphs())
def test_graph6_matches_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    assert to_graph6(g) == nx.to_graph6_bytes(G, header=False).decode().strip()
    assert from_graph6(to_graph6(g)).edges == g.edges


def test_graph6_header_and_petersen():
    text = nx.to_graph6_bytes(nx.petersen_graph()).decode()
    g = parse_graph(text, "graph6")
    assert (g.n, g.m) == (10, 15)


def test_json_accepts_documents():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    doc = json.dumps({"graph": json.loads(to_json(g)), "coloring": None})
    assert from_json(doc) == g


@pytest.mark.parametrize("text, offset", [
    ("C~~", 2),
    ("C]\x01", 2),
])
def test_graph6_errors_report_offset(text, offset):
    with pytest.raises(ParseError) as exc:
        from_graph6(text)
    assert exc.value.offset == offset


def test_json_errors():
    with pytest.raises(ParseError) as exc:
        from_json('{"n": 3, "edges": [[0, 1]')
    assert exc.value.offset > 0
    with pytest.raises(ParseError):
        from_json('{"n": 2, "edges": [[0, 5]]}')
    with pytest.raises(ParseError):
        from_json("[1, 2]")


def test_dot_output():
    g = Graph.from_edges(2, [(0, 1)], ["a", "b"])
    dot = emit_graph(g, "dot")
    assert dot.startswith("graph G {") and "0 -- 1;" in dot and 'label="a"' in dot
