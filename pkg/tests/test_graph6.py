from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from _oracles import graphs, to_nx
from szeged import families as fam
from szeged.generate import gen_bicyclic, gen_connected, gen_trees, gen_unicyclic
from szeged.graph import from_edges
from szeged.graph6 import Graph6Error, emit_graph6, parse_graph6, read_graph6, write_graph6


def test_known_encodings():
    assert emit_graph6(from_edges(2, [(0, 1)])) == "A_"
    assert parse_graph6("A_").edges() == [(0, 1)]
    p3 = fam.path(3)
    assert emit_graph6(p3) == "Bg"
    assert parse_graph6("Bg") == p3
    assert emit_graph6(from_edges(1, [])) == "@"


@given(graphs(max_n=20))
def test_matches_networkx_encoder(g):
    want = nx.to_graph6_bytes(to_nx(g), header=False).decode("ascii").strip()
    assert emit_graph6(g) == want


@given(graphs(max_n=20))
def test_round_trip_keeps_labels(g):
    assert parse_graph6(emit_graph6(g)) == g


def test_long_header_for_n_63_and_64():
    for n in (63, 64):
        g = fam.path(n)
        s = emit_graph6(g)
        assert s.startswith("~")
        assert parse_graph6(s) == g
        assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode("ascii").strip()


def test_header_is_skipped():
    assert parse_graph6(">>graph6<<A_").m == 1


@pytest.mark.parametrize("bad", ["", "A", "A_?", "A`", "B\x7f", "~??A_", "~~??????", " \t"])
def test_malformed_lines_rejected(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_corpus_round_trip(tmp_path):
    corpus = gen_trees(10) + gen_unicyclic(8) + gen_bicyclic(7) + gen_connected(6)
    path = tmp_path / "mixed.g6"
    assert write_graph6(path, corpus) == len(corpus)
    lines = path.read_text(encoding="ascii").splitlines()
    assert [emit_graph6(g) for g in read_graph6(lines)] == lines
    assert tuple(read_graph6(lines)) == corpus
