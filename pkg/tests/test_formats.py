from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import oriented, signed_graphs
from sfk import graphs
from sfk.core import IN, OUT, Flow, Mode, SignedGraph
from sfk.errors import FormatError
from sfk.formats import (CatalogEntry, bundled_catalog, parse_catalog, parse_certificate, parse_signed_graph,
                         serialize_catalog, serialize_certificate, serialize_signed_graph)


class TestGraphText:
    def test_single_negative_edge(self):
        g = parse_signed_graph("2 1\n0 1 -")
        assert g == SignedGraph.build(2, [(0, 1, -1)])

    def test_positive_triangle(self):
        g = parse_signed_graph("3 3\n0 1 +\n1 2 +\n2 0 +")
        assert g.m == 3 and g.negative_edges == ()

    def test_negative_loop(self):
        g = parse_signed_graph("1 1\n0 0 -")
        assert g.edges[0].is_loop and g.sign(0) == -1

    def test_comments_and_parallel_edges(self):
        g = parse_signed_graph("# digon\n2 2\n# first\n0 1 +\n0 1 +\n")
        assert g == graphs.digon()

    @pytest.mark.parametrize("text,line", [
        ("2 2\n0 1 +", 2),
        ("2 1\n0 1 +\n1 0 +", 3),
        ("2 1\n0 2 +", 2),
        ("2 1\n0 1 x", 2),
        ("2 1\n0 a +", 2),
        ("# c\n2\n0 1 +", 2),
        ("", 1),
        ("2 1\n\n# gap\n0 1", 4),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(FormatError) as info:
            parse_signed_graph(text)
        assert info.value.line == line
        assert str(info.value).startswith(f"line {line}:")

    @given(signed_graphs())
    def test_round_trip(self, g):
        assert parse_signed_graph(serialize_signed_graph(g, "x")) == g


class TestCatalog:
    def test_round_trip(self):
        entries = [CatalogEntry("k4", graphs.k4()), CatalogEntry("theta", graphs.theta())]
        assert parse_catalog(serialize_catalog(entries)) == entries

    def test_line_numbers_are_global(self):
        text = "# a\n2 3\n0 1 +\n0 1 +\n0 1 +\n---\n# b\n2 1\n0 5 +\n"
        with pytest.raises(FormatError) as info:
            parse_catalog(text)
        assert info.value.line == 9

    def test_bundled_catalogs_are_cubic_and_positive(self):
        cubic = bundled_catalog("cubic")
        names = {e.name for e in cubic}
        assert {"petersen", "theta", "doubled_c6"} <= names
        for entry in cubic:
            assert entry.graph.is_cubic() and entry.graph.negative_edges == ()
        assert all(e.graph.is_cubic() for e in bundled_catalog("bipartite"))

    def test_complete_small_orders(self):
        counts = {}
        for entry in bundled_catalog("cubic"):
            if entry.name.startswith("cubic"):
                counts[entry.graph.n] = counts.get(entry.graph.n, 0) + 1
        assert [counts[n] for n in (4, 6, 8, 10, 12)] == [1, 2, 5, 19, 85]


class TestCertificates:
    @given(signed_graphs(max_n=4, max_m=6), st.data(), st.sampled_from(list(Mode)))
    def test_round_trip(self, g, data, mode):
        o = data.draw(oriented(g))
        vals = data.draw(st.lists(st.integers(-5, 5), min_size=g.m, max_size=g.m))
        f = Flow(o, tuple(vals), 6, mode)
        cert = parse_certificate(serialize_certificate(f, "seven"))
        assert cert.flow == f and cert.method == "seven"

    def test_layout(self):
        f = Flow(((OUT, IN), (IN, IN)), (1, 2), 4)
        assert serialize_certificate(f, "bipartite4") == (
            "FLOWCERT 1\nk 4\nmode integer\nmethod bipartite4\nm 2\n0 o i 1\n1 i i 2\n")

    @pytest.mark.parametrize("text,line", [
        ("FLOWCERT 2\nk 4\nmode integer\nmethod x\nm 0\n", 1),
        ("FLOWCERT 1\nk 4\nmode integer\nmethod x\nm 1\n0 o q 1\n", 6),
        ("FLOWCERT 1\nk 4\nmode integer\nmethod x\nm 1\n1 o i 1\n", 6),
        ("FLOWCERT 1\nk 4\nmode bogus\nmethod x\nm 0\n", 3),
        ("FLOWCERT 1\nk 4\nmode integer\nmethod x\nm 2\n0 o i 1\n", 6),
        ("NOPE\n", 1),
    ])
    def test_errors(self, text, line):
        with pytest.raises(FormatError) as info:
            parse_certificate(text)
        assert info.value.line == line
