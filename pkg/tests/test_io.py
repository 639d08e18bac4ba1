import pytest

from oridom.graphs import Orientation, cycle, multipartite
from oridom.io import (
    GraphFormatError,
    format_digraph,
    format_graph,
    parse_digraph,
    parse_graph,
)


def test_graph_round_trip():
    G = multipartite(1, 2, 2)
    assert parse_graph(format_graph(G)).edges == G.edges


def test_digraph_round_trip():
    D = Orientation(cycle(5), 0b10110).to_digraph()
    assert parse_digraph(format_digraph(D)).arcs == D.arcs


def test_graph_format_example():
    text = "ug 3 2\n0 1\n1 2\n"
    G = parse_graph(text)
    assert G.n == 3 and G.edges == ((0, 1), (1, 2))
    assert format_graph(G) == text


def test_bad_header():
    with pytest.raises(GraphFormatError, match="line 1"):
        parse_graph("graph 3 2\n0 1\n1 2\n")
    with pytest.raises(GraphFormatError, match="line 1"):
        parse_graph("ug three 2\n0 1\n1 2\n")
    with pytest.raises(GraphFormatError, match="line 1"):
        parse_graph("")


def test_count_mismatch():
    with pytest.raises(GraphFormatError, match="line 3"):
        parse_graph("ug 3 2\n0 1\n")
    with pytest.raises(GraphFormatError, match="line 4"):
        parse_graph("ug 3 2\n0 1\n1 2\n0 2\n")


def test_range_violation_line_numbered():
    with pytest.raises(GraphFormatError, match="line 3"):
        parse_graph("ug 3 2\n0 1\n1 7\n")
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_digraph("dg 2 1\n0 5\n")


def test_rejects_unordered_endpoints():
    with pytest.raises(GraphFormatError, match="u < v"):
        parse_graph("ug 3 1\n2 1\n")


def test_rejects_malformed_pair():
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_graph("ug 3 1\n0 1 2\n")
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_graph("ug 3 1\nx y\n")


def test_digraph_allows_opposite_arcs():
    D = parse_digraph("dg 2 2\n0 1\n1 0\n")
    assert D.arcs == ((0, 1), (1, 0))


def test_file_round_trip(tmp_path):
    from oridom.io import load_graph

    G = cycle(6)
    target = tmp_path / "c6.ug"
    target.write_text(format_graph(G), encoding="utf-8")
    assert load_graph(target).edges == G.edges
