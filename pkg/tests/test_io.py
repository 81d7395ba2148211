import pytest

from unbounded_hc.errors import GraphFormatError
from unbounded_hc.graph import Graph, complete_graph, path_graph
from unbounded_hc.io import (emit_edge_list, emit_walk, parse_edge_list, parse_tsplib_hcp,
                             parse_walk, read_graph)

from support import random_connected_case

TRIANGLE_HCP = """NAME : tri
COMMENT : smallest cycle
TYPE : HCP
DIMENSION : 3
EDGE_DATA_FORMAT : EDGE_LIST
EDGE_DATA_SECTION
1 2
2 3
1 3
-1
EOF
"""


def test_tsplib_triangle():
    g = parse_tsplib_hcp(TRIANGLE_HCP)
    assert g == complete_graph(3)


def test_tsplib_duplicates_collapse():
    text = TRIANGLE_HCP.replace("1 3\n", "1 3\n3 1\n2 1\n")
    assert parse_tsplib_hcp(text).m == 3


def test_tsplib_self_loop_reports_line():
    text = TRIANGLE_HCP.replace("2 3\n", "1 1\n")
    with pytest.raises(GraphFormatError) as info:
        parse_tsplib_hcp(text)
    assert info.value.line == 8


@pytest.mark.parametrize("bad", [
    TRIANGLE_HCP.replace("TYPE : HCP", "TYPE : TSP"),
    TRIANGLE_HCP.replace("DIMENSION : 3", "DIMENSION : x"),
    TRIANGLE_HCP.replace("2 3\n", "2 4\n"),
    TRIANGLE_HCP.replace("EDGE_LIST", "ADJ_LIST"),
])
def test_tsplib_malformed(bad):
    with pytest.raises(GraphFormatError):
        parse_tsplib_hcp(bad)


def test_edge_list_examples():
    assert parse_edge_list("2 1\n0 1") == path_graph(2)
    assert emit_edge_list(complete_graph(3)) == "3 3\n0 1\n0 2\n1 2"
    for bad in ["3 1\n0 3", "3 1\n1 1", "3 2\n0 1\n1 0", "3 1\n0 x", "3 2\n0 1"]:
        with pytest.raises(GraphFormatError):
            parse_edge_list(bad)


def test_edge_list_round_trip():
    for seed in range(30):
        g = random_connected_case(seed, 2, 12)
        assert parse_edge_list(emit_edge_list(g)) == g


def test_read_graph_auto():
    assert read_graph(TRIANGLE_HCP) == complete_graph(3)
    assert read_graph("2 1\n0 1\n") == path_graph(2)


def test_walk_round_trip():
    text = emit_walk((0, 1, 2, 1), {1})
    assert text.startswith("# unbounded: 1\n")
    assert parse_walk(text) == ((0, 1, 2, 1), frozenset({1}))
    assert parse_walk("3\n4\n") == ((3, 4), None)
    with pytest.raises(GraphFormatError):
        parse_walk("0\nfoo\n")
    with pytest.raises(GraphFormatError):
        parse_walk("# nothing\n")


def test_single_vertex_edge_list():
    assert parse_edge_list(emit_edge_list(Graph(1, ()))) == Graph(1, ())
