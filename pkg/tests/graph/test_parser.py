import pytest

from app.exceptions import GraphFormatError
from app.graph.parser import dump_graph, parse_graph


def test_parse_single_loop():
    graph = parse_graph("vertex v\nedge a v v\n")
    assert graph.vertices == ("v",)
    assert len(graph.sedges) == 1
    assert graph.sedges[0].weight == 1
    assert graph.sedges[0].is_loop


def test_parse_weighted_edge_derives_indexed_copies():
    graph = parse_graph("vertex u\nvertex v\nedge y u v 2\n")
    assert graph.edge("y").weight == 2
    assert graph.derived_edges() == (("y", 1), ("y", 2))
    assert graph.is_weighted


def test_parse_keeps_declaration_order_and_skips_comments():
    text = "# header\n\nvertex z\nvertex a\n  # indented comment\nedge e z a\n"
    graph = parse_graph(text)
    assert graph.vertices == ("z", "a")


def test_parse_dangling_endpoint():
    with pytest.raises(GraphFormatError, match="undeclared vertex 'u'"):
        parse_graph("edge a u v\n")


def test_parse_duplicate_name():
    with pytest.raises(GraphFormatError, match="Line 2: Duplicate name 'v'"):
        parse_graph("vertex v\nvertex v\n")
    with pytest.raises(GraphFormatError, match="Duplicate name 'v'"):
        parse_graph("vertex v\nedge v v v\n")


@pytest.mark.parametrize(
    "line, message",
    [
        ("edge a v v 0", "at least 1"),
        ("edge a v v -1", "decimal integer"),
        ("edge a v v x", "decimal integer"),
        ("edge a v v ²", "decimal integer"),
        ("edge a v v ٣", "decimal integer"),
        ("edge a v", "Expected 'edge ID SRC DST"),
        ("vertex w extra", "Expected 'vertex ID'"),
        ("node w", "vertex or edge declaration"),
        ("vertex w-1", "Invalid id"),
    ],
)
def test_parse_errors_carry_line_numbers(line: str, message: str):
    with pytest.raises(GraphFormatError, match=message) as excinfo:
        parse_graph(f"vertex v\n{line}\n")
    assert "Line 2" in str(excinfo.value)


def test_parse_empty_document():
    with pytest.raises(GraphFormatError):
        parse_graph("# nothing here\n")


def test_dump_graph_omits_unit_weights(load_graph):
    graph = load_graph("weighted_k0")
    text = dump_graph(graph)
    assert "edge a1 u u\n" in text
    assert "edge d1 v v 2\n" in text
    assert parse_graph(text) == graph
