import pytest

from app.exceptions import InvalidInputError, UnsupportedGraphError
from app.graded.decompose import decompose
from app.graded.strong import cyclic_vertices, is_strongly_graded, strong_grading_witness
from app.graph.combinators import opposite
from app.graph.families import cycle_graph, line_graph
from app.symbolic.element import Element, degree_of
from app.symbolic.rewriting import normal_form


@pytest.mark.parametrize(
    "name, expected",
    [
        ("nopain", True),
        ("monster", False),
        ("opex", True),
        ("intro_e3", True),
        ("cycle_exit", False),
        ("niroi_e1", False),
    ],
)
def test_is_strongly_graded(load_graph, name, expected):
    assert is_strongly_graded(load_graph(name)) is expected


def test_opposite_loses_strong_grading(load_graph):
    assert not is_strongly_graded(opposite(load_graph("opex")))


def test_weighted_graphs_are_unsupported(load_graph):
    with pytest.raises(UnsupportedGraphError):
        is_strongly_graded(load_graph("weighted_k0"))


@pytest.mark.parametrize(
    "name", ["nopain", "monster", "opex", "two_cycle_tail", "intro_e1", "niroi_e2", "seven_loops"]
)
def test_strong_iff_no_sink_block(load_graph, name):
    graph = load_graph(name)
    assert is_strongly_graded(graph) is not decompose(graph).has_field_block


def test_cyclic_vertices(load_graph):
    assert cyclic_vertices(load_graph("nopain")) == {"c", "r", "u", "w"}
    assert cyclic_vertices(line_graph(3)) == set()
    assert cyclic_vertices(cycle_graph(3)) == {"v1", "v2", "v3"}


@pytest.mark.parametrize("n", range(-3, 4))
@pytest.mark.parametrize("v", ["t", "u", "v"])
def test_witness_sums_to_vertex(load_graph, v, n):
    graph = load_graph("two_cycle_tail")
    pairs = strong_grading_witness(graph, v, n)
    assert pairs
    total = Element.zero(graph)
    for x, y in pairs:
        assert degree_of(x) == n
        assert degree_of(y) == -n
        total = total + x * y
    assert normal_form(total) == Element.vertex(graph, v)


@pytest.mark.parametrize("n", [-2, 1])
def test_witness_with_a_tail_into_the_cycle(load_graph, n):
    graph = load_graph("intro_e2")
    total = Element.zero(graph)
    for x, y in strong_grading_witness(graph, "b", n):
        total = total + x * y
    assert normal_form(total) == Element.vertex(graph, "b")


def test_witness_errors(load_graph):
    with pytest.raises(InvalidInputError):
        strong_grading_witness(load_graph("two_cycle_tail"), "z", 1)
    with pytest.raises(UnsupportedGraphError, match="not strongly graded"):
        strong_grading_witness(line_graph(2), "v1", 1)
