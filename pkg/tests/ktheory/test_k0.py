import pytest

from app.graph.families import leavitt_rose, line_into_rose, rose_graph
from app.ktheory.k0 import AbelianGroupDescriptor, build_matrices, cokernel, k0, unit_class
from app.ktheory.monoid import group_completion, monoid_presentation
from app.models import WeightedGraph


def test_matrices_of_weighted_graph(load_graph):
    pair = build_matrices(load_graph("weighted_k0"))
    assert pair.order == ("u", "v")
    assert pair.N.tolist() == [[2, 1], [1, 3]]
    assert pair.Iw.tolist() == [[1, 0], [0, 2]]
    assert pair.transition().tolist() == [[1, 1], [1, 1]]


def test_sinks_go_last(load_graph):
    pair = build_matrices(load_graph("monoid_e1"))
    assert pair.order == ("u", "t", "b")
    assert pair.nonsinks == 1
    assert pair.transition().shape == (3, 1)


def test_weighted_k0_is_free(load_graph):
    group = k0(load_graph("weighted_k0"))
    assert group == AbelianGroupDescriptor(1, ())
    assert str(group) == "Z"


@pytest.mark.parametrize("n, k", [(2, 3), (3, 5), (2, 4)])
def test_weighted_roses(n, k):
    assert k0(leavitt_rose(n, k)) == AbelianGroupDescriptor(0, (k,))
    assert k0(line_into_rose(3, n, k)) == AbelianGroupDescriptor(0, (k,))


def test_trivial_groups():
    assert k0(leavitt_rose(1, 1)).is_trivial
    assert str(k0(rose_graph(2))) == "0"


@pytest.mark.parametrize("petals", [3, 4, 6])
def test_roses(petals):
    assert str(k0(rose_graph(petals))) == f"Z/{petals - 1}"


def test_paths_into_weighted_rose(load_graph):
    assert str(k0(load_graph("nine_paths"))) == "Z/3"
    assert unit_class(load_graph("nine_paths")) == (0,)


def test_unit_class():
    assert unit_class(rose_graph(3)) == (1,)
    assert unit_class(rose_graph(2)) == ()


@pytest.mark.parametrize(
    "name", ["weighted_k0", "nine_paths", "monoid_e1", "monoid_e2", "monoid_e3", "nopain", "monster", "intro_e4"]
)
def test_k0_matches_group_completion(load_graph, name):
    graph = load_graph(name)
    assert k0(graph) == group_completion(monoid_presentation(graph))


@pytest.mark.parametrize("name", ["nopain", "nine_paths", "weighted_three_heads"])
def test_vertex_order_does_not_matter(load_graph, name):
    graph = load_graph(name)
    reordered = WeightedGraph(tuple(reversed(graph.vertices)), graph.sedges)
    assert k0(reordered) == k0(graph)


def test_group_descriptions():
    assert str(AbelianGroupDescriptor(2, (2, 4))) == "Z^2 x Z/2 x Z/4"
    assert str(cokernel([[2, 0], [0, 3]]).group) == "Z/6"
