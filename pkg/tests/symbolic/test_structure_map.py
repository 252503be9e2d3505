import pytest
import sympy

from app.exceptions import InvalidInputError
from app.graded.decompose import decompose
from app.symbolic.element import Element
from app.symbolic.expressions import parse_expression
from app.symbolic.rewriting import normal_form
from app.symbolic.structure_map import structure_map, x
from tests.symbolic.test_element import random_element, random_monomial


@pytest.fixture
def two_cycle(load_graph):
    graph = load_graph("two_cycle_tail")
    return graph, decompose(graph)


def test_vertex_and_cycle_images(two_cycle):
    graph, d = two_cycle
    phi_u = structure_map(parse_expression(graph, "u"), d)
    assert phi_u.blocks == ({(0, 0): 1},)
    assert phi_u.entry("u", 0, 0) == 1

    phi_cycle = structure_map(parse_expression(graph, "g h"), d)
    assert phi_cycle.entry("u", 0, 0) == x**2
    assert phi_cycle.entry("u", 1, 1) is None

    phi_v = structure_map(parse_expression(graph, "v"), d)
    assert phi_v.entry("u", 2, 2) == 1


def test_edge_and_ghost_images(two_cycle):
    graph, d = two_cycle
    assert structure_map(parse_expression(graph, "g"), d).entry("u", 0, 2) == x**2
    assert structure_map(parse_expression(graph, "f"), d).entry("u", 1, 0) == 1
    assert structure_map(parse_expression(graph, "g*"), d).entry("u", 2, 0) == x**-2


def test_relations_map_to_zero(two_cycle):
    graph, d = two_cycle
    for text in ("u - g g*", "t - f f*", "g* g - v", "h* g"):
        assert structure_map(parse_expression(graph, text), d).is_zero


@pytest.mark.parametrize("name", ["two_cycle_tail", "intro_e3", "nopain", "niroi_e1", "monster"])
def test_map_is_multiplicative(load_graph, rng, name):
    graph = load_graph(name)
    d = decompose(graph)
    for _ in range(15):
        a, b = random_element(graph, rng), random_element(graph, rng)
        assert structure_map(a * b, d) == structure_map(a, d) * structure_map(b, d)
        assert structure_map(a + b, d) == structure_map(a, d) + structure_map(b, d)


def test_map_is_multiplicative_on_monomials(load_graph, rng):
    cases = []
    for name in ("two_cycle_tail", "intro_e3", "nopain", "niroi_e1", "monster"):
        graph = load_graph(name)
        cases.append((graph, decompose(graph)))
    for i in range(1000):
        graph, d = cases[i % len(cases)]
        a = Element.from_monomial(graph, random_monomial(graph, rng))
        b = Element.from_monomial(graph, random_monomial(graph, rng))
        assert structure_map(a * b, d) == structure_map(a, d) * structure_map(b, d)


@pytest.mark.parametrize("name", ["two_cycle_tail", "nopain", "intro_e1"])
def test_normal_form_has_the_same_image(load_graph, rng, name):
    graph = load_graph(name)
    d = decompose(graph)
    for _ in range(15):
        a = random_element(graph, rng)
        image = structure_map(a, d)
        assert structure_map(normal_form(a), d) == image
        assert image.is_zero is normal_form(a).is_zero


def test_rose_entries_live_in_the_rose(load_graph):
    graph = load_graph("nopain")
    d = decompose(graph)
    entry = structure_map(parse_expression(graph, "m1 m2*"), d).entry("r", 0, 0)
    assert isinstance(entry, Element)
    assert entry.graph.vertices == ("r",)
    assert str(entry.monomials()[0]) == "m1 m2*"


def test_laurent_entries_use_cycle_length(load_graph):
    graph = load_graph("intro_e4")
    image = structure_map(parse_expression(graph, "c1 c2 c3 c4"), decompose(graph))
    assert sympy.simplify(image.entry("v1", 0, 0) - x**4) == 0


def test_errors(load_graph, two_cycle):
    graph, d = two_cycle
    other = load_graph("opex")
    with pytest.raises(InvalidInputError, match="different graph"):
        structure_map(Element.vertex(other, "u"), d)
    with pytest.raises(InvalidInputError):
        structure_map(Element.vertex(graph, "u"), d).entry("t", 0, 0)
