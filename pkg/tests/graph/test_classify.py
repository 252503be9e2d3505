import pytest

from app.exceptions import UnsupportedGraphError
from app.graph.classify import classify
from app.graph.combinators import opposite
from app.graph.families import cycle_graph, line_graph, rose_graph
from app.graph.parser import parse_graph
from app.models import GraphClassTag, HeadKind, StructuredEdge, WeightedGraph


def test_intro_e2_is_a_comet(load_graph):
    result = classify(load_graph("intro_e2"))
    assert result.tag is GraphClassTag.CN_COMET
    assert result.is_multi_headed_comet
    assert str(result) == "cn-comet(2)"
    (head,) = result.heads
    assert head.kind is HeadKind.CYCLE
    assert head.base == "u"
    assert head.edges == ("g", "h")


def test_mixed_heads(load_graph):
    result = classify(load_graph("nopain"))
    assert result.tag is GraphClassTag.POLYCEPHALY
    kinds = {h.base: (h.kind, len(h.edges)) for h in result.heads}
    assert kinds == {
        "c": (HeadKind.CYCLE, 1),
        "r": (HeadKind.ROSE, 2),
        "u": (HeadKind.CYCLE, 2),
    }


def test_cycle_with_exit_is_not_polycephaly(load_graph):
    result = classify(load_graph("cycle_exit"))
    assert result.tag is GraphClassTag.NOT_POLYCEPHALY
    assert "exit" in result.reason
    assert not result.is_polycephaly


def test_acyclic_graph(load_graph):
    result = classify(load_graph("niroi_e3"))
    assert result.tag is GraphClassTag.ACYCLIC
    assert [h.kind for h in result.heads] == [HeadKind.SINK]


def test_single_loop_is_a_comet_head():
    result = classify(rose_graph(1))
    assert result.tag is GraphClassTag.CN_COMET
    assert result.comet_length == 1
    assert result.heads[0].is_loop


def test_multi_headed_rose(load_graph):
    assert classify(rose_graph(3)).tag is GraphClassTag.MULTI_HEADED_ROSE
    assert classify(load_graph("monoid_e3")).tag is GraphClassTag.MULTI_HEADED_ROSE


def test_multi_headed_comet(load_graph):
    result = classify(load_graph("seven_loops"))
    assert result.tag is GraphClassTag.MULTI_HEADED_COMET
    assert len(result.heads) == 7


def test_monster_has_five_heads(load_graph):
    result = classify(load_graph("monster"))
    assert result.tag is GraphClassTag.POLYCEPHALY
    kinds = sorted(h.kind.value for h in result.heads)
    assert kinds == ["cycle", "rose", "rose", "sink", "sink"]


def test_weighted_edge_outside_rose(load_graph):
    result = classify(load_graph("monoid_e1"))
    assert result.tag is GraphClassTag.NOT_POLYCEPHALY
    assert "weighted edge 'alpha'" in result.reason


def test_weighted_rose_heads(load_graph):
    result = classify(load_graph("weighted_three_heads"))
    assert result.tag is GraphClassTag.POLYCEPHALY
    rose = next(h for h in result.heads if h.base == "r")
    assert rose.weights == (2, 2, 2)
    assert rose.is_weighted


def test_loop_with_exit(load_graph):
    result = classify(opposite(load_graph("opex")))
    assert result.tag is GraphClassTag.NOT_POLYCEPHALY
    assert result.reason == "loop at u has an exit"


def test_cycles_sharing_a_vertex():
    graph = parse_graph(
        "vertex a\nvertex b\nvertex c\nedge x a b\nedge y b a\nedge z c a\nedge w a c\n"
    )
    result = classify(graph)
    assert result.tag is GraphClassTag.NOT_POLYCEPHALY
    assert "has an exit" in result.reason


def test_disconnected_graph_is_rejected(load_graph):
    with pytest.raises(UnsupportedGraphError, match="components"):
        classify(load_graph("disconnected"))


def test_opposite_of_cycle_has_same_class():
    for n in (1, 2, 5):
        graph = cycle_graph(n)
        assert str(classify(opposite(graph))) == str(classify(graph))


def test_classification_ignores_names(load_graph):
    graph = load_graph("nopain")
    renamed = {v: f"n{i}" for i, v in enumerate(reversed(graph.vertices))}
    relabelled = WeightedGraph(
        tuple(renamed[v] for v in graph.vertices),
        tuple(StructuredEdge(f"x{e.name}", renamed[e.src], renamed[e.dst], e.weight) for e in graph.sedges),
    )
    original, other = classify(graph), classify(relabelled)
    assert original.tag is other.tag
    assert sorted((h.kind.value, len(h.edges)) for h in original.heads) == sorted(
        (h.kind.value, len(h.edges)) for h in other.heads
    )


def test_heads_are_disjoint_and_exit_free(load_graph):
    for name in ("nopain", "monster", "intro_e1", "intro_e3", "comet_e1", "weighted_three_heads"):
        graph = load_graph(name)
        heads = classify(graph).heads
        seen = set()
        for head in heads:
            assert not seen & set(head.vertices)
            seen |= set(head.vertices)
            for v in head.vertices:
                assert all(e.dst in head.vertices for e in graph.out_edges(v))


def test_line_is_acyclic():
    assert classify(line_graph(4)).tag is GraphClassTag.ACYCLIC
