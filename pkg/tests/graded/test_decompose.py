import pytest

from app.exceptions import InvalidInputError, UnsupportedGraphError
from app.graded.decompose import BaseRingKind, decompose, describe
from app.graph.combinators import tensor_attach
from app.graph.families import line_graph, rose_graph
from app.matrix.shifts import ShiftVector, component_dim, shift_equiv
from app.symbolic.rewriting import basis_monomials


def test_decompose_mixed_heads(load_graph):
    d = decompose(load_graph("nopain"))
    assert describe(d) == (
        "M_5(K[x,x^-1])(0,1,1,2,2) + M_4(K[x^2,x^-2])(0,1,1,2) + M_7(L(1,2))(0,1,1,1,2,2,2)"
    )
    assert d.base_vertices == ("c", "u", "r")
    assert set(d.removed_edges) == {"l", "g", "m1", "m2"}
    assert not d.has_field_block


def test_block_paths_match_shifts(load_graph):
    d = decompose(load_graph("nopain"))
    for block in d.blocks:
        assert block.size == len(block.paths)
        assert tuple(len(p) for p in block.paths) == block.shifts.entries
        assert all(p.dst == block.head.base for p in block.paths)


@pytest.mark.parametrize(
    "overrides, expected",
    [
        (None, "M_3(K[x^2,x^-2])(0,1,1)"),
        ({"u": "v"}, "M_3(K[x^2,x^-2])(0,1,2)"),
        ({"v": "v"}, "M_3(K[x^2,x^-2])(0,1,2)"),
    ],
)
def test_base_vertex_choice(load_graph, overrides, expected):
    d = decompose(load_graph("two_cycle_tail"), overrides)
    assert str(d) == expected


@pytest.mark.parametrize(
    "overrides, message",
    [
        ({"u": "t"}, "t is not on the cycle through u"),
        ({"t": "u"}, "t is not a vertex of any cycle head"),
    ],
)
def test_bad_base_overrides(load_graph, overrides, message):
    with pytest.raises(InvalidInputError, match=message):
        decompose(load_graph("two_cycle_tail"), overrides)


@pytest.mark.parametrize("n", range(1, 9))
def test_line_graph(n):
    d = decompose(line_graph(n))
    assert len(d.blocks) == 1
    block = d.blocks[0]
    assert block.base.kind is BaseRingKind.FIELD
    assert block.shifts.entries == tuple(range(n))
    assert block.head.base == f"v{n}"


def test_intro_graphs(load_graph):
    assert str(decompose(load_graph("intro_e1"))) == "M_4(K[x,x^-1])(0,1,2,3)"
    assert str(decompose(load_graph("intro_e2"))) == "M_4(K[x^2,x^-2])(0,1,1,2)"
    assert str(decompose(load_graph("intro_e3"))) == "M_4(K[x^2,x^-2])(0,1,1,1)"
    assert str(decompose(load_graph("intro_e4"))) == "M_4(K[x^4,x^-4])(0,1,2,3)"


def test_weighted_roses(load_graph):
    d = decompose(load_graph("weighted_three_heads"))
    assert str(d) == "M_3(K)(0,1,2) + M_5(L(1,3))(0,1,1,2,2) + M_7(L(2,2))(0,1,1,1,2,2,2)"
    assert d.has_field_block
    assert d.has_weighted_rose


def test_rose_labels():
    assert str(decompose(rose_graph(3))) == "M_1(L(1,3))(0)"
    assert str(decompose(rose_graph(3, weight=2))) == "M_1(L(2,2))(0)"


def test_tensor_of_lines_commutes():
    a, b = line_graph(2), line_graph(3)
    assert str(decompose(tensor_attach(a, b))) == "M_6(K)(0,1,1,2,2,3)"
    assert str(decompose(tensor_attach(b, a))) == "M_6(K)(0,1,1,2,2,3)"


def test_tensor_with_line_doubles_shifts(load_graph):
    graph = load_graph("nopain")
    d = decompose(graph)
    attached = decompose(tensor_attach(line_graph(2), graph))
    assert attached.base_vertices == d.base_vertices
    for old, new in zip(d.blocks, attached.blocks, strict=True):
        assert new.base == old.base
        assert new.size == 2 * old.size
        entries = old.shifts.entries + tuple(x + 1 for x in old.shifts.entries)
        assert shift_equiv(new.shifts, ShiftVector(entries, old.shifts.modulus))
    assert describe(attached).startswith("M_10(K[x,x^-1])(")


def test_block_lookup(load_graph):
    d = decompose(load_graph("nopain"))
    assert d.block_at("u").base.period == 2
    with pytest.raises(InvalidInputError):
        d.block_at("a")


@pytest.mark.parametrize("name", ["cycle_exit", "esc_example", "disconnected"])
def test_rejects_graphs_without_heads(load_graph, name):
    with pytest.raises(UnsupportedGraphError):
        decompose(load_graph(name))


@pytest.mark.parametrize("name", ["niroi_e1", "niroi_e3", "line3"])
def test_dimensions_count_basis_monomials(load_graph, name):
    graph = load_graph(name)
    d = decompose(graph)
    basis = basis_monomials(graph)
    assert len(basis) == sum(b.size**2 for b in d.blocks)
    for degree in range(-4, 5):
        expected = sum(component_dim(b.shifts, degree) for b in d.blocks)
        assert sum(1 for m in basis if m.degree == degree) == expected
