import logging

import networkx as nx

from app.exceptions import InvalidInputError, UnsupportedGraphError
from app.graph.paths import orbit
from app.models import Path, WeightedGraph
from app.symbolic.element import Element, Monomial


def cyclic_vertices(graph: WeightedGraph) -> set[str]:
    """Vertices lying on some cycle, loops included."""
    found = set(nx.nodes_with_selfloops(graph.digraph))
    for component in nx.strongly_connected_components(graph.digraph):
        if len(component) > 1:
            found |= component
    return found


def is_strongly_graded(g: WeightedGraph) -> bool:
    """
    A finite graph gives a strongly graded algebra if and only if every
    vertex is connected to a cycle.
    """
    if g.is_weighted:
        raise UnsupportedGraphError("Strong gradedness is decided for graphs with all weights 1")
    cyclic = cyclic_vertices(g)
    for v in g.vertices:
        if not (nx.descendants(g.digraph, v) | {v}) & cyclic:
            logging.info(f"Vertex {v} is not connected to a cycle; not strongly graded.")
            return False
    return True


def _paths_of_length(graph: WeightedGraph, v: str, n: int) -> list[Path]:
    paths = [Path.trivial(v)]
    for _ in range(n):
        paths = [
            Path(p.stops + (e.dst,), p.edges + (e.name,))
            for p in paths
            for e in graph.out_edges(p.dst)
        ]
    return sorted(paths, key=lambda p: p.sort_key)


def _walk_back(graph: WeightedGraph, w: str, length: int, cyclic: set[str]) -> Path:
    """A path of the given length ending at w that stays on cycles."""
    stops, edges = [w], []
    for _ in range(length):
        e = next(e for e in graph.in_edges(stops[0]) if e.src in cyclic and _same_component(graph, e))
        stops.insert(0, e.src)
        edges.insert(0, e.name)
    return Path(tuple(stops), tuple(edges))


def _same_component(graph: WeightedGraph, e) -> bool:
    return e.is_loop or nx.has_path(graph.digraph, e.dst, e.src)


def strong_grading_witness(g: WeightedGraph, v: str, n: int) -> list[tuple[Element, Element]]:
    """
    Pairs (x_i, y_i) with deg x_i = n, deg y_i = -n and sum x_i y_i = v.

    For n >= 0 these are (p, p*) over the paths of length n from v. For
    n < 0 each immediate path g from v to the cycles is closed up by a path q
    of length |n| + |g| running backwards along a cycle, giving (g q*, q g*).
    """
    if not g.has_vertex(v):
        raise InvalidInputError(f"Unknown vertex '{v}'")
    if not is_strongly_graded(g):
        raise UnsupportedGraphError("Graph is not strongly graded")

    pairs = []
    if n >= 0:
        for p in _paths_of_length(g, v, n):
            end = Path.trivial(p.dst)
            pairs.append(
                (Element.from_monomial(g, Monomial(p, end)), Element.from_monomial(g, Monomial(end, p)))
            )
        return pairs

    cyclic = cyclic_vertices(g)
    for gamma in orbit(g, v, cyclic).paths:
        q = _walk_back(g, gamma.dst, -n + len(gamma), cyclic)
        pairs.append(
            (Element.from_monomial(g, Monomial(gamma, q)), Element.from_monomial(g, Monomial(q, gamma)))
        )
    return pairs
