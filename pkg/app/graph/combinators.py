import logging

import networkx as nx

from app.exceptions import InvalidInputError, UnsupportedGraphError
from app.models import StructuredEdge, WeightedGraph


def opposite(graph: WeightedGraph) -> WeightedGraph:
    """Reverses every edge, keeping names and weights."""
    return WeightedGraph(
        graph.vertices,
        tuple(StructuredEdge(e.name, e.dst, e.src, e.weight) for e in graph.sedges),
    )


def associated_weighted(graph: WeightedGraph) -> WeightedGraph:
    """
    Merges each class of parallel edges (same source, same range) into one
    structured edge whose weight is the class size. The merged edge keeps
    the name of the first edge of its class.
    """
    if graph.is_weighted:
        raise InvalidInputError("associated_weighted expects a graph with all weights 1")

    classes: dict[tuple[str, str], list[StructuredEdge]] = {}
    for e in graph.sedges:
        classes.setdefault((e.src, e.dst), []).append(e)

    merged = tuple(
        StructuredEdge(members[0].name, src, dst, len(members))
        for (src, dst), members in classes.items()
    )
    return WeightedGraph(graph.vertices, merged)


def unique_sink(graph: WeightedGraph) -> str:
    """The only sink of an acyclic connected graph, or UnsupportedGraphError."""
    if not nx.is_directed_acyclic_graph(graph.digraph):
        raise UnsupportedGraphError("Attached graph must be acyclic")
    if not nx.is_weakly_connected(graph.digraph):
        raise UnsupportedGraphError("Attached graph must be connected")
    if len(graph.sinks) != 1:
        raise UnsupportedGraphError(
            f"Attached graph must have a unique sink, found {len(graph.sinks)}"
        )
    return graph.sinks[0]


def tensor_attach(e: WeightedGraph, f: WeightedGraph) -> WeightedGraph:
    """
    Attaches a copy of `e` to every vertex of `f` by identifying the copy's
    sink with that vertex.

    Copies are named `<f-vertex>_<e-name>`, with a numeric suffix appended
    when that name is already taken. `f` itself is kept unchanged and may be
    weighted. `e` must be unweighted, acyclic, connected and have a unique
    sink.
    """
    if e.is_weighted:
        raise UnsupportedGraphError("Attached graph must have all weights 1")
    sink = unique_sink(e)

    vertices = list(f.vertices)
    sedges = list(f.sedges)
    used = set(f.vertices) | {edge.name for edge in f.sedges}

    def fresh(base: str) -> str:
        name, k = base, 1
        while name in used:
            k += 1
            name = f"{base}_{k}"
        used.add(name)
        return name

    for x in f.vertices:
        copies = {v: fresh(f"{x}_{v}") for v in e.vertices if v != sink}
        copies[sink] = x
        vertices.extend(copies[v] for v in e.vertices if v != sink)
        sedges.extend(
            StructuredEdge(fresh(f"{x}_{edge.name}"), copies[edge.src], copies[edge.dst])
            for edge in e.sedges
        )

    result = WeightedGraph(tuple(vertices), tuple(sedges))
    logging.info(
        f"Attached a {len(e.vertices)}-vertex graph to {len(f.vertices)} vertices: "
        f"{len(result.vertices)} vertices in total."
    )
    return result
