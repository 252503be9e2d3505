import logging

import networkx as nx

from app.exceptions import UnsupportedGraphError
from app.models import (
    GraphClass,
    GraphClassTag,
    HeadDescriptor,
    HeadKind,
    WeightedGraph,
)


def _not_polycephaly(reason: str) -> GraphClass:
    logging.info(f"Graph is not polycephaly: {reason}")
    return GraphClass(GraphClassTag.NOT_POLYCEPHALY, (), reason)


def _loop_head(graph: WeightedGraph, v: str) -> HeadDescriptor | str:
    """Head at a vertex carrying loops, or the reason it is not one."""
    out = graph.out_edges(v)
    loops = [e for e in out if e.is_loop]
    if len(loops) != len(out):
        return f"loop at {v} has an exit"
    if len(loops) == 1 and loops[0].weight == 1:
        return HeadDescriptor(HeadKind.CYCLE, v, (v,), (loops[0].name,), (1,))
    return HeadDescriptor(
        HeadKind.ROSE,
        v,
        (v,),
        tuple(e.name for e in loops),
        tuple(e.weight for e in loops),
    )


def _cycle_head(graph: WeightedGraph, cycle: list[str]) -> HeadDescriptor | str:
    """Head for a simple cycle of length >= 2, or the reason it is not one."""
    base = min(cycle)
    start = cycle.index(base)
    ordered = cycle[start:] + cycle[:start]
    edges = []
    for i, v in enumerate(ordered):
        out = graph.out_edges(v)
        nxt = ordered[(i + 1) % len(ordered)]
        if len(out) != 1 or out[0].dst != nxt:
            return f"cycle through {v} has an exit"
        if out[0].weight != 1:
            return f"weighted edge '{out[0].name}' lies on a cycle"
        edges.append(out[0].name)
    return HeadDescriptor(HeadKind.CYCLE, base, tuple(ordered), tuple(edges), (1,) * len(edges))


def _tag_for(heads: list[HeadDescriptor]) -> GraphClassTag:
    kinds = [h.kind for h in heads]
    if all(k is HeadKind.SINK for k in kinds):
        return GraphClassTag.ACYCLIC
    if all(k is HeadKind.CYCLE for k in kinds):
        return GraphClassTag.CN_COMET if len(heads) == 1 else GraphClassTag.MULTI_HEADED_COMET
    if all(h.kind is HeadKind.ROSE or h.is_loop for h in heads):
        return GraphClassTag.MULTI_HEADED_ROSE
    return GraphClassTag.POLYCEPHALY


def classify(graph: WeightedGraph) -> GraphClass:
    """
    Decides whether a finite connected graph is polycephaly and finds its heads.

    Heads are exit-free cycles (a single loop counts as a cycle of length
    one), roses (a vertex whose out-edges are two or more loops, possibly
    weighted) and sinks. Weighted edges are allowed only as rose petals.
    Heads are listed in vertex declaration order of their base vertex.
    """
    if not nx.is_weakly_connected(graph.digraph):
        raise UnsupportedGraphError(
            "Graph is disconnected; analyze its connected components separately"
        )

    heads: dict[str, HeadDescriptor] = {}
    for v in graph.vertices:
        if graph.is_sink(v):
            heads[v] = HeadDescriptor(HeadKind.SINK, v, (v,))
        elif any(e.is_loop for e in graph.out_edges(v)):
            head = _loop_head(graph, v)
            if isinstance(head, str):
                return _not_polycephaly(head)
            heads[v] = head

    for e in graph.sedges:
        if e.weight > 1 and not (e.is_loop and e.src in heads):
            return _not_polycephaly(f"weighted edge '{e.name}' lies outside a rose head")

    simple = nx.DiGraph(graph.digraph)
    simple.remove_edges_from(nx.selfloop_edges(simple))
    for cycle in nx.simple_cycles(simple):
        head = _cycle_head(graph, cycle)
        if isinstance(head, str):
            return _not_polycephaly(head)
        heads[head.base] = head

    head_vertices = {u for h in heads.values() for u in h.vertices}
    for v in graph.vertices:
        if not (nx.descendants(graph.digraph, v) | {v}) & head_vertices:
            return _not_polycephaly(f"vertex {v} is not connected to any head")

    order = {v: i for i, v in enumerate(graph.vertices)}
    ordered = sorted(heads.values(), key=lambda h: order[h.base])
    tag = _tag_for(ordered)
    logging.info(f"Classified graph as {tag.value} with {len(ordered)} heads.")
    return GraphClass(tag, tuple(ordered))
