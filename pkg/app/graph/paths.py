import logging
from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from app.config import analysis_config
from app.exceptions import InvalidInputError, UnsupportedGraphError
from app.models import Path, WeightedGraph


@dataclass(frozen=True)
class Orbit:
    """
    Immediate paths from a vertex to a vertex set.

    `unbounded` is set when a cycle can be reached before the set, in which
    case `paths` is empty and `bound` is None.
    """

    paths: tuple[Path, ...] = ()
    bound: int | None = 0
    unbounded: bool = False


def _check_limit(count: int) -> None:
    if count > analysis_config.PATH_LIMIT:
        raise UnsupportedGraphError(
            f"Path enumeration exceeded PATH_LIMIT={analysis_config.PATH_LIMIT}"
        )


def _require_unweighted(graph: WeightedGraph, operation: str) -> None:
    if graph.is_weighted:
        raise UnsupportedGraphError(f"{operation} is defined for graphs with all weights 1")


def paths_into(graph: WeightedGraph, v: str) -> list[Path]:
    """
    All paths of an acyclic graph with range v, the trivial path included,
    ordered by length and then by edge names.
    """
    if not graph.has_vertex(v):
        raise InvalidInputError(f"Unknown vertex '{v}'")
    if not nx.is_directed_acyclic_graph(graph.digraph):
        raise UnsupportedGraphError("paths_into needs an acyclic graph")

    found = [Path.trivial(v)]
    frontier = [Path.trivial(v)]
    while frontier:
        extended = []
        for p in frontier:
            for e in graph.in_edges(p.src):
                extended.append(Path((e.src,) + p.stops, (e.name,) + p.edges))
        found.extend(extended)
        _check_limit(len(found))
        frontier = extended
    return sorted(found, key=lambda p: p.sort_key)


def escape_paths(graph: WeightedGraph, p: Path) -> list[Path]:
    """
    Esc(p) for a nonempty acyclic path p = mu_1...mu_k: every prefix
    mu_1...mu_{i-1} followed by an edge e with s(e) = s(mu_i), where e differs
    from mu_i except at the last step.
    """
    _require_unweighted(graph, "escape_paths")
    if p.is_trivial:
        raise InvalidInputError("escape_paths needs a nonempty path")
    if not p.is_acyclic:
        raise InvalidInputError(f"Path '{p}' contains a cycle")

    escapes = []
    k = len(p.edges)
    for i in range(k):
        prefix = p.prefix(i)
        for e in graph.out_edges(p.stops[i]):
            if e.name == p.edges[i] and i < k - 1:
                continue
            escapes.append(prefix.concat(Path((e.src, e.dst), (e.name,))))
    return sorted(escapes, key=lambda q: q.sort_key)


def orbit(graph: WeightedGraph, v: str, targets: Iterable[str]) -> Orbit:
    """
    O_P(v): the paths from v that end in P and meet P only at their range.

    When a cycle avoiding P is reachable from v the orbit is unbounded.
    """
    _require_unweighted(graph, "orbit")
    target_set = set(targets)
    if not target_set:
        raise InvalidInputError("orbit needs a nonempty vertex set")
    unknown = sorted(t for t in target_set if not graph.has_vertex(t))
    if unknown or not graph.has_vertex(v):
        raise InvalidInputError(f"Unknown vertices: {', '.join(unknown or [v])}")

    if v in target_set:
        return Orbit((Path.trivial(v),), 0)

    outside = graph.digraph.subgraph(u for u in graph.vertices if u not in target_set)
    reach = nx.descendants(outside, v) | {v}
    if not nx.is_directed_acyclic_graph(outside.subgraph(reach)):
        logging.debug(f"Orbit of {v} is unbounded: a cycle avoids the target set.")
        return Orbit((), None, True)

    found = []
    frontier = [Path.trivial(v)]
    while frontier:
        extended = []
        for p in frontier:
            for e in graph.out_edges(p.dst):
                q = Path(p.stops + (e.dst,), p.edges + (e.name,))
                if e.dst in target_set:
                    found.append(q)
                else:
                    extended.append(q)
        _check_limit(len(found) + len(extended))
        frontier = extended

    found.sort(key=lambda q: q.sort_key)
    bound = max((len(q) for q in found), default=0)
    return Orbit(tuple(found), bound)


def acyclic_paths(graph: WeightedGraph) -> list[Path]:
    """Every nonempty path whose vertices are pairwise distinct."""
    found = []
    frontier = [Path.trivial(v) for v in graph.vertices]
    while frontier:
        extended = []
        for p in frontier:
            for e in graph.out_edges(p.dst):
                if e.dst not in p.stops:
                    extended.append(Path(p.stops + (e.dst,), p.edges + (e.name,)))
        found.extend(extended)
        _check_limit(len(found))
        frontier = extended
    return sorted(found, key=lambda q: (q.src, q.sort_key))
