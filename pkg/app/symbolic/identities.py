from typing import Iterable

from app.exceptions import InvalidInputError
from app.graph.paths import escape_paths, orbit
from app.models import Path, WeightedGraph
from app.symbolic.element import Element, Monomial


def _sum_of_projections(graph: WeightedGraph, paths: Iterable[Path]) -> Element:
    total = Element.zero(graph)
    for p in paths:
        total = total + Element.from_monomial(graph, Monomial(p, p))
    return total


def escape_identity(graph: WeightedGraph, p: Path) -> Element:
    """s(p) - sum over Esc(p) of a a*, which vanishes in the algebra."""
    return Element.vertex(graph, p.src) - _sum_of_projections(graph, escape_paths(graph, p))


def orbit_identity(graph: WeightedGraph, v: str, targets: Iterable[str]) -> Element:
    """v - sum over O_P(v) of g g*. Needs a bounded orbit whose paths all reach P."""
    result = orbit(graph, v, targets)
    if result.unbounded:
        raise InvalidInputError(f"The orbit of {v} is unbounded")
    return Element.vertex(graph, v) - _sum_of_projections(graph, result.paths)
