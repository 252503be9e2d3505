"""Builders for the standard graph families used in tests and documentation."""
from app.exceptions import InvalidInputError
from app.models import StructuredEdge, WeightedGraph


def _require_positive(n: int, what: str) -> None:
    if n < 1:
        raise InvalidInputError(f"{what} must be at least 1, got {n}")


def line_graph(n: int, prefix: str = "v") -> WeightedGraph:
    """Oriented n-line v1 -> v2 -> ... -> vn with edges e1..e(n-1)."""
    _require_positive(n, "Line length")
    vertices = tuple(f"{prefix}{i}" for i in range(1, n + 1))
    sedges = tuple(
        StructuredEdge(f"e{i}", vertices[i - 1], vertices[i]) for i in range(1, n)
    )
    return WeightedGraph(vertices, sedges)


def cycle_graph(n: int, prefix: str = "v") -> WeightedGraph:
    """The cycle C_n: v1 -> ... -> vn -> v1."""
    _require_positive(n, "Cycle length")
    vertices = tuple(f"{prefix}{i}" for i in range(1, n + 1))
    sedges = tuple(
        StructuredEdge(f"c{i}", vertices[i - 1], vertices[i % n]) for i in range(1, n + 1)
    )
    return WeightedGraph(vertices, sedges)


def rose_graph(petals: int, weight: int = 1, vertex: str = "v") -> WeightedGraph:
    """One vertex with `petals` loops, all of the given weight."""
    _require_positive(petals, "Petal count")
    _require_positive(weight, "Weight")
    sedges = tuple(StructuredEdge(f"a{i}", vertex, vertex, weight) for i in range(1, petals + 1))
    return WeightedGraph((vertex,), sedges)


def leavitt_rose(n: int, k: int, vertex: str = "v") -> WeightedGraph:
    """
    The weighted rose whose algebra is L(n, n+k): n+k petals of weight n.
    """
    _require_positive(n, "Weight")
    _require_positive(k, "k")
    return rose_graph(n + k, n, vertex)


def line_into_rose(length: int, n: int, k: int) -> WeightedGraph:
    """An oriented line whose last vertex carries the weighted rose of L(n, n+k)."""
    line = line_graph(length)
    rose = leavitt_rose(n, k, vertex=line.vertices[-1])
    return WeightedGraph(line.vertices, line.sedges + rose.sedges)
