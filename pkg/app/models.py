import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from app.exceptions import GraphFormatError, InvalidInputError


class Verdict(enum.Enum):
    """Fixed answer vocabulary shared by every decision procedure."""

    TRUE = "true"
    FALSE = "false"
    UNDECIDED = "undecided"
    UNKNOWN = "unknown"

    @classmethod
    def from_bool(cls, value: bool) -> "Verdict":
        return cls.TRUE if value else cls.FALSE

    @property
    def is_conclusive(self) -> bool:
        return self in (Verdict.TRUE, Verdict.FALSE)


@dataclass(frozen=True)
class StructuredEdge:
    """
    An edge of a weighted graph standing for `weight` parallel indexed edges.
    """

    name: str
    src: str
    dst: str
    weight: int = 1

    @property
    def is_loop(self) -> bool:
        return self.src == self.dst


@dataclass(frozen=True)
class Path:
    """
    A path e1...ek given by its edges and the vertices it passes through.

    `stops` has one more entry than `edges`: stops[i] = s(e_{i+1}) and
    stops[-1] = r(ek). A trivial path has a single stop and no edges.
    """

    stops: tuple[str, ...]
    edges: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "stops", tuple(self.stops))
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(self.stops) != len(self.edges) + 1:
            raise InvalidInputError(
                f"Path with {len(self.edges)} edges needs {len(self.edges) + 1} stops, got {len(self.stops)}"
            )

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls((vertex,), ())

    @property
    def src(self) -> str:
        return self.stops[0]

    @property
    def dst(self) -> str:
        return self.stops[-1]

    @property
    def length(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_trivial(self) -> bool:
        return not self.edges

    @property
    def is_acyclic(self) -> bool:
        return len(set(self.stops)) == len(self.stops)

    @property
    def sort_key(self) -> tuple[int, tuple[str, ...]]:
        return (len(self.edges), self.edges)

    def concat(self, other: "Path") -> "Path":
        if self.dst != other.src:
            raise InvalidInputError(
                f"Cannot concatenate a path ending at {self.dst} with one starting at {other.src}"
            )
        return Path(self.stops + other.stops[1:], self.edges + other.edges)

    def prefix(self, k: int) -> "Path":
        return Path(self.stops[: k + 1], self.edges[:k])

    def suffix(self, k: int) -> "Path":
        """The path after the first k edges."""
        return Path(self.stops[k:], self.edges[k:])

    def __str__(self) -> str:
        return " ".join(self.edges) if self.edges else self.src


@dataclass(frozen=True)
class WeightedGraph:
    """
    A finite directed graph whose structured edges carry positive weights.

    Weight 1 everywhere gives an ordinary graph. Vertex and edge names share
    one namespace so that expressions over the graph are unambiguous.
    """

    vertices: tuple[str, ...]
    """
    Vertex ids in declaration order. Matrix orderings are derived from it.
    """
    sedges: tuple[StructuredEdge, ...] = field(default_factory=tuple)
    """
    Structured edges in declaration order.
    """

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "sedges", tuple(self.sedges))
        if not self.vertices:
            raise GraphFormatError("Graph declares no vertices")
        seen: set[str] = set()
        for v in self.vertices:
            if v in seen:
                raise GraphFormatError(f"Duplicate name '{v}'")
            seen.add(v)
        declared = set(self.vertices)
        for e in self.sedges:
            if e.name in seen:
                raise GraphFormatError(f"Duplicate name '{e.name}'")
            seen.add(e.name)
            for endpoint in (e.src, e.dst):
                if endpoint not in declared:
                    raise GraphFormatError(
                        f"Edge '{e.name}' has undeclared endpoint '{endpoint}'"
                    )
            if e.weight < 1:
                raise GraphFormatError(f"Edge '{e.name}' has weight {e.weight} < 1")

    @cached_property
    def _edge_by_name(self) -> dict[str, StructuredEdge]:
        return {e.name: e for e in self.sedges}

    @cached_property
    def _out(self) -> dict[str, tuple[StructuredEdge, ...]]:
        out: dict[str, list[StructuredEdge]] = {v: [] for v in self.vertices}
        for e in self.sedges:
            out[e.src].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[StructuredEdge, ...]]:
        into: dict[str, list[StructuredEdge]] = {v: [] for v in self.vertices}
        for e in self.sedges:
            into[e.dst].append(e)
        return {v: tuple(es) for v, es in into.items()}

    def has_vertex(self, name: str) -> bool:
        return name in self._out

    def has_edge(self, name: str) -> bool:
        return name in self._edge_by_name

    def edge(self, name: str) -> StructuredEdge:
        try:
            return self._edge_by_name[name]
        except KeyError:
            raise InvalidInputError(f"Unknown edge '{name}'") from None

    def out_edges(self, v: str) -> tuple[StructuredEdge, ...]:
        return self._out[v]

    def in_edges(self, v: str) -> tuple[StructuredEdge, ...]:
        return self._in[v]

    def is_sink(self, v: str) -> bool:
        return not self._out[v]

    @cached_property
    def sinks(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if not self._out[v])

    @cached_property
    def is_weighted(self) -> bool:
        return any(e.weight > 1 for e in self.sedges)

    def max_out_weight(self, v: str) -> int:
        """n_v: the largest weight emitted by v, 0 for sinks."""
        return max((e.weight for e in self._out[v]), default=0)

    def derived_edges(self) -> tuple[tuple[str, int], ...]:
        """E^1: one (name, index) pair per indexed copy of every structured edge."""
        return tuple((e.name, i) for e in self.sedges for i in range(1, e.weight + 1))

    def path(self, edges: Sequence[str], source: str | None = None) -> Path:
        """Builds a Path from edge names, checking that consecutive edges meet."""
        if not edges:
            if source is None or not self.has_vertex(source):
                raise InvalidInputError(f"Trivial path needs a vertex, got {source!r}")
            return Path.trivial(source)
        first = self.edge(edges[0])
        if source is not None and source != first.src:
            raise InvalidInputError(f"Edge '{first.name}' does not start at {source}")
        stops = [first.src]
        for name in edges:
            e = self.edge(name)
            if e.src != stops[-1]:
                raise InvalidInputError(f"Edge '{name}' does not start at {stops[-1]}")
            stops.append(e.dst)
        return Path(tuple(stops), tuple(edges))

    def without_edges(self, names: Iterable[str]) -> "WeightedGraph":
        dropped = set(names)
        return WeightedGraph(
            self.vertices, tuple(e for e in self.sedges if e.name not in dropped)
        )

    @cached_property
    def digraph(self) -> nx.MultiDiGraph:
        """networkx view; edge keys are structured-edge names."""
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for e in self.sedges:
            g.add_edge(e.src, e.dst, key=e.name, weight=e.weight)
        return g


class HeadKind(enum.Enum):
    """The three kinds of head a polycephaly graph can have."""

    CYCLE = "cycle"
    ROSE = "rose"
    SINK = "sink"


@dataclass(frozen=True)
class HeadDescriptor:
    """
    A head of a polycephaly graph: an exit-free cycle, a rose or a sink.

    For cycles `vertices` and `edges` run around the cycle starting at `base`,
    so edges[0] is the edge leaving the base. For roses `edges` are the petals.
    """

    kind: HeadKind
    base: str
    vertices: tuple[str, ...]
    edges: tuple[str, ...] = ()
    weights: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.edges) if self.kind is HeadKind.CYCLE else 0

    @property
    def petal_count(self) -> int:
        return len(self.edges) if self.kind is HeadKind.ROSE else 0

    @property
    def is_loop(self) -> bool:
        return self.kind is HeadKind.CYCLE and len(self.edges) == 1

    @property
    def is_weighted(self) -> bool:
        return any(w > 1 for w in self.weights)

    def rebased(self, vertex: str) -> "HeadDescriptor":
        """The same cycle read from another of its vertices."""
        if self.kind is not HeadKind.CYCLE or vertex not in self.vertices:
            raise InvalidInputError(f"{vertex} is not a vertex of the cycle at {self.base}")
        k = self.vertices.index(vertex)
        return HeadDescriptor(
            self.kind,
            vertex,
            self.vertices[k:] + self.vertices[:k],
            self.edges[k:] + self.edges[:k],
            self.weights[k:] + self.weights[:k],
        )

    def __str__(self) -> str:
        if self.kind is HeadKind.CYCLE:
            return f"cycle({self.length}) at {self.base} [{','.join(self.vertices)}]"
        if self.kind is HeadKind.ROSE:
            if self.is_weighted:
                return f"rose({self.petal_count}; weights {','.join(map(str, self.weights))}) at {self.base}"
            return f"rose({self.petal_count}) at {self.base}"
        return f"sink at {self.base}"


class GraphClassTag(enum.Enum):
    ACYCLIC = "acyclic"
    CN_COMET = "cn-comet"
    MULTI_HEADED_COMET = "multi-headed-comet"
    MULTI_HEADED_ROSE = "multi-headed-rose"
    POLYCEPHALY = "polycephaly"
    NOT_POLYCEPHALY = "not-polycephaly"


@dataclass(frozen=True)
class GraphClass:
    """Result of classifying a graph, with its heads in vertex order."""

    tag: GraphClassTag
    heads: tuple[HeadDescriptor, ...] = ()
    reason: str | None = None

    @property
    def is_polycephaly(self) -> bool:
        return self.tag is not GraphClassTag.NOT_POLYCEPHALY

    @property
    def is_multi_headed_comet(self) -> bool:
        return self.tag in (GraphClassTag.CN_COMET, GraphClassTag.MULTI_HEADED_COMET)

    @property
    def comet_length(self) -> int | None:
        if self.tag is GraphClassTag.CN_COMET:
            return self.heads[0].length
        return None

    def __str__(self) -> str:
        if self.tag is GraphClassTag.CN_COMET:
            return f"{self.tag.value}({self.comet_length})"
        return self.tag.value
