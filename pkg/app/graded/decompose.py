import enum
import logging
from dataclasses import dataclass
from typing import Mapping

from app.exceptions import InvalidInputError, UnsupportedGraphError
from app.graph.classify import classify
from app.graph.paths import paths_into
from app.matrix.shifts import ShiftVector, canonical_shift
from app.models import HeadDescriptor, HeadKind, Path, WeightedGraph


class BaseRingKind(enum.Enum):
    FIELD = "field"
    LAURENT = "laurent"
    ROSE = "rose"
    WEIGHTED_ROSE = "wrose"


_KIND_ORDER = {
    BaseRingKind.FIELD: 0,
    BaseRingKind.LAURENT: 1,
    BaseRingKind.ROSE: 2,
    BaseRingKind.WEIGHTED_ROSE: 3,
}


@dataclass(frozen=True)
class BaseRing:
    """
    Graded base ring of a block: K, K[x^l, x^-l], L(1, n) or the algebra of
    a weighted rose.
    """

    kind: BaseRingKind
    period: int = 0
    """
    Cycle length l for Laurent rings, 0 otherwise.
    """
    weights: tuple[int, ...] = ()
    """
    Petal weights for (weighted) roses, one entry per petal.
    """

    @property
    def petals(self) -> int:
        return len(self.weights)

    @property
    def modulus(self) -> int:
        """Grading modulus used for shift calculus; roses are compared with modulus 0."""
        return self.period if self.kind is BaseRingKind.LAURENT else 0

    @property
    def order_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.period, self.petals, self.weights)

    @property
    def label(self) -> str:
        if self.kind is BaseRingKind.FIELD:
            return "K"
        if self.kind is BaseRingKind.LAURENT:
            if self.period == 1:
                return "K[x,x^-1]"
            return f"K[x^{self.period},x^-{self.period}]"
        if self.kind is BaseRingKind.ROSE:
            return f"L(1,{self.petals})"
        if len(set(self.weights)) == 1:
            n = self.weights[0]
            return f"L({n},{self.petals - n + 1})"
        return f"L({self.petals};{','.join(map(str, self.weights))})"

    @classmethod
    def for_head(cls, head: HeadDescriptor) -> "BaseRing":
        if head.kind is HeadKind.SINK:
            return cls(BaseRingKind.FIELD)
        if head.kind is HeadKind.CYCLE:
            return cls(BaseRingKind.LAURENT, period=head.length)
        if head.is_weighted:
            return cls(BaseRingKind.WEIGHTED_ROSE, weights=head.weights)
        return cls(BaseRingKind.ROSE, weights=head.weights)


@dataclass(frozen=True)
class Block:
    """One summand M_n(B)(d_1, ..., d_n) of a decomposition."""

    size: int
    base: BaseRing
    shifts: ShiftVector
    head: HeadDescriptor
    paths: tuple[Path, ...]
    """
    The paths p_i of the pruned graph ending at the head's base vertex, in
    the order that fixes the shift vector.
    """

    @property
    def canonical_key(self) -> tuple:
        return (self.base.order_key, self.size, canonical_shift(self.shifts).entries)

    def __str__(self) -> str:
        return f"M_{self.size}({self.base.label}){self.shifts}"


@dataclass(frozen=True)
class DecompositionDescriptor:
    blocks: tuple[Block, ...]
    graph: WeightedGraph
    removed_edges: tuple[str, ...]
    """
    Edges deleted to form the acyclic pruned graph: the edge leaving each
    cycle's base vertex and every rose petal.
    """

    @property
    def base_vertices(self) -> tuple[str, ...]:
        return tuple(b.head.base for b in self.blocks)

    @property
    def has_field_block(self) -> bool:
        return any(b.base.kind is BaseRingKind.FIELD for b in self.blocks)

    @property
    def has_weighted_rose(self) -> bool:
        return any(b.base.kind is BaseRingKind.WEIGHTED_ROSE for b in self.blocks)

    def block_at(self, base: str) -> Block:
        for b in self.blocks:
            if b.head.base == base:
                return b
        raise InvalidInputError(f"No block has base vertex {base}")

    def __str__(self) -> str:
        return describe(self)


def _apply_overrides(
    heads: tuple[HeadDescriptor, ...], base_overrides: Mapping[str, str]
) -> list[HeadDescriptor]:
    rebased = list(heads)
    for key, vertex in base_overrides.items():
        for i, head in enumerate(rebased):
            if head.kind is HeadKind.CYCLE and key in head.vertices:
                if vertex not in head.vertices:
                    raise InvalidInputError(
                        f"{vertex} is not on the cycle through {key}"
                    )
                rebased[i] = head.rebased(vertex)
                break
        else:
            raise InvalidInputError(f"{key} is not a vertex of any cycle head")
    return rebased


def decompose(
    g: WeightedGraph, base_overrides: Mapping[str, str] | None = None
) -> DecompositionDescriptor:
    """
    Decomposes the algebra of a polycephaly graph into graded matrix blocks.

    Each cycle is cut at its base vertex (the smallest vertex id unless
    `base_overrides` maps some vertex of the cycle to another one), every
    rose loses its petals, and each head contributes the block
    M_n(B)(|p_1|, ..., |p_n|) over the paths p_i into its base.
    """
    graph_class = classify(g)
    if not graph_class.is_polycephaly:
        raise UnsupportedGraphError(f"Graph is not polycephaly: {graph_class.reason}")

    heads = _apply_overrides(graph_class.heads, base_overrides or {})
    removed: list[str] = []
    for head in heads:
        if head.kind is HeadKind.CYCLE:
            removed.append(head.edges[0])
        elif head.kind is HeadKind.ROSE:
            removed.extend(head.edges)
    pruned = g.without_edges(removed)

    blocks = []
    for head in heads:
        base = BaseRing.for_head(head)
        paths = tuple(paths_into(pruned, head.base))
        shifts = ShiftVector(tuple(len(p) for p in paths), base.modulus)
        blocks.append(Block(len(paths), base, shifts, head, paths))

    blocks.sort(key=lambda b: (b.canonical_key, b.head.base))
    logging.info(f"Decomposed graph into {len(blocks)} blocks.")
    return DecompositionDescriptor(tuple(blocks), g, tuple(removed))


def describe(d: DecompositionDescriptor) -> str:
    """Text form, e.g. `M_3(K)(0,1,2) + M_4(K[x^2,x^-2])(0,1,1,2)`."""
    return " + ".join(str(b) for b in d.blocks)
