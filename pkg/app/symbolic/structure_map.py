"""
The isomorphism from the algebra of a polycephaly graph onto its block
decomposition.

A monomial m n* with r(m) = w is first expanded as sum (m g)(n g)* over the
immediate paths g from w to the base vertices. Each path a ending at a base
splits as a = p x, with p a path of the pruned graph and x a power of the
cycle, a word in the rose petals, or trivial at a sink. The monomial
(p_i x)(p_j y)* is sent to the matrix unit e_ij(x y*).
"""
import logging
from dataclasses import dataclass

import sympy

from app.exceptions import InvalidInputError
from app.graded.decompose import BaseRingKind, Block, DecompositionDescriptor
from app.graph.paths import orbit
from app.models import HeadKind, Path, StructuredEdge, WeightedGraph
from app.symbolic.element import Element, Monomial
from app.symbolic.rewriting import normal_form

x = sympy.Symbol("x")


def rose_graph_of(block: Block) -> WeightedGraph:
    """The one-vertex graph carrying the petals of a rose block."""
    head = block.head
    return WeightedGraph(
        (head.base,),
        tuple(StructuredEdge(name, head.base, head.base) for name in head.edges),
    )


@dataclass(frozen=True)
class _Split:
    index: int
    tail: Path
    """
    What follows the pruned-graph path: cycle powers, petal words or nothing.
    """


def _split(block: Block, path: Path) -> _Split:
    head = block.head
    cut = len(path)
    if head.kind is HeadKind.CYCLE:
        if head.edges[0] in path.edges:
            cut = path.edges.index(head.edges[0])
    elif head.kind is HeadKind.ROSE:
        petals = set(head.edges)
        cut = next((i for i, e in enumerate(path.edges) if e in petals), len(path))
    prefix = path.prefix(cut)
    try:
        index = block.paths.index(prefix)
    except ValueError:
        raise InvalidInputError(f"Path '{prefix}' does not end at the base {head.base}") from None
    return _Split(index, path.suffix(cut))


class BlockMatrixElement:
    """
    An element of the product of matrix algebras of a decomposition, stored
    as one sparse matrix per block. Comet and sink entries are sympy
    expressions in x (where x^l is the cycle); rose entries are normal-form
    elements of L(1, n).
    """

    def __init__(self, decomposition: DecompositionDescriptor, domain, blocks: tuple[dict, ...] | None = None):
        self.decomposition = decomposition
        self.domain = domain
        self.blocks: tuple[dict, ...] = blocks or tuple({} for _ in decomposition.blocks)

    def _entry_is_zero(self, entry) -> bool:
        if isinstance(entry, Element):
            return entry.is_zero
        coefficients = sympy.expand(entry).as_coefficients_dict().values()
        if self.domain.is_FiniteField:
            p = self.domain.characteristic()
            return all(sympy.Rational(c) % p == 0 for c in coefficients)
        return all(c == 0 for c in coefficients)

    def _combine(self, other: "BlockMatrixElement", sign: int) -> "BlockMatrixElement":
        if other.decomposition is not self.decomposition and other.decomposition != self.decomposition:
            raise InvalidInputError("Block elements belong to different decompositions")
        out = []
        for mine, theirs in zip(self.blocks, other.blocks):
            merged = dict(mine)
            for key, entry in theirs.items():
                current = merged.get(key)
                if isinstance(entry, Element):
                    merged[key] = entry.scale(sign) if current is None else normal_form(current + entry.scale(sign))
                else:
                    merged[key] = sign * entry if current is None else sympy.expand(current + sign * entry)
            out.append({k: v for k, v in merged.items() if not self._entry_is_zero(v)})
        return BlockMatrixElement(self.decomposition, self.domain, tuple(out))

    def __add__(self, other: "BlockMatrixElement") -> "BlockMatrixElement":
        return self._combine(other, 1)

    def __sub__(self, other: "BlockMatrixElement") -> "BlockMatrixElement":
        return self._combine(other, -1)

    def __mul__(self, other: "BlockMatrixElement") -> "BlockMatrixElement":
        out = []
        for block, mine, theirs in zip(self.decomposition.blocks, self.blocks, other.blocks):
            product: dict = {}
            for (i, k), a in mine.items():
                for (k2, j), b in theirs.items():
                    if k != k2:
                        continue
                    if block.base.kind is BaseRingKind.ROSE:
                        term = normal_form(a * b)
                        product[(i, j)] = term if (i, j) not in product else normal_form(product[(i, j)] + term)
                    else:
                        product[(i, j)] = sympy.expand(product.get((i, j), 0) + a * b)
            out.append({k: v for k, v in product.items() if not self._entry_is_zero(v)})
        return BlockMatrixElement(self.decomposition, self.domain, tuple(out))

    @property
    def is_zero(self) -> bool:
        return all(not entries for entries in self.blocks)

    def entry(self, base: str, i: int, j: int):
        """Entry (i, j) of the block whose head has the given base vertex; None when zero."""
        for block, entries in zip(self.decomposition.blocks, self.blocks):
            if block.head.base == base:
                return entries.get((i, j))
        raise InvalidInputError(f"No block has base vertex {base}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlockMatrixElement):
            return NotImplemented
        return (self - other).is_zero


def _entry(block: Block, left: Path, right: Path, coefficient, domain, rose: WeightedGraph | None):
    if block.base.kind is BaseRingKind.FIELD:
        return domain.to_sympy(coefficient)
    if block.base.kind is BaseRingKind.LAURENT:
        l = block.base.period
        power = len(left) // l - len(right) // l
        return domain.to_sympy(coefficient) * x ** (power * l)
    real = Path((rose.vertices[0],) * (len(left) + 1), left.edges)
    ghost = Path((rose.vertices[0],) * (len(right) + 1), right.edges)
    return normal_form(Element(rose, {Monomial(real, ghost): coefficient}, domain))


def structure_map(a: Element, d: DecompositionDescriptor) -> BlockMatrixElement:
    """The image of a in the block decomposition d of its graph."""
    if d.graph != a.graph:
        raise InvalidInputError("Decomposition was computed for a different graph")

    bases = {b.head.base: b for b in d.blocks}
    roses = {
        b.head.base: rose_graph_of(b)
        for b in d.blocks
        if b.base.kind is BaseRingKind.ROSE
    }
    image = BlockMatrixElement(d, a.domain)
    for m, c in a.terms.items():
        expansion = orbit(a.graph, m.real.dst, bases)
        for g in expansion.paths:
            left, right = m.real.concat(g), m.ghost.concat(g)
            block = bases[g.dst]
            ls, rs = _split(block, left), _split(block, right)
            position = d.blocks.index(block)
            entries = [dict() for _ in d.blocks]
            entries[position][(ls.index, rs.index)] = _entry(
                block, ls.tail, rs.tail, c, a.domain, roses.get(block.head.base)
            )
            image = image + BlockMatrixElement(d, a.domain, tuple(entries))
    logging.debug(f"Mapped {len(a.terms)} terms into {len(d.blocks)} blocks.")
    return image
