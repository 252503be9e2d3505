import enum
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from app.exceptions import UnsupportedGraphError
from app.graded.decompose import BaseRingKind, Block, DecompositionDescriptor, decompose
from app.models import Path, WeightedGraph
from app.symbolic.element import Element, Monomial
from app.symbolic.expressions import format_element


class RingForm(enum.Enum):
    GROUP_RING = "group-ring"
    SKEW_GROUP_RING = "skew-group-ring"
    CROSSED_PRODUCT = "crossed-product"
    STRONGLY_GRADED_ONLY = "strongly-graded-only"
    NOT_STRONGLY_GRADED = "not-strongly-graded"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class PermutationWitness:
    """
    An invertible homogeneous matrix of degree 1 in one Laurent block: the
    entries e_{i, j}(x^{k l}) for each (i, j, k) in `entries`.
    """

    base: str
    entries: tuple[tuple[int, int, int], ...]
    element: str
    """
    The same unit written in the algebra, sum of p_i C^k p_j^*.
    """


@dataclass(frozen=True)
class RingFormDescriptor:
    form: RingForm
    witnesses: tuple[PermutationWitness, ...] = field(default_factory=tuple)
    automorphism: str | None = None
    reason: str | None = None

    @property
    def is_crossed_product(self) -> bool:
        return self.form in (RingForm.GROUP_RING, RingForm.SKEW_GROUP_RING, RingForm.CROSSED_PRODUCT)


@dataclass(frozen=True)
class GroupRingResult:
    is_group_ring: bool
    description: str | None = None
    """
    The algebra written as a group ring over Z, e.g. `M_4(K)(0,1,2,3)[Z]`.
    """


def _cycle_power(block: Block, k: int) -> Path:
    head = block.head
    stops = head.vertices * k + (head.base,)
    return Path(stops, head.edges * k)


def _unit_element(graph: WeightedGraph, block: Block, entries: list[tuple[int, int, int]]) -> str:
    unit = Element.zero(graph)
    for i, j, k in entries:
        p_i, p_j = block.paths[i], block.paths[j]
        if k >= 0:
            m = Monomial(p_i.concat(_cycle_power(block, k)), p_j)
        else:
            m = Monomial(p_i, p_j.concat(_cycle_power(block, -k)))
        unit = unit + Element.from_monomial(graph, m)
    return format_element(unit)


def degree_one_permutation(block: Block) -> list[tuple[int, int, int]] | None:
    """
    A permutation matrix of degree 1 in M_n(K[x^l, x^-l])(d), or None when
    the residues d_i mod l are not equidistributed and no such unit exists.
    """
    l = block.base.period
    classes: dict[int, list[int]] = defaultdict(list)
    for i, d in enumerate(block.shifts.entries):
        classes[d % l].append(i)
    sizes = {len(classes[r]) for r in range(l)}
    if len(sizes) != 1:
        return None

    entries = []
    deltas = block.shifts.entries
    for r in range(l):
        for i, j in zip(classes[r], classes[(r - 1) % l]):
            # kl + d_i - d_j = 1
            entries.append((i, j, (1 - deltas[i] + deltas[j]) // l))
    return sorted(entries)


def crossed_product_status(d: DecompositionDescriptor) -> RingFormDescriptor:
    """Decides which of the strongly graded ring forms the decomposed algebra takes."""
    if d.has_field_block:
        return RingFormDescriptor(RingForm.NOT_STRONGLY_GRADED, reason="a sink block is not strongly graded")
    if any(b.base.kind in (BaseRingKind.ROSE, BaseRingKind.WEIGHTED_ROSE) for b in d.blocks):
        logging.warning("Crossed product status of rose blocks is undecided.")
        return RingFormDescriptor(RingForm.UNDECIDED, reason="rose blocks are not covered by the residue criterion")

    witnesses = []
    for block in d.blocks:
        entries = degree_one_permutation(block)
        if entries is None:
            counts = Counter(x % block.base.period for x in block.shifts.entries)
            return RingFormDescriptor(
                RingForm.STRONGLY_GRADED_ONLY,
                reason=f"no invertible element of degree 1 in the block at {block.head.base} "
                f"(residue counts {dict(sorted(counts.items()))})",
            )
        witnesses.append(
            PermutationWitness(block.head.base, tuple(entries), _unit_element(d.graph, block, entries))
        )

    if all(b.base.period == 1 for b in d.blocks):
        return RingFormDescriptor(RingForm.GROUP_RING, tuple(witnesses))

    automorphism = None
    if len(d.blocks) == 1 and len(d.graph.vertices) == d.blocks[0].base.period:
        l = d.blocks[0].base.period
        automorphism = f"R^{l} *_sigma Z with sigma the cyclic shift of R^{l}"
    return RingFormDescriptor(RingForm.SKEW_GROUP_RING, tuple(witnesses), automorphism)


def is_group_ring(g: WeightedGraph) -> GroupRingResult:
    """Whether every head is a single loop, so the algebra is a group ring over Z."""
    if g.is_weighted:
        raise UnsupportedGraphError("Group ring detection needs a graph with all weights 1")
    d = decompose(g)
    if not all(b.head.is_loop for b in d.blocks):
        return GroupRingResult(False)

    counts = Counter(f"M_{b.size}(K){b.shifts}" for b in d.blocks)
    parts = [label if n == 1 else f"{label}^{n}" for label, n in counts.items()]
    if len(parts) == 1:
        return GroupRingResult(True, f"{parts[0]}[Z]")
    return GroupRingResult(True, f"({' + '.join(parts)})[Z]")
