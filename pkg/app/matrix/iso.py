import logging
from collections import Counter
from dataclasses import dataclass

from app.graded.decompose import BaseRingKind, Block, DecompositionDescriptor
from app.matrix.shifts import canonical_shift
from app.models import Verdict


@dataclass(frozen=True)
class IsoResult:
    verdict: Verdict
    tag_level: bool = False
    """
    Set when rose blocks were matched by petal count and shifts only. Such a
    match is sufficient for graded isomorphism, but it is not known to be
    necessary.
    """
    reason: str | None = None


def _block_key(block: Block) -> tuple:
    if block.base.kind is BaseRingKind.FIELD:
        # decompositions always contain the trivial path, so no common translate is allowed
        return (block.base.order_key, block.size, tuple(sorted(block.shifts.entries)))
    return (block.base.order_key, block.size, canonical_shift(block.shifts).entries)


def graded_iso(d1: DecompositionDescriptor, d2: DecompositionDescriptor) -> IsoResult:
    """
    Decides graded isomorphism of two decomposed algebras by matching
    canonical block descriptors as multisets.
    """
    if d1.has_weighted_rose or d2.has_weighted_rose:
        logging.warning("Graded isomorphism of weighted rose blocks is undecided.")
        return IsoResult(Verdict.UNDECIDED, reason="decomposition contains a weighted rose block")

    same = Counter(map(_block_key, d1.blocks)) == Counter(map(_block_key, d2.blocks))
    tag_level = any(
        b.base.kind is BaseRingKind.ROSE for b in d1.blocks + d2.blocks
    )
    if same and tag_level:
        logging.warning("Rose blocks were matched at tag level only.")
    return IsoResult(Verdict.from_bool(same), tag_level)
