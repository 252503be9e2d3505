import itertools
import logging

from app.ktheory.monoid import ClassSpace
from app.models import Verdict
from monoid_checks.base import BaseMonoidPropertyCheck, MonoidPropertyResult


class RefinementCheck(BaseMonoidPropertyCheck):
    """
    x1 + x2 = y1 + y2 must imply x1 = z11 + z12, x2 = z21 + z22,
    y1 = z11 + z21 and y2 = z12 + z22 for some z's.
    """

    name = "refinement"

    def _refines(self, space: ClassSpace, x1: int, x2: int, y1: int, y2: int) -> bool:
        """False only when every candidate refinement provably fails."""
        for (z11, z12), (z21, z22) in itertools.product(space.splits(x1), space.splits(x2)):
            first, second = space.add(z11, z21), space.add(z12, z22)
            if first is None or second is None:
                return True
            if not space.provably_distinct(first, y1) and not space.provably_distinct(second, y2):
                return True
        return False

    def check(self, space: ClassSpace) -> MonoidPropertyResult:
        pieces = range(len(space.members))
        for x1, x2 in itertools.combinations_with_replacement(pieces, 2):
            total = space.add(x1, x2)
            if x1 == space.piece(space.zero) or total is None:
                continue
            if not (space.closed[x1] and space.closed[x2]):
                continue
            candidates = sorted(
                (y for y in space.splits(total) if y[0] <= y[1]),
            )
            for y1, y2 in candidates:
                if self._refines(space, x1, x2, y1, y2):
                    continue
                p = space.presentation
                witness = {
                    "x1": p.format(space.representative(x1)),
                    "x2": p.format(space.representative(x2)),
                    "y1": p.format(space.representative(y1)),
                    "y2": p.format(space.representative(y2)),
                }
                logging.info(f"Refinement fails: {witness}")
                return MonoidPropertyResult(
                    self.name,
                    Verdict.FALSE,
                    space.bound,
                    witness,
                    note="x1 + x2 = y1 + y2 but no z's refine both decompositions",
                )
        return self.holds(space)
