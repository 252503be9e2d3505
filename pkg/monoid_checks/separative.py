import logging

from app.ktheory.monoid import ClassSpace
from app.models import Verdict
from monoid_checks.base import BaseMonoidPropertyCheck, MonoidPropertyResult


class SeparativeCheck(BaseMonoidPropertyCheck):
    """
    x + z = y + z with z <= n x and z <= m y must imply x = y.
    """

    name = "separative"

    def _partners(self, space: ClassSpace, x: int, z: int) -> list[int]:
        """Pieces y with y + z in the piece of x + z."""
        total = space.add(x, z)
        if total is None:
            return []
        found = set()
        for w in space.members[total]:
            for zv in space.members[z]:
                rest = tuple(a - b for a, b in zip(w, zv))
                if all(c >= 0 for c in rest):
                    found.add(space.piece(rest))
        return sorted(found)

    def check(self, space: ClassSpace) -> MonoidPropertyResult:
        zero = space.piece(space.zero)
        pieces = [i for i in range(len(space.members)) if i != zero]
        for x in pieces:
            for z in pieces:
                if not space.is_below_multiple(z, x):
                    continue
                for y in self._partners(space, x, z):
                    if y == x or not space.is_below_multiple(z, y):
                        continue
                    if not space.provably_distinct(x, y):
                        continue
                    p = space.presentation
                    witness = {
                        "x": p.format(space.representative(x)),
                        "y": p.format(space.representative(y)),
                        "z": p.format(space.representative(z)),
                    }
                    logging.info(f"Separativity fails: {witness}")
                    return MonoidPropertyResult(
                        self.name,
                        Verdict.FALSE,
                        space.bound,
                        witness,
                        note="x + z = y + z and z lies below multiples of both, but x != y",
                    )
        return self.holds(space)
