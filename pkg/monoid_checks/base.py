import abc
from dataclasses import dataclass, field

from app.ktheory.monoid import ClassSpace
from app.models import Verdict


@dataclass
class MonoidPropertyResult:
    """
    A standard data structure for returning the outcome of a property search.
    """

    property_name: str
    """
    The property searched for, e.g. "refinement" or "separative".
    """
    verdict: Verdict
    """
    FALSE when a counterexample was found. TRUE means only that no
    counterexample exists among elements with coefficient sum up to `bound`.
    """
    bound: int
    """
    The largest coefficient sum of any element that was enumerated.
    """
    witness: dict[str, str] = field(default_factory=dict)
    """
    The counterexample, keyed by the names used in the property's definition
    (x1, x2, y1, y2 for refinement; x, y, z for separativity).
    """
    note: str | None = None
    """
    Why the witness is a counterexample, in a sentence.
    """


class BaseMonoidPropertyCheck(abc.ABC):
    """
    Abstract base class for bounded searches of monoid properties.

    Each check is a subclass implementing `check` over the enumerated
    elements of a presented monoid.
    """

    name: str = ""

    @abc.abstractmethod
    def check(self, space: ClassSpace) -> MonoidPropertyResult:
        """
        Search the space for a counterexample and report it, or report that
        the property holds up to the space's bound.
        """
        raise NotImplementedError

    def holds(self, space: ClassSpace) -> MonoidPropertyResult:
        return MonoidPropertyResult(
            self.name,
            Verdict.TRUE,
            space.bound,
            note=f"no counterexample with coefficient sum up to {space.bound}",
        )
