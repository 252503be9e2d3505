"""
Elements of an unweighted Leavitt path algebra as linear combinations of
monomials a b*, with coefficients in a sympy domain.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from sympy import GF, QQ, isprime

from app.config import analysis_config
from app.exceptions import InvalidInputError, UnsupportedGraphError
from app.models import Path, WeightedGraph


def coefficient_domain():
    """QQ, or GF(p) when FIELD_CHARACTERISTIC is a prime p < 2^31."""
    p = analysis_config.FIELD_CHARACTERISTIC
    if p == 0:
        return QQ
    if p >= 2**31 or not isprime(p):
        raise InvalidInputError(f"FIELD_CHARACTERISTIC must be 0 or a prime below 2^31, got {p}")
    return GF(p)


def to_coefficient(domain, value: int | Fraction):
    value = Fraction(value)
    den = domain.convert(value.denominator)
    if domain.is_zero(den):
        raise InvalidInputError(f"Coefficient {value} is not defined in {domain}")
    return domain.convert(value.numerator) / den


@dataclass(frozen=True)
class Monomial:
    """The monomial real * ghost^*, where both paths end at the same vertex."""

    real: Path
    ghost: Path

    def __post_init__(self):
        if self.real.dst != self.ghost.dst:
            raise InvalidInputError(
                f"Monomial paths must share a range, got {self.real.dst} and {self.ghost.dst}"
            )

    @classmethod
    def vertex(cls, v: str) -> "Monomial":
        return cls(Path.trivial(v), Path.trivial(v))

    @property
    def degree(self) -> int:
        return len(self.real) - len(self.ghost)

    @property
    def src(self) -> str:
        return self.real.src

    @property
    def is_vertex(self) -> bool:
        return self.real.is_trivial and self.ghost.is_trivial

    @property
    def sort_key(self) -> tuple:
        return (
            len(self.real) + len(self.ghost),
            self.real.edges,
            self.ghost.edges,
            self.real.src,
            self.ghost.src,
        )

    def involute(self) -> "Monomial":
        return Monomial(self.ghost, self.real)

    def factors(self) -> list[str]:
        """Juxtaposed factors in expression syntax: real edges, then ghosts right to left."""
        if self.is_vertex:
            return [self.real.src]
        return list(self.real.edges) + [f"{e}*" for e in reversed(self.ghost.edges)]

    def __str__(self) -> str:
        return " ".join(self.factors())


def _prefix_rest(prefix: Path, whole: Path) -> Path | None:
    """The rest of `whole` after `prefix`, or None when `prefix` does not start it."""
    if prefix.src != whole.src or len(prefix) > len(whole):
        return None
    if whole.edges[: len(prefix)] != prefix.edges:
        return None
    return whole.suffix(len(prefix))


def multiply_monomials(a: Monomial, b: Monomial) -> Monomial | None:
    """(p q*)(r s*) reduced by b* a = delta_{a,b} r(a); None stands for zero."""
    rest = _prefix_rest(a.ghost, b.real)
    if rest is not None:
        return Monomial(a.real.concat(rest), b.ghost)
    rest = _prefix_rest(b.real, a.ghost)
    if rest is not None:
        return Monomial(a.real, b.ghost.concat(rest))
    return None


class Element:
    """
    A finite linear combination of monomials over a fixed unweighted graph.
    Zero coefficients are never stored.
    """

    def __init__(self, graph: WeightedGraph, terms: Mapping[Monomial, object] | None = None, domain=None):
        if graph.is_weighted:
            raise UnsupportedGraphError("Element arithmetic needs a graph with all weights 1")
        self.graph = graph
        self.domain = domain or coefficient_domain()
        self.terms: dict[Monomial, object] = {
            m: c for m, c in (terms or {}).items() if not self.domain.is_zero(c)
        }

    # constructors

    @classmethod
    def zero(cls, graph: WeightedGraph) -> "Element":
        return cls(graph)

    @classmethod
    def from_monomial(cls, graph: WeightedGraph, m: Monomial, coefficient: int | Fraction = 1) -> "Element":
        domain = coefficient_domain()
        return cls(graph, {m: to_coefficient(domain, coefficient)}, domain)

    @classmethod
    def vertex(cls, graph: WeightedGraph, v: str) -> "Element":
        if not graph.has_vertex(v):
            raise InvalidInputError(f"Unknown vertex '{v}'")
        return cls.from_monomial(graph, Monomial.vertex(v))

    @classmethod
    def edge(cls, graph: WeightedGraph, name: str, ghost: bool = False) -> "Element":
        e = graph.edge(name)
        path = Path((e.src, e.dst), (e.name,))
        trivial = Path.trivial(e.dst)
        m = Monomial(trivial, path) if ghost else Monomial(path, trivial)
        return cls.from_monomial(graph, m)

    # arithmetic

    def _check_same(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise InvalidInputError(f"Cannot combine an element with {type(other).__name__}")
        if other.graph != self.graph:
            raise InvalidInputError("Elements belong to different graphs")

    def _new(self, terms: Mapping[Monomial, object]) -> "Element":
        return Element(self.graph, terms, self.domain)

    def __add__(self, other: "Element") -> "Element":
        self._check_same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, self.domain.zero) + c
        return self._new(out)

    def __neg__(self) -> "Element":
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, coefficient) -> "Element":
        if not isinstance(coefficient, (int, Fraction)):
            c = coefficient
        else:
            c = to_coefficient(self.domain, coefficient)
        return self._new({m: c * v for m, v in self.terms.items()})

    def __rmul__(self, coefficient: int | Fraction) -> "Element":
        return self.scale(coefficient)

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.graph == other.graph and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # inspection

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key)

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.sorted_terms()]

    def __repr__(self) -> str:
        from app.symbolic.expressions import format_element

        return f"Element({format_element(self)})"


def multiply(a: Element, b: Element) -> Element:
    """Bilinear product with every ghost/real junction reduced."""
    a._check_same(b)
    out: dict[Monomial, object] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = multiply_monomials(ma, mb)
            if m is not None:
                out[m] = out.get(m, a.domain.zero) + ca * cb
    return a._new(out)


def product(factors: Iterable[Element]) -> Element:
    it = iter(factors)
    result = next(it)
    for f in it:
        result = multiply(result, f)
    return result


def involute(a: Element) -> Element:
    """The involution p q* -> q p*, fixing coefficients."""
    return a._new({m.involute(): c for m, c in a.terms.items()})


def degree_of(a: Element) -> int | None:
    """The common degree of all terms, or None when a is not homogeneous. Zero has degree 0."""
    degrees = {m.degree for m in a.terms}
    if not degrees:
        return 0
    if len(degrees) > 1:
        logging.debug(f"Element has terms in degrees {sorted(degrees)}")
        return None
    return degrees.pop()
