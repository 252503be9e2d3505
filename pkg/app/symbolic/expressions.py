"""
Expression syntax for algebra elements.

    expression := ["-"] term (("+" | "-") term)*
    term       := [coefficient] factor+
    factor     := name ["*"]

Factors are juxtaposed, `e*` is the ghost of edge e, and a coefficient is an
integer or a fraction such as `3/2`. Example: `f g h* + 2 u`.
"""
import re
from fractions import Fraction

from app.exceptions import InvalidInputError
from app.models import WeightedGraph
from app.symbolic.element import Element, product

_NUMBER = re.compile(r"^\d+(/\d+)?$")
_FACTOR = re.compile(r"^([A-Za-z0-9_]+)(\*?)$")


def _factor(graph: WeightedGraph, token: str) -> Element:
    match = _FACTOR.match(token)
    if not match:
        raise InvalidInputError(f"Invalid factor '{token}'")
    name, star = match.groups()
    if graph.has_vertex(name):
        return Element.vertex(graph, name)
    if graph.has_edge(name):
        return Element.edge(graph, name, ghost=bool(star))
    raise InvalidInputError(f"'{name}' is neither a vertex nor an edge")


def _term(graph: WeightedGraph, tokens: list[str]) -> Element:
    head = tokens[0]
    if _NUMBER.match(head) and (len(tokens) > 1 or not graph.has_vertex(head)):
        try:
            coefficient = Fraction(head)
        except ZeroDivisionError:
            raise InvalidInputError(f"Invalid coefficient '{head}'") from None
        if len(tokens) == 1:
            if coefficient == 0:
                return Element.zero(graph)
            raise InvalidInputError(f"Term '{head}' needs a vertex or edge factor")
        return product(_factor(graph, t) for t in tokens[1:]).scale(coefficient)
    return product(_factor(graph, t) for t in tokens)


def parse_expression(graph: WeightedGraph, text: str) -> Element:
    tokens = re.sub(r"([+-])", r" \1 ", text).split()
    if not tokens:
        raise InvalidInputError("Empty expression")

    terms: list[tuple[int, list[str]]] = []
    sign = 1
    current: list[str] = []
    pending_operator = False
    for token in tokens:
        if token in ("+", "-"):
            if current:
                terms.append((sign, current))
                current, sign = [], 1
            elif pending_operator or terms or token == "+":
                raise InvalidInputError(f"Unexpected '{token}' in '{text}'")
            if token == "-":
                sign = -sign
            pending_operator = True
        else:
            current.append(token)
            pending_operator = False
    if not current:
        raise InvalidInputError(f"Expression '{text}' ends with an operator")
    terms.append((sign, current))

    total = Element.zero(graph)
    for sign, term_tokens in terms:
        term = _term(graph, term_tokens)
        total = total + term if sign > 0 else total - term
    return total


def format_element(a: Element) -> str:
    if a.is_zero:
        return "0"
    parts = []
    for i, (m, c) in enumerate(a.sorted_terms()):
        value = a.domain.to_sympy(c)
        negative = value < 0
        magnitude = -value if negative else value
        body = str(m) if magnitude == 1 else f"{magnitude} {m}"
        if i == 0:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"{'-' if negative else '+'} {body}")
    return " ".join(parts)
