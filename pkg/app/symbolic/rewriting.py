"""
Normal forms in Leavitt path algebras.

Every non-sink vertex u gets a designated out-edge d_u, the lexicographically
last one. The monomials p q* that do not end in a junction d_u d_u^* form a
basis, and the rewrite

    m d d* n*  ->  m n* - sum_{f != d, s(f) = s(d)} m f f* n*

turns any element into its coordinates in that basis. Each step either
shortens a monomial or produces one that is already reduced.
"""
import logging
from collections import defaultdict

from app.exceptions import UnsupportedGraphError
from app.graph.classify import classify
from app.graph.paths import paths_into
from app.models import Path, WeightedGraph
from app.symbolic.element import Element, Monomial


def designated_edges(graph: WeightedGraph) -> dict[str, str]:
    return {
        v: max(e.name for e in graph.out_edges(v))
        for v in graph.vertices
        if not graph.is_sink(v)
    }


def _extend(p: Path, graph: WeightedGraph, name: str) -> Path:
    e = graph.edge(name)
    return Path(p.stops + (e.dst,), p.edges + (e.name,))


def _reduce(m: Monomial, graph: WeightedGraph, designated: dict[str, str], domain, memo: dict) -> dict:
    if m in memo:
        return memo[m]
    result = {m: domain.one}
    if m.real.edges and m.ghost.edges and m.real.edges[-1] == m.ghost.edges[-1]:
        last = graph.edge(m.real.edges[-1])
        if designated.get(last.src) == last.name:
            mu = m.real.prefix(len(m.real) - 1)
            nu = m.ghost.prefix(len(m.ghost) - 1)
            result = dict(_reduce(Monomial(mu, nu), graph, designated, domain, memo))
            for f in graph.out_edges(last.src):
                if f.name == last.name:
                    continue
                key = Monomial(_extend(mu, graph, f.name), _extend(nu, graph, f.name))
                result[key] = result.get(key, domain.zero) - domain.one
    memo[m] = result
    return result


def normal_form(a: Element) -> Element:
    """
    The unique basis representative of a; a = 0 exactly when the result has
    no terms. Defined for polycephaly graphs.
    """
    graph_class = classify(a.graph)
    if not graph_class.is_polycephaly:
        raise UnsupportedGraphError(
            f"normal_form needs a polycephaly graph: {graph_class.reason}"
        )
    designated = designated_edges(a.graph)
    memo: dict = {}
    out: dict = {}
    for m, c in a.terms.items():
        for n, d in _reduce(m, a.graph, designated, a.domain, memo).items():
            out[n] = out.get(n, a.domain.zero) + c * d
    result = a._new(out)
    logging.debug(f"Normal form has {len(result.terms)} terms (input had {len(a.terms)}).")
    return result


def collapse(a: Element) -> Element:
    """
    Replaces every complete family sum_{s(e)=u} c m e e* n* by c m n*,
    repeatedly. Valid on every unweighted graph; it only ever shrinks the
    element, so it proves identities but never decides them.
    """
    graph = a.graph
    current = a
    while True:
        families: dict[tuple[Path, Path], dict[str, object]] = defaultdict(dict)
        for m, c in current.terms.items():
            if m.real.edges and m.ghost.edges and m.real.edges[-1] == m.ghost.edges[-1]:
                mu = m.real.prefix(len(m.real) - 1)
                nu = m.ghost.prefix(len(m.ghost) - 1)
                families[(mu, nu)][m.real.edges[-1]] = c

        out = dict(current.terms)
        touched: set[Monomial] = set()
        changed = False
        for (mu, nu), members in sorted(families.items(), key=lambda item: (item[0][0].sort_key, item[0][1].sort_key)):
            full = {e.name for e in graph.out_edges(mu.dst)}
            coefficients = set(members.values())
            if set(members) != full or len(coefficients) != 1:
                continue
            family = [Monomial(_extend(mu, graph, name), _extend(nu, graph, name)) for name in full]
            if touched.intersection(family):
                continue
            c = coefficients.pop()
            for m in family:
                del out[m]
            key = Monomial(mu, nu)
            out[key] = out.get(key, a.domain.zero) + c
            touched.add(key)
            changed = True

        current = a._new(out)
        if not changed:
            return current


def basis_monomials(graph: WeightedGraph) -> list[Monomial]:
    """The normal-form basis p q* of the algebra of an acyclic graph."""
    designated = designated_edges(graph)
    into = {v: paths_into(graph, v) for v in graph.vertices}
    basis = []
    for v, paths in into.items():
        for p in paths:
            for q in paths:
                if p.edges and q.edges and p.edges[-1] == q.edges[-1]:
                    if designated.get(graph.edge(p.edges[-1]).src) == p.edges[-1]:
                        continue
                basis.append(Monomial(p, q))
    return sorted(basis, key=lambda m: m.sort_key)
