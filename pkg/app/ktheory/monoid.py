"""
The monoid presented on the vertices by n_v v = sum_{s(a) = v} r(a), with
bounded searches for its word problem.

Elements are coefficient vectors indexed by the generators. A move replaces
one side of a relation by the other inside a vector.
"""
import enum
import itertools
import logging
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np
from networkx.utils import UnionFind

from app.config import analysis_config
from app.exceptions import InvalidInputError
from app.ktheory.k0 import AbelianGroupDescriptor, Cokernel, cokernel
from app.models import Verdict, WeightedGraph

Vector = tuple[int, ...]


@dataclass(frozen=True)
class MonoidRelation:
    vertex: str
    lhs: Vector
    """
    n_v times the generator v.
    """
    rhs: Vector
    """
    The ranges of the structured edges leaving v, each counted once.
    """


@dataclass(frozen=True)
class MonoidPresentation:
    generators: tuple[str, ...]
    relations: tuple[MonoidRelation, ...] = field(default_factory=tuple)

    def relation_matrix(self) -> np.ndarray:
        """One column lhs - rhs per relation."""
        columns = [np.array(r.lhs, dtype=object) - np.array(r.rhs, dtype=object) for r in self.relations]
        if not columns:
            return np.zeros((len(self.generators), 0), dtype=object)
        return np.stack(columns, axis=1)

    @cached_property
    def completion(self) -> Cokernel:
        return cokernel(self.relation_matrix())

    def k0_image(self, a: Vector) -> tuple[int, ...]:
        return self.completion.image(a)

    def format(self, a: Vector) -> str:
        terms = [g if c == 1 else f"{c}{g}" for g, c in zip(self.generators, a) if c]
        return " + ".join(terms) if terms else "0"

    def __str__(self) -> str:
        rels = ", ".join(f"{self.format(r.lhs)} = {self.format(r.rhs)}" for r in self.relations)
        return f"<{', '.join(self.generators)} | {rels}>"


def monoid_presentation(g: WeightedGraph) -> MonoidPresentation:
    index = {v: i for i, v in enumerate(g.vertices)}
    relations = []
    for v in g.vertices:
        if g.is_sink(v):
            continue
        lhs = [0] * len(g.vertices)
        lhs[index[v]] = g.max_out_weight(v)
        rhs = [0] * len(g.vertices)
        for e in g.out_edges(v):
            rhs[index[e.dst]] += 1
        relations.append(MonoidRelation(v, tuple(lhs), tuple(rhs)))
    return MonoidPresentation(tuple(g.vertices), tuple(relations))


def group_completion(p: MonoidPresentation) -> AbelianGroupDescriptor:
    """K_0 recomputed from the relation matrix of a presentation."""
    return p.completion.group


_TERM = re.compile(r"^(\d*)\s*([A-Za-z0-9_]+)$")


def parse_monoid_element(p: MonoidPresentation, text: str) -> Vector:
    """Parses `2u + t` into a coefficient vector; `0` is the identity."""
    vector = [0] * len(p.generators)
    index = {g: i for i, g in enumerate(p.generators)}
    if text.strip() == "0":
        return tuple(vector)
    for raw in text.split("+"):
        term = raw.strip()
        if term.startswith("-"):
            raise InvalidInputError(f"Negative coefficient in '{text}'")
        if term in index:
            vector[index[term]] += 1
            continue
        match = _TERM.match(term)
        if not match or match.group(2) not in index:
            raise InvalidInputError(f"Invalid monoid term '{term}' in '{text}'")
        coefficient, name = match.groups()
        vector[index[name]] += int(coefficient) if coefficient else 1
    return tuple(vector)


def check_vector(p: MonoidPresentation, a: Sequence[int]) -> Vector:
    if len(a) != len(p.generators):
        raise InvalidInputError(f"Expected {len(p.generators)} coefficients, got {len(a)}")
    if any(c < 0 for c in a):
        raise InvalidInputError(f"Monoid elements have nonnegative coefficients, got {tuple(a)}")
    return tuple(int(c) for c in a)


def moves(p: MonoidPresentation, a: Vector) -> Iterator[Vector]:
    """Every vector reachable from a by applying one relation in either direction."""
    for r in p.relations:
        for old, new in ((r.lhs, r.rhs), (r.rhs, r.lhs)):
            if all(x >= y for x, y in zip(a, old)):
                yield tuple(x - y + z for x, y, z in zip(a, old, new))


class CertificateKind(enum.Enum):
    GROUP_COMPLETION = "group-completion"
    CLOSED_CLASS = "closed-class"


@dataclass(frozen=True)
class DistinctCertificate:
    kind: CertificateKind
    detail: str


@dataclass(frozen=True)
class EqualityResult:
    """
    TRUE with a rewrite chain from a to b, FALSE with a certificate, or
    UNKNOWN when the bounded search ran out.
    """

    verdict: Verdict
    chain: tuple[Vector, ...] = ()
    certificate: DistinctCertificate | None = None


def _chain(parents_a: dict, parents_b: dict, meet: Vector) -> tuple[Vector, ...]:
    left = []
    node = meet
    while node is not None:
        left.append(node)
        node = parents_a[node]
    right = []
    node = parents_b[meet]
    while node is not None:
        right.append(node)
        node = parents_b[node]
    return tuple(reversed(left)) + tuple(right)


def monoid_equal(p: MonoidPresentation, a: Sequence[int], b: Sequence[int], bound: int | None = None) -> EqualityResult:
    """
    Semi-decides a = b in the monoid. Searches from both sides over vectors
    whose coefficient sum stays within the bound.
    """
    a, b = check_vector(p, a), check_vector(p, b)
    bound = max(bound or analysis_config.MONOID_SEARCH_BOUND, sum(a), sum(b))
    if a == b:
        return EqualityResult(Verdict.TRUE, (a,))

    image_a, image_b = p.k0_image(a), p.k0_image(b)
    if image_a != image_b:
        return EqualityResult(
            Verdict.FALSE,
            certificate=DistinctCertificate(
                CertificateKind.GROUP_COMPLETION,
                f"K0 classes differ: {image_a} vs {image_b} in {p.completion.group}",
            ),
        )

    parents = ({a: None}, {b: None})
    frontiers = (deque([a]), deque([b]))
    pruned = [False, False]
    # Keeps expanding the remaining side once the other class is exhausted.
    while frontiers[0] or frontiers[1]:
        if frontiers[0] and frontiers[1]:
            side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        else:
            side = 0 if frontiers[0] else 1
        frontier, seen, other = frontiers[side], parents[side], parents[1 - side]
        for _ in range(len(frontier)):
            node = frontier.popleft()
            for nxt in moves(p, node):
                if sum(nxt) > bound:
                    pruned[side] = True
                    continue
                if nxt in seen:
                    continue
                seen[nxt] = node
                if nxt in other:
                    chain = _chain(parents[0], parents[1], nxt)
                    logging.info(f"Monoid elements are equal via {len(chain) - 1} rewrites.")
                    return EqualityResult(Verdict.TRUE, chain)
                frontier.append(nxt)
        logging.debug(f"Search layer done: {len(parents[0])} and {len(parents[1])} elements visited.")

    for side, start in ((0, a), (1, b)):
        if not frontiers[side] and not pruned[side]:
            other = b if side == 0 else a
            return EqualityResult(
                Verdict.FALSE,
                certificate=DistinctCertificate(
                    CertificateKind.CLOSED_CLASS,
                    f"the class of {p.format(start)} has {len(parents[side])} elements, "
                    f"none equal to {p.format(other)}",
                ),
            )
    logging.warning(f"Monoid equality undetermined within bound {bound}.")
    return EqualityResult(Verdict.UNKNOWN)


def class_key(a: Vector) -> tuple:
    """Degree-lexicographic order in which earlier generators rank higher."""
    return (sum(a), tuple(-c for c in a))


class ClassSpace:
    """
    All vectors with coefficient sum at most `bound`, grouped into pieces of
    vectors proven equal by moves inside the bound. A piece is closed when no
    move leaves the bound, so it is a whole equivalence class.
    """

    def __init__(self, p: MonoidPresentation, bound: int):
        self.presentation = p
        self.bound = bound
        n = len(p.generators)
        self.vectors = sorted(
            (v for total in range(bound + 1) for v in _compositions(total, n)),
            key=class_key,
        )
        union = UnionFind(self.vectors)
        escaping = set()
        for v in self.vectors:
            for w in moves(p, v):
                if sum(w) > bound:
                    escaping.add(v)
                else:
                    union.union(v, w)

        self._piece_of: dict[Vector, int] = {}
        self.members: list[list[Vector]] = []
        roots: dict[Vector, int] = {}
        for v in self.vectors:
            root = union[v]
            if root not in roots:
                roots[root] = len(self.members)
                self.members.append([])
            self._piece_of[v] = roots[root]
            self.members[roots[root]].append(v)
        self.closed = [not any(v in escaping for v in group) for group in self.members]
        self._images = [p.k0_image(group[0]) for group in self.members]
        self._splits: dict[int, set[tuple[int, int]]] = {}
        logging.info(f"Enumerated {len(self.vectors)} monoid elements in {len(self.members)} pieces.")

    @property
    def zero(self) -> Vector:
        return (0,) * len(self.presentation.generators)

    def piece(self, v: Vector) -> int | None:
        return self._piece_of.get(v)

    def representative(self, piece: int) -> Vector:
        return self.members[piece][0]

    def provably_distinct(self, x: int, y: int) -> bool:
        if x == y:
            return False
        return self.closed[x] or self.closed[y] or self._images[x] != self._images[y]

    def splits(self, piece: int) -> set[tuple[int, int]]:
        """Pieces (z, z') with z + z' in the given piece. Complete when the piece is closed."""
        if piece in self._splits:
            return self._splits[piece]
        found = set()
        for w in self.members[piece]:
            for z in itertools.product(*(range(c + 1) for c in w)):
                rest = tuple(c - d for c, d in zip(w, z))
                found.add((self._piece_of[z], self._piece_of[rest]))
        self._splits[piece] = found
        return found

    def add(self, x: int, y: int) -> int | None:
        total = tuple(a + b for a, b in zip(self.representative(x), self.representative(y)))
        return self.piece(total)

    def is_below_multiple(self, z: int, x: int) -> bool:
        """Whether z + c = n x for some c and n >= 1, as seen inside the bound."""
        base = self.representative(x)
        n = 1
        while sum(base) * n <= self.bound and sum(base) > 0:
            target = self.piece(tuple(c * n for c in base))
            for w in self.members[target]:
                if any(all(a >= b for a, b in zip(w, zv)) for zv in self.members[z]):
                    return True
            n += 1
        return False


def _compositions(total: int, parts: int) -> Iterator[Vector]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
