import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from app.ktheory.snf import SmithForm, smith_normal_form
from app.models import WeightedGraph


@dataclass(frozen=True)
class AbelianGroupDescriptor:
    """Z^free_rank x Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... and every d_i >= 2."""

    free_rank: int
    invariant_factors: tuple[int, ...] = field(default_factory=tuple)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " x ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Cokernel:
    """
    Z^rows / image(matrix), with the coordinates that identify each class.
    """

    group: AbelianGroupDescriptor
    form: SmithForm
    rows: int

    def image(self, vector: Sequence[int]) -> tuple[int, ...]:
        """
        Canonical coordinates of the class of `vector`: torsion coordinates
        reduced mod their invariant factor, free coordinates as integers.
        """
        y = self.form.U @ np.array(list(vector), dtype=object)
        diagonal = self.form.diagonal
        coordinates = []
        for i in range(self.rows):
            d = diagonal[i] if i < len(diagonal) else 0
            if d == 1:
                continue
            coordinates.append(int(y[i]) if d == 0 else int(y[i]) % d)
        return tuple(coordinates)


def cokernel(matrix) -> Cokernel:
    form = smith_normal_form(matrix)
    rows = form.D.shape[0]
    factors = tuple(d for d in form.diagonal if d > 1)
    group = AbelianGroupDescriptor(rows - form.rank, factors)
    return Cokernel(group, form, rows)


@dataclass(frozen=True)
class IntegerMatrixPair:
    """
    Adjacency matrix N of structured-edge counts and the weighted identity
    Iw = diag(n_v), both in the order non-sinks first, then sinks.
    """

    order: tuple[str, ...]
    N: np.ndarray
    Iw: np.ndarray
    nonsinks: int

    def transition(self) -> np.ndarray:
        """N^t - Iw with the sink columns removed."""
        return (self.N.T - self.Iw)[:, : self.nonsinks]


def build_matrices(g: WeightedGraph) -> IntegerMatrixPair:
    order = tuple(v for v in g.vertices if not g.is_sink(v)) + g.sinks
    index = {v: i for i, v in enumerate(order)}
    size = len(order)
    N = np.zeros((size, size), dtype=object)
    for e in g.sedges:
        N[index[e.src], index[e.dst]] += 1
    Iw = np.zeros((size, size), dtype=object)
    for v in order:
        Iw[index[v], index[v]] = g.max_out_weight(v)
    return IntegerMatrixPair(order, N, Iw, size - len(g.sinks))


def k0(g: WeightedGraph) -> AbelianGroupDescriptor:
    """K_0 as the cokernel of N^t - Iw from Z^(non-sinks) to Z^(vertices)."""
    group = cokernel(build_matrices(g).transition()).group
    logging.info(f"K0 computed: {group}")
    return group


def unit_class(g: WeightedGraph) -> tuple[int, ...]:
    """Coordinates of the class of the identity, the sum of all vertices."""
    pair = build_matrices(g)
    return cokernel(pair.transition()).image([1] * len(pair.order))
