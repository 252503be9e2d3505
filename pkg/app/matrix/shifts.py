"""
Shift vectors of graded matrix algebras over graded fields.

M_n(K[x^l, x^-l])(d_1, ..., d_n) is graded by deg(e_ij x^{kl}) = kl + d_i - d_j.
Two shift vectors give graded isomorphic algebras exactly when one arises
from the other by permuting entries, adding a common integer to all
entries, and adding multiples of l to single entries.
"""
from collections import Counter
from dataclasses import dataclass

import numpy as np

from app.exceptions import InvalidInputError


@dataclass(frozen=True)
class ShiftVector:
    """Integer shifts together with the grading modulus l of the base (l = 0: trivially graded)."""

    entries: tuple[int, ...]
    modulus: int = 0

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if not self.entries:
            raise InvalidInputError("Shift vector needs at least one entry")
        if self.modulus < 0:
            raise InvalidInputError(f"Modulus must be nonnegative, got {self.modulus}")

    def __len__(self) -> int:
        return len(self.entries)

    def residues(self) -> tuple[int, ...]:
        """Entries reduced mod l, or the entries themselves when l = 0."""
        if self.modulus == 0:
            return self.entries
        return tuple(x % self.modulus for x in self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class ZeroComponentShape:
    """
    Sizes r_1 >= r_2 >= ... of the matrix blocks of the degree-0 component,
    M_n(A)_0 = M_{r_1}(A_0) x ... x M_{r_k}(A_0).
    """

    multiplicities: tuple[int, ...]

    @property
    def is_simple(self) -> bool:
        return len(self.multiplicities) == 1

    @property
    def dimension(self) -> int:
        return sum(r * r for r in self.multiplicities)


def canonical_shift(s: ShiftVector) -> ShiftVector:
    """The unique representative of the equivalence class of s."""
    if s.modulus == 0:
        low = min(s.entries)
        return ShiftVector(tuple(sorted(x - low for x in s.entries)), 0)
    l = s.modulus
    residues = s.residues()
    best = min(tuple(sorted((r - sigma) % l for r in residues)) for sigma in range(l))
    return ShiftVector(best, l)


def shift_equiv(a: ShiftVector, b: ShiftVector) -> bool:
    if a.modulus != b.modulus:
        raise InvalidInputError(
            f"Cannot compare shift vectors with moduli {a.modulus} and {b.modulus}"
        )
    return len(a) == len(b) and canonical_shift(a) == canonical_shift(b)


def component_dim(s: ShiftVector, degree: int) -> int:
    """dim_K of the homogeneous component of the given degree."""
    deltas = np.array(s.entries, dtype=object)
    # entry (i, j) lives in degree d exactly when d + d_j - d_i lies in lZ
    diff = degree + deltas[np.newaxis, :] - deltas[:, np.newaxis]
    if s.modulus == 0:
        return int(np.count_nonzero(diff == 0))
    return int(np.count_nonzero(diff % s.modulus == 0))


def zero_component_decomp(s: ShiftVector) -> ZeroComponentShape:
    """
    Groups the indices by residue class. For l = 0 the classes are the
    exact shift values.
    """
    counts = Counter(s.residues())
    return ZeroComponentShape(tuple(sorted(counts.values(), reverse=True)))
