"""Smith normal form over the integers with unimodular transforms."""
import logging
from dataclasses import dataclass

import numpy as np
import sympy

from app.config import analysis_config
from app.exceptions import InvalidInputError


def exgcd(a: int, b: int) -> np.ndarray:
    """
    A 2x2 integer matrix E of determinant 1 with E @ [a, b] = [gcd(a, b), 0].
    When a divides b the top row is (1, 0) up to sign.
    """
    sa, sb = (-1 if a < 0 else 1), (-1 if b < 0 else 1)
    a, b = a * sa, b * sb
    # Euclid on the column [b, a] with the row operations recorded alongside
    m = np.array([[b, 0, 1], [a, 1, 0]], dtype=object)
    while m[1, 0] != 0:
        q = m[0, 0] // m[1, 0]
        m[0] -= q * m[1]
        m = m[::-1].copy()
    g = m[0, 0]
    e = m[:, 1:] * np.array([sa, sb], dtype=object)
    if g != 0:
        e[1] = [-sb * b // g, sa * a // g]
    else:
        e = np.eye(2, dtype=object)
    return e


@dataclass(frozen=True)
class SmithForm:
    """D = U @ M @ V with U, V unimodular and D diagonal."""

    U: np.ndarray
    D: np.ndarray
    V: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        return [int(self.D[i, i]) for i in range(min(self.D.shape))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _swap(D: np.ndarray, U: np.ndarray, V: np.ndarray, i: int, r: int, c: int) -> None:
    if r != i:
        D[[i, r]] = D[[r, i]]
        U[[i, r]] = U[[r, i]]
    if c != i:
        D[:, [i, c]] = D[:, [c, i]]
        V[:, [i, c]] = V[:, [c, i]]


def _clear_col(D: np.ndarray, U: np.ndarray, i: int) -> bool:
    if (D[i + 1:, i] == 0).all():
        return False
    for j in range(i + 1, D.shape[0]):
        if D[j, i] != 0:
            E = exgcd(D[i, i], D[j, i])
            D[[i, j]] = E @ D[[i, j]]
            U[[i, j]] = E @ U[[i, j]]
    return True


def _clear_row(D: np.ndarray, V: np.ndarray, i: int) -> bool:
    if (D[i, i + 1:] == 0).all():
        return False
    for j in range(i + 1, D.shape[1]):
        if D[i, j] != 0:
            E = exgcd(D[i, i], D[i, j]).T
            D[:, [i, j]] = D[:, [i, j]] @ E
            V[:, [i, j]] = V[:, [i, j]] @ E
    return True


def _diagonalize(D: np.ndarray, U: np.ndarray, V: np.ndarray, start: int) -> None:
    for i in range(start, min(D.shape)):
        rest = D[i:, i:]
        nonzero = np.argwhere(rest != 0)
        if len(nonzero) == 0:
            return
        # pivot on the entry of least absolute value
        r, c = min(nonzero.tolist(), key=lambda rc: (abs(rest[rc[0], rc[1]]), rc[0], rc[1]))
        _swap(D, U, V, i, i + r, i + c)
        _clear_col(D, U, i)
        while _clear_row(D, V, i) and _clear_col(D, U, i):
            pass


def _first_divisibility_failure(D: np.ndarray) -> tuple[int, int] | None:
    n = min(D.shape)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = D[i, i], D[j, j]
            if (a == 0 and b != 0) or (a != 0 and b % a != 0):
                return i, j
    return None


def _verify(M: np.ndarray, form: SmithForm) -> None:
    if not (form.U @ M @ form.V == form.D).all():
        raise AssertionError("Smith normal form check failed: U M V != D")
    for name, T in (("U", form.U), ("V", form.V)):
        det = sympy.Matrix(T.tolist()).det() if T.size else 1
        if det not in (1, -1):
            raise AssertionError(f"Smith normal form check failed: det {name} = {det}")
    off = form.D.copy()
    for i in range(min(off.shape)):
        off[i, i] = 0
    if (off != 0).any():
        raise AssertionError("Smith normal form check failed: D is not diagonal")
    diag = form.diagonal
    for a, b in zip(diag, diag[1:]):
        if a < 0 or (a == 0 and b != 0) or (a != 0 and b % a != 0):
            raise AssertionError(f"Smith normal form check failed: divisibility chain {diag}")


def smith_normal_form(M) -> SmithForm:
    """
    Computes D = U @ M @ V with exact integers. The diagonal is nonnegative
    and each entry divides the next.
    """
    M = np.array(M, dtype=object)
    if M.ndim != 2:
        raise InvalidInputError(f"Expected a 2-dimensional integer matrix, got shape {M.shape}")
    D = M.copy()
    U = np.eye(D.shape[0], dtype=object)
    V = np.eye(D.shape[1], dtype=object)

    _diagonalize(D, U, V, 0)
    while (failure := _first_divisibility_failure(D)) is not None:
        i, j = failure
        # adding column j to column i puts gcd(d_i, d_j) within reach of the pivot step
        D[:, i] += D[:, j]
        V[:, i] += V[:, j]
        _diagonalize(D, U, V, i)

    for i in range(min(D.shape)):
        if D[i, i] < 0:
            D[i] *= -1
            U[i] *= -1

    form = SmithForm(U, D, V)
    logging.debug(f"Smith normal form of a {M.shape[0]}x{M.shape[1]} matrix: {form.diagonal}")
    if analysis_config.VERIFY_SNF:
        _verify(M, form)
    return form
