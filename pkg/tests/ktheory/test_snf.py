import numpy as np
import pytest

from app.exceptions import InvalidInputError
from app.ktheory.snf import exgcd, smith_normal_form


def _assert_smith(M, form):
    M = np.array(M, dtype=object)
    assert (form.U @ M @ form.V == form.D).all()
    diagonal = form.diagonal
    assert all(d >= 0 for d in diagonal)
    for a, b in zip(diagonal, diagonal[1:]):
        assert (a == 0 and b == 0) or (a != 0 and b % a == 0)


@pytest.mark.parametrize(
    "a, b",
    [(4, 6), (-4, 6), (4, -6), (0, 5), (5, 0), (0, 0), (7, 7), (1, 9), (-12, -18)],
)
def test_exgcd(a, b):
    E = exgcd(a, b)
    top, bottom = E @ np.array([a, b], dtype=object)
    assert bottom == 0
    assert abs(top) == np.gcd(a, b)
    assert E[0, 0] * E[1, 1] - E[0, 1] * E[1, 0] == 1


@pytest.mark.parametrize(
    "M, diagonal",
    [
        ([[1, 1], [1, 1]], [1, 0]),
        ([[5]], [5]),
        ([[-3]], [3]),
        ([[0, 0], [0, 0]], [0, 0]),
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
        ([[2, 0], [0, 3]], [1, 6]),
        ([[6, 4]], [2]),
        ([[6], [4]], [2]),
    ],
)
def test_known_forms(M, diagonal):
    form = smith_normal_form(M)
    assert form.diagonal == diagonal
    _assert_smith(M, form)


def test_random_matrices(rng):
    for _ in range(40):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        M = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        form = smith_normal_form(M)
        _assert_smith(M, form)
        assert form.rank == int(np.linalg.matrix_rank(np.array(M, dtype=float)))


def test_rejects_vectors():
    with pytest.raises(InvalidInputError, match="2-dimensional"):
        smith_normal_form([1, 2, 3])
