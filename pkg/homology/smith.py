"""
Smith normal form over the integers.

Exact arithmetic on numpy object arrays; pivots are chosen by minimal
absolute value and non-divisible entries are folded back into the pivot row
until the diagonal forms a divisibility chain.
"""

import logging
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)


class SmithForm(NamedTuple):
    """diagonal = left @ matrix @ right with left, right unimodular."""
    diagonal: np.ndarray
    left: np.ndarray
    right: np.ndarray

    @property
    def invariant_factors(self) -> List[int]:
        size = min(self.diagonal.shape) if self.diagonal.size else 0
        return [int(self.diagonal[i, i]) for i in range(size) if self.diagonal[i, i] != 0]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def integer_matrix(rows: Sequence[Sequence[int]], shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
    """An exact integer matrix (dtype=object so entries never overflow)."""
    if shape is not None and not len(rows):
        return np.zeros(shape, dtype=object)
    matrix = np.array([[int(v) for v in row] for row in rows], dtype=object)
    if matrix.ndim != 2:
        matrix = matrix.reshape((len(rows), -1))
    return matrix


def _identity(n: int) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    return eye


def _min_abs_nonzero(A: np.ndarray, s: int) -> Optional[Tuple[int, int]]:
    rows, cols = np.nonzero(A[s:, s:])
    if not len(rows):
        return None
    best = min(zip(rows, cols), key=lambda rc: abs(A[s + rc[0], s + rc[1]]))
    return s + int(best[0]), s + int(best[1])


def _swap_rows(A, left, a, b):
    if a != b:
        A[[a, b]] = A[[b, a]]
        left[[a, b]] = left[[b, a]]


def _swap_columns(A, right, a, b):
    if a != b:
        A[:, [a, b]] = A[:, [b, a]]
        right[:, [a, b]] = right[:, [b, a]]


def smith_normal_form(matrix) -> SmithForm:
    A = np.array(matrix, dtype=object).copy()
    if A.ndim != 2:
        A = A.reshape((0, 0))
    m, n = A.shape
    left, right = _identity(m), _identity(n)
    s = 0
    while s < min(m, n):
        pivot = _min_abs_nonzero(A, s)
        if pivot is None:
            break
        _swap_rows(A, left, s, pivot[0])
        _swap_columns(A, right, s, pivot[1])
        while True:
            for i in np.nonzero(A[s + 1:, s])[0]:
                i = s + 1 + int(i)
                q = A[i, s] // A[s, s]
                A[i] -= q * A[s]
                left[i] -= q * left[s]
            for j in np.nonzero(A[s, s + 1:])[0]:
                j = s + 1 + int(j)
                q = A[s, j] // A[s, s]
                A[:, j] -= q * A[:, s]
                right[:, j] -= q * right[:, s]
            column_rest = np.nonzero(A[s + 1:, s])[0]
            row_rest = np.nonzero(A[s, s + 1:])[0]
            if len(column_rest) or len(row_rest):
                # a remainder is smaller than the pivot: move it to (s, s)
                candidates = [(s + 1 + int(i), s) for i in column_rest] + [(s, s + 1 + int(j)) for j in row_rest]
                i, j = min(candidates, key=lambda rc: abs(A[rc]))
                _swap_rows(A, left, s, i)
                _swap_columns(A, right, s, j)
                continue
            offender = None
            for i, j in zip(*np.nonzero(A[s + 1:, s + 1:])):
                if A[s + 1 + i, s + 1 + j] % A[s, s] != 0:
                    offender = s + 1 + int(i)
                    break
            if offender is not None:
                A[s] += A[offender]
                left[s] += left[offender]
                continue
            if A[s, s] < 0:
                A[s] = -A[s]
                left[s] = -left[s]
            break
        s += 1
    logger.debug("smith normal form of a %dx%d matrix: rank %d", m, n, s)
    return SmithForm(A, left, right)


def invariant_factors(matrix) -> List[int]:
    return smith_normal_form(matrix).invariant_factors
