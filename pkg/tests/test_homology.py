import functools
import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from csets.cells import representable, standard_cell
from homology.chains import HomologyGroup, boundary_squares_vanish, homology_groups
from homology.smith import integer_matrix, invariant_factors, smith_normal_form
from models.errors import DomainError
from products.simplicial import standard_simplex


@pytest.mark.parametrize("rows, factors", [
    ([[2, 4], [6, 8]], [2, 4]),
    ([[2, 0], [0, 3]], [1, 6]),
    ([[0, 0], [0, 0]], []),
    ([[1, 2, 3]], [1]),
])
def test_invariant_factors(rows, factors):
    assert invariant_factors(integer_matrix(rows)) == factors


def exact_det(rows):
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(int(v)) for v in row] for row in rows]
    size, det = len(a), Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if a[r][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, size):
            ratio = a[r][c] / a[c][c]
            a[r] = [x - ratio * y for x, y in zip(a[r], a[c])]
    return int(det)


def minor_gcd(rows, k):
    m, n = len(rows), len(rows[0])
    values = (exact_det([[rows[i][j] for j in cols] for i in picked])
              for picked in itertools.combinations(range(m), k)
              for cols in itertools.combinations(range(n), k))
    return functools.reduce(math.gcd, values, 0)


@pytest.mark.parametrize("seed", range(100))
def test_smith_form_on_random_matrices(seed):
    rng = np.random.default_rng(seed)
    m, n = (int(v) for v in rng.integers(1, 9, size=2))
    rows = rng.integers(-5, 6, size=(m, n)).tolist()
    matrix = integer_matrix(rows)
    snf = smith_normal_form(matrix)
    assert np.array_equal(snf.left.dot(matrix).dot(snf.right), snf.diagonal)
    assert abs(exact_det(snf.left.tolist())) == 1
    assert abs(exact_det(snf.right.tolist())) == 1
    factors = snf.invariant_factors
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
    for k in range(1, min(m, n) + 1):
        expected = math.prod(factors[:k]) if k <= len(factors) else 0
        assert minor_gcd(rows, k) == expected


def test_homology_of_the_interval():
    groups = homology_groups(representable(1, 2), 1)
    assert [str(g) for g in groups] == ["H_0 = Z", "H_1 = 0"]


def test_homology_of_the_hollow_square():
    groups = homology_groups(standard_cell("boundary", 2, 2), 1)
    assert groups[0].betti == 1
    assert groups[1] == HomologyGroup(1, 1, ())


def test_homology_of_the_simplex():
    groups = homology_groups(standard_simplex(2, 3), 2)
    assert [(g.betti, g.torsion) for g in groups] == [(1, ()), (0, ()), (0, ())]


def test_boundary_squares_vanish():
    assert boundary_squares_vanish(standard_simplex(3, 3))
    assert boundary_squares_vanish(representable(2, 2))


def test_homology_needs_one_more_dimension():
    with pytest.raises(DomainError):
        homology_groups(representable(1, 1), 1)


def test_homology_group_rendering():
    assert str(HomologyGroup(1, 2, (2,))) == "H_1 = Z^2 ⊕ Z/2"
    assert str(HomologyGroup(0, 0, ())) == "H_0 = 0"
