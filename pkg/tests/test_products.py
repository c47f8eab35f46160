import math

import pytest

from csets.cells import representable
from csets.cubical_set import point
from csets.maps import identity_map
from products.bicubical import diagonal, external_product, levelwise_discrete
from products.internal_hom import InternalHom, curry, internal_hom, uncurry
from products.simplicial import (
    simplicial_cube, simplicial_from_json, simplicial_product, simplicial_to_json, standard_simplex,
)
from products.tensor import associator, left_unitor, representable_iso, right_unitor, tensor, tensor_maps
from products.triangulation import (
    BoundedU, alpha, comparison_map, representable_triangulation_iso, triangulate, triangulate_map,
)


def test_tensor_of_intervals_is_the_square():
    interval = representable(1, 2)
    product = tensor(interval, interval)
    square = representable(2, 2)
    assert product.counts() == square.counts()
    iso = representable_iso(product, square)
    assert iso.is_natural()
    assert iso.is_bijective()


def test_tensor_satisfies_the_cubical_identities():
    assert tensor(representable(1, 2), representable(1, 2)).check_identities() == []


def test_internal_hom_out_of_a_point():
    assert internal_hom(point(1), representable(1, 1), 1).counts() == [2, 3]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_triangulated_cube_has_factorial_top_simplices(n):
    T = triangulate(representable(n, n))
    assert len(T.nondegenerate(n)) == math.factorial(n)


def test_triangulated_square_matches_the_simplicial_square():
    assert triangulate(representable(2, 2)).counts() == simplicial_cube(2, 2).counts()


def test_triangulation_satisfies_the_simplicial_identities():
    assert triangulate(representable(2, 2)).check_identities() == []


def test_standard_simplex():
    simplex = standard_simplex(2, 2)
    assert simplex.counts() == [3, 6, 10]
    assert len(simplex.nondegenerate(2)) == 1
    assert simplex.check_identities() == []


def test_simplicial_product_of_intervals():
    edge = standard_simplex(1, 2)
    assert simplicial_product(edge, edge).counts() == simplicial_cube(2, 2).counts() == [4, 9, 16]


def test_diagonal_of_levelwise_discrete_recovers_the_counts():
    X = representable(1, 2)
    assert diagonal(levelwise_discrete(X)).counts() == X.counts()


def test_external_product_commutes():
    interval = representable(1, 1)
    assert external_product(interval, interval).commutation_violations() == []


def test_tensor_of_identity_maps_is_the_identity():
    interval = representable(1, 2)
    product = tensor(interval, interval)
    F = identity_map(interval)
    doubled = tensor_maps(F, F, product, product)
    assert doubled.is_natural()
    assert doubled.mapping == identity_map(product).mapping


def test_unitors_are_isomorphisms():
    X, pt = representable(1, 1), point(1)
    right = right_unitor(X, tensor(X, pt))
    left = left_unitor(tensor(pt, X), X)
    for unitor in (right, left):
        assert unitor.is_natural()
        assert unitor.is_bijective()


def test_currying_round_trip():
    Z, X, Y = representable(1, 1), point(1), representable(1, 1)
    hom = InternalHom(X, Y, 1)
    ZX = tensor(Z, X)
    phi = right_unitor(Z, ZX)
    curried = curry(hom, Z, phi)
    assert curried.is_natural()
    assert uncurry(hom, ZX, Z, curried).mapping == phi.mapping


def test_comparison_map_on_the_square_is_an_isomorphism():
    interval = representable(1, 2)
    T = triangulate(interval)
    comparison = comparison_map(interval, interval, triangulate(tensor(interval, interval)), T, T)
    assert comparison.is_natural()
    assert comparison.is_bijective()


def test_monoidal_structure_map_is_natural():
    edge = standard_simplex(1, 1)
    UA = BoundedU(edge, 1)
    UAB = BoundedU(simplicial_product(edge, edge), 1)
    assert alpha(UA, UA, UAB, tensor(UA.cset, UA.cset)).is_natural()


def test_tensor_is_associative():
    I = representable(1, 2)
    IJ, JK = tensor(I, I), tensor(I, I)
    iso = associator(I, I, I, tensor(IJ, I), JK, tensor(I, JK))
    assert iso.is_natural()
    assert iso.is_bijective()


def test_triangulated_cube_is_the_simplicial_cube():
    iso = representable_triangulation_iso(triangulate(representable(2, 2)), 2)
    assert iso.is_natural()
    assert iso.is_bijective()


def test_triangulating_the_identity():
    T = triangulate(representable(2, 2))
    T_id = triangulate_map(identity_map(representable(2, 2)), T, T)
    assert T_id.mapping == identity_map(T).mapping


def test_simplicial_json_reload():
    loaded = simplicial_from_json(simplicial_to_json(standard_simplex(2, 2)))
    assert loaded.counts() == [3, 6, 10]
    assert loaded.check_identities() == []
