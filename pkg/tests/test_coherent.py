import pytest

from coherent.counit import counit_functor
from coherent.ho_equivalence import ho_nerve_iso_check
from coherent.nerve import category_nerve, coherent_nerve, simplicial_ho, thin_groupoid_nerve
from coherent.rigid_simplex import RigidSimplexCategory, rigid_functor, rigid_simplex
from coherent.rigidification import confluence_check, rigidification, simplex_functor
from enriched.category import sk0, verify_axioms
from enriched.finite_category import cyclic_group, poset_category
from enriched.functors import verify_functor
from models.errors import DomainError, TruncationError
from products.simplicial import standard_simplex


def test_nerve_of_a_poset():
    N = category_nerve(poset_category(2), 2)
    assert N.counts() == [3, 6, 10]
    assert N.check_identities() == []


def test_nerve_of_a_group():
    assert category_nerve(cyclic_group(2), 2).counts() == [1, 2, 4]


def test_coherent_nerve_of_a_discrete_category():
    N = coherent_nerve(sk0(poset_category(1), 1), 2)
    assert N.counts() == [2, 3, 4]
    assert N.check_identities() == []


def test_coherent_nerve_dimension_is_capped():
    with pytest.raises(DomainError):
        coherent_nerve(sk0(poset_category(1), 3), 4)


@pytest.mark.parametrize("base", [poset_category(2), cyclic_group(3)])
def test_ho_of_the_nerve_matches_ho(base):
    assert ho_nerve_iso_check(sk0(base, 1)).verdict == "pass"


def test_simplicial_ho_of_the_thin_groupoid():
    H = simplicial_ho(thin_groupoid_nerve())
    assert len(H.objects) == 2
    assert H.size() == 4
    assert H.is_groupoid()


def test_simplicial_ho_needs_triangles():
    with pytest.raises(TruncationError):
        simplicial_ho(standard_simplex(1, 1))


def test_rigidified_simplex_long_edge_is_an_interval():
    R = rigidification(standard_simplex(2, 2), 2)
    assert R.hom((0,), (2,)).counts() == [2, 3, 6]


def test_rigidification_satisfies_the_axioms():
    assert verify_axioms(rigidification(standard_simplex(2, 2), 1)).verdict == "pass"


def test_reduction_is_confluent():
    assert confluence_check(standard_simplex(2, 2), 1).verdict == "pass"


def test_counit_is_a_functor():
    C = sk0(poset_category(1), 1)
    R = rigidification(coherent_nerve(C, 2), 1)
    assert verify_functor(counit_functor(C, R)).verdict == "pass"


def test_rigid_simplex_satisfies_the_axioms():
    assert verify_axioms(rigid_simplex(2, 2)).verdict == "pass"


class ForgetfulSimplex(RigidSimplexCategory):
    def compose(self, a, b, c, g, f):
        if a == b == c:
            return "*", 0
        return super().compose(a, b, c, g, f)


def test_rigid_simplex_with_a_broken_unit_is_rejected():
    with pytest.raises(DomainError, match="left unit"):
        ForgetfulSimplex(1, 1)


@pytest.mark.parametrize("theta, m, n", [((0, 2), 1, 2), ((0, 0, 1), 2, 1), ((0, 1, 3), 2, 3)])
def test_monotone_maps_give_functors(theta, m, n):
    F = rigid_functor(theta, rigid_simplex(m, 1), rigid_simplex(n, 1))
    assert verify_functor(F).verdict == "pass"


def test_non_monotone_map_is_rejected():
    with pytest.raises(DomainError):
        rigid_functor((1, 0), rigid_simplex(1, 1), rigid_simplex(1, 1))


def test_top_simplex_picks_a_functor():
    X = standard_simplex(2, 2)
    R = rigidification(X, 1)
    F = simplex_functor(R, (0, 1, 2), rigid_simplex(2, 1))
    assert verify_functor(F).verdict == "pass"
