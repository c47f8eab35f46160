import pytest

from csets.cells import representable
from csets.maps import identity_map
from enriched.category import sk0, suspension, verify_axioms
from enriched.cotensor import (
    connection_homotopy_check, graph_cotensor, graph_cotensor_tower, unit_cotensor, verify_cotensor,
)
from enriched.finite_category import arrow_category, box_category, cyclic_group, opposite, poset_category
from enriched.functors import (
    CubicalNaturalTransformation, arrow_functor, ho_functor, identity_functor, postcomposition_endpoints_check,
    postcomposition_transformation, suspension_functor, transformation_as_functor, verify_functor,
    verify_natural_transformation,
)
from enriched.graph_category import graph_cubical_category
from enriched.homotopy import ho, is_homotopy_equivalence_enriched
from graphs.graph import GraphMap, cycle, interval
from models.errors import DomainError


@pytest.fixture
def graph_category():
    return graph_cubical_category([interval(0), interval(1)], 1, 1)


def collapse(C, X):
    return C.vertex(GraphMap(X, interval(0), tuple(0 for _ in X.vertices)))


def test_poset_category():
    P = poset_category(2)
    assert P.verify().verdict == "pass"
    assert P.size() == 6
    assert P.initial_objects() == [0]
    assert P.terminal_objects() == [2]
    assert opposite(P).initial_objects() == [2]


def test_box_category_up_to_the_interval():
    B = box_category(1)
    assert B.size() == 7
    assert B.verify().verdict == "pass"


def test_cyclic_group_is_a_groupoid():
    assert cyclic_group(3).is_groupoid()
    assert not arrow_category().is_groupoid()


def test_sk0_satisfies_the_axioms():
    C = sk0(poset_category(1), 2)
    assert verify_axioms(C).verdict == "pass"
    assert ho(C).size() == 3


def test_suspension_satisfies_the_axioms():
    assert verify_axioms(suspension(representable(1, 2))).verdict == "pass"


def test_suspension_of_the_identity_is_a_functor():
    X = representable(1, 2)
    S = suspension(X)
    assert verify_functor(suspension_functor(identity_map(X), S, S)).verdict == "pass"


def test_graph_category_satisfies_the_axioms(graph_category):
    assert verify_axioms(graph_category).verdict == "pass"
    assert graph_category.hom(interval(1), interval(0)).counts() == [1, 1]


def test_graph_category_level_must_be_positive():
    with pytest.raises(DomainError):
        graph_cubical_category([interval(0)], 0, 1)


def test_arrow_functor_into_graphs(graph_category):
    I0, I1 = interval(0), interval(1)
    F = arrow_functor(graph_category, I1, I0, collapse(graph_category, I1))
    assert verify_functor(F).verdict == "pass"


def test_postcomposition_with_a_one_cube(graph_category):
    I0, I1 = interval(0), interval(1)
    identity = graph_category.identity(I1)
    constant = graph_category.vertex(GraphMap(I1, I1, (0, 0)))
    H = graph_category.one_cube_between(I1, I1, identity, constant)
    assert H is not None
    assert postcomposition_endpoints_check(graph_category, I0, I1, I1, H).verdict == "pass"


def test_homotopy_category_of_graphs():
    C = graph_cubical_category([cycle(4), interval(0)], 1, 1)
    assert ho(C).size() == 4


def test_four_cycle_is_equivalent_to_a_point():
    C4, I0 = cycle(4), interval(0)
    C = graph_cubical_category([C4, I0], 1, 1)
    decision = is_homotopy_equivalence_enriched(C, C4, I0, collapse(C, C4), 4)
    assert decision.is_yes


def test_five_cycle_is_not_equivalent_to_a_point():
    C5, I0 = cycle(5), interval(0)
    C = graph_cubical_category([C5, I0], 1, 1)
    assert is_homotopy_equivalence_enriched(C, C5, I0, collapse(C, C5), 4).is_no


def test_graph_cotensor_by_the_interval(graph_category):
    w = graph_cotensor(graph_category, interval(1), 1)
    assert verify_cotensor(w, [interval(0)]).verdict == "pass"


def test_cotensor_report_covers_tower_functoriality(graph_category):
    tower = graph_cotensor_tower(graph_category, interval(1), 1)
    report = verify_cotensor(tower[-1], [interval(0)], tower)
    names = [r.name for r in report.results]
    assert names == ["cotensor", "tower functoriality"]
    assert report.verdict == "pass"


def test_cotensor_tower_must_end_at_the_witness(graph_category):
    tower = graph_cotensor_tower(graph_category, interval(1), 1)
    with pytest.raises(DomainError):
        verify_cotensor(tower[0], [interval(0)], tower)


def test_connection_homotopy_on_the_tower(graph_category):
    tower = graph_cotensor_tower(graph_category, interval(1), 1)
    assert connection_homotopy_check(tower).verdict == "pass"


def test_unit_cotensor(graph_category):
    assert verify_cotensor(unit_cotensor(graph_category, interval(1)), [interval(0)]).verdict == "pass"


def test_identity_functor(graph_category):
    assert verify_functor(identity_functor(graph_category)).verdict == "pass"


def test_ho_of_an_arrow_functor(graph_category):
    I1 = interval(1)
    F = arrow_functor(graph_category, I1, interval(0), collapse(graph_category, I1))
    assert ho_functor(F).verify().verdict == "pass"


def test_postcomposition_is_a_natural_transformation(graph_category):
    I1 = interval(1)
    F = arrow_functor(graph_category, I1, I1, graph_category.identity(I1))
    alpha = postcomposition_transformation(F, interval(0), collapse(graph_category, I1))
    assert verify_natural_transformation(alpha).verdict == "pass"
    assert verify_functor(transformation_as_functor(alpha)).verdict == "pass"


def test_naturality_report_covers_the_arrow_product_functor(graph_category):
    I1 = interval(1)
    F = arrow_functor(graph_category, I1, I1, graph_category.identity(I1))
    alpha = postcomposition_transformation(F, interval(0), collapse(graph_category, I1))
    report = verify_natural_transformation(alpha)
    names = [r.name for r in report.results]
    assert "naturality" in names
    assert "C x [1] functor" in names
    assert all(r.verdict == "pass" for r in report.results)


def test_transformation_needs_matching_functors(graph_category):
    I1 = interval(1)
    F = arrow_functor(graph_category, I1, I1, graph_category.identity(I1))
    G = identity_functor(graph_category)
    with pytest.raises(DomainError):
        verify_natural_transformation(CubicalNaturalTransformation(F, G, {}))
