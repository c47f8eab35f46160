import pytest

from csets.cells import representable, standard_cell
from enriched.finite_category import cyclic_group, discrete_category, poset_category
from enriched.graph_category import graph_cubical_category
from graphs.graph import Graph, GraphMap, cycle, interval
from graphs.nerve import graph_nerve
from harness.diagonal import diagonal_identity_check
from harness.resolution import (
    arrow_resolution, check_r1, check_resolution, condition_verdicts, constant_resolution, cotensor_resolution,
)
from harness.shadow import graph_localization_shadow
from models.errors import DomainError


def collapse(C, X):
    return C.vertex(GraphMap(X, interval(0), tuple(0 for _ in X.vertices)))


@pytest.fixture
def graph_category():
    return graph_cubical_category([interval(0), interval(1)], 1, 1)


@pytest.mark.parametrize("source, target", [("C4", "I0"), ("I0", "C5"), ("I1", "C5")])
def test_shadow_matches_homotopy_classes(small_graphs, source, target):
    report = graph_localization_shadow(small_graphs[source], small_graphs[target])
    assert report.verdict == "pass"


def test_shadow_with_two_classes():
    two_points = Graph((0, 1), frozenset(), "2pt")
    report = graph_localization_shadow(interval(0), two_points)
    assert report.verdict == "pass"
    assert report.results[0].detail["classes"] == 2


def test_shadow_needs_a_positive_level(small_graphs):
    with pytest.raises(DomainError):
        graph_localization_shadow(small_graphs["I0"], small_graphs["I0"], 0)


@pytest.mark.parametrize("X", [
    representable(1, 2),
    standard_cell("boundary", 2, 2),
    graph_nerve(interval(1), 1, 1),
])
def test_diagonal_recovers_the_cubical_set(X):
    assert diagonal_identity_check(X).verdict == "pass"


def test_constant_resolution(graph_category):
    report = check_resolution(constant_resolution(graph_category, interval(1), 1))
    assert condition_verdicts(report) == {"R1": "pass", "R2": "pass"}


def test_constant_resolution_preserves_a_contraction(graph_category):
    I1 = interval(1)
    weak = [(I1, interval(0), collapse(graph_category, I1))]
    report = check_resolution(constant_resolution(graph_category, I1, 1, weak))
    assert condition_verdicts(report)["R3"] == "pass"


def test_cotensor_tower_structure_maps_are_equivalences(graph_category):
    report = check_resolution(cotensor_resolution(graph_category, interval(1), 1))
    verdicts = condition_verdicts(report)
    assert verdicts["R1"] == "pass"
    assert verdicts["R2"] == "pass"
    assert "diagram" not in verdicts


def test_arrow_to_a_point(graph_category):
    I1 = interval(1)
    report = check_resolution(arrow_resolution(graph_category, I1, interval(0), collapse(graph_category, I1)))
    assert condition_verdicts(report)["R2"] == "pass"


def test_arrow_out_of_the_five_cycle_fails():
    C5, I0 = cycle(5), interval(0)
    C = graph_cubical_category([C5, I0], 1, 1)
    report = check_resolution(arrow_resolution(C, C5, I0, collapse(C, C5)), bound=4)
    assert condition_verdicts(report)["R2"] == "fail"


def test_index_with_a_terminal_object():
    verdict, detail = check_r1(poset_category(1))
    assert verdict == "pass"
    assert detail["terminal"] == ["1"]


def test_disconnected_index_fails():
    assert check_r1(discrete_category([0, 1])) == ("fail", {"components": 2})


def test_index_with_torsion_fails():
    assert check_r1(cyclic_group(2)) == ("fail", {"H1": "H_1 = Z/2"})


def test_point_into_the_five_cycle_is_not_a_resolution():
    C5, I0 = cycle(5), interval(0)
    C = graph_cubical_category([I0, C5], 1, 1)
    report = check_resolution(arrow_resolution(C, I0, C5, C.vertex(GraphMap(I0, C5, (0,)))), bound=4)
    assert condition_verdicts(report)["R2"] == "fail"
    failed = next(r for r in report.results if r.name == "R2 at 1")
    assert failed.detail["invariants"]["target"]["H1"] == "H_1 = Z"
