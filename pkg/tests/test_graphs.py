import json

import pytest

from graphs.graph import (
    GraphMap, box_product, complete, cycle, find_graph_isomorphism, graph_from_name, graph_to_json, interval,
    load_graph,
)
from graphs.homotopy import (
    concatenate, graph_invariants, graph_maps, hom_graph, homotopy_classes, homotopy_from_path,
    is_homotopy_equivalence,
)
from graphs.nerve import graph_nerve, nerve_kan_check, tower_map
from models.errors import DomainError


def square_contraction():
    C4 = cycle(4)
    return [GraphMap(C4, C4, images) for images in ((0, 1, 2, 3), (0, 1, 1, 0), (0, 0, 0, 0))]


def test_box_product_of_intervals_is_the_four_cycle():
    assert find_graph_isomorphism(box_product(interval(1), interval(1)), cycle(4)) is not None


def test_builders_by_name():
    assert graph_from_name("C5") == cycle(5)
    assert find_graph_isomorphism(graph_from_name("K3"), cycle(3)) is not None
    with pytest.raises(DomainError):
        graph_from_name("P4")
    with pytest.raises(DomainError):
        cycle(2)


def test_graph_json_round_trip():
    payload = graph_to_json(cycle(4))
    loaded = load_graph(json.dumps(payload), "C4")
    assert len(loaded) == 4
    assert find_graph_isomorphism(loaded, cycle(4)) is not None


def test_graph_json_with_a_foreign_edge():
    with pytest.raises(DomainError):
        load_graph(json.dumps({"vertices": ["a"], "edges": [["a", "b"]]}))


def test_graph_maps_of_an_edge():
    assert len(graph_maps(interval(1), cycle(4))) == 12
    assert len(graph_maps(interval(0), complete(3))) == 3


def test_hom_graph_out_of_a_point():
    assert find_graph_isomorphism(hom_graph(interval(0), cycle(5)), cycle(5)) is not None


def test_homotopy_classes(small_graphs):
    assert len(homotopy_classes(small_graphs["C4"], small_graphs["I0"])) == 1
    assert len(homotopy_classes(small_graphs["I0"], small_graphs["C5"])) == 1
    assert len(homotopy_classes(small_graphs["C5"], small_graphs["C5"])) >= 2


def test_homotopy_from_a_path_of_maps():
    path = square_contraction()
    H = homotopy_from_path(path)
    assert H.is_valid()
    assert H((2, 0)) == 2
    assert H((2, 2)) == 0


def test_concatenated_homotopies_run_both_halves():
    identity, fold, constant = square_contraction()
    C4 = cycle(4)
    joined = concatenate(homotopy_from_path([identity, fold]), homotopy_from_path([fold, constant]), C4)
    assert joined.images == homotopy_from_path([identity, fold, constant]).images


def test_homotopy_steps_must_be_adjacent():
    identity, _, constant = square_contraction()
    with pytest.raises(DomainError):
        homotopy_from_path([identity, constant])


@pytest.mark.parametrize("n", [3, 4])
def test_short_cycles_are_contractible(n):
    X = cycle(n)
    collapse = GraphMap(X, interval(0), tuple(0 for _ in X.vertices))
    decision = is_homotopy_equivalence(collapse, 4)
    assert decision.is_yes
    assert decision.witness.images == (0,)


def test_five_cycle_is_not_contractible():
    X = cycle(5)
    collapse = GraphMap(X, interval(0), tuple(0 for _ in X.vertices))
    decision = is_homotopy_equivalence(collapse, 4)
    assert decision.is_no
    assert decision.certificate["source"]["H1"] == "H_1 = Z"
    assert decision.certificate["target"]["H1"] == "H_1 = 0"


def test_graph_invariants():
    assert graph_invariants(cycle(4)) == {"pi0": 1, "H1": "H_1 = 0"}
    assert graph_invariants(cycle(5)) == {"pi0": 1, "H1": "H_1 = Z"}


def test_nerve_counts_of_an_edge():
    assert graph_nerve(interval(1), 1, 2).counts() == [2, 4, 16]


def test_nerve_level_must_be_positive():
    with pytest.raises(DomainError):
        graph_nerve(interval(1), 0, 1)


def test_nerve_satisfies_the_cubical_identities():
    assert graph_nerve(cycle(4), 1, 2).check_identities() == []


@pytest.mark.parametrize("shape", ["l", "r"])
def test_tower_maps_are_natural(shape):
    X = interval(1)
    lower, upper = graph_nerve(X, 1, 2), graph_nerve(X, 2, 2)
    assert tower_map(lower, upper, 1, shape).is_natural()


def test_nerve_fills_one_dimensional_boxes():
    assert nerve_kan_check(cycle(4), 1, 2, 1).verdict == "pass"
