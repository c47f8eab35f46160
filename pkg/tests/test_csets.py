import json

import pytest

from csets.cells import representable, standard_cell
from csets.components import pi0
from csets.cubical_set import CubicalSet, discrete, empty, point
from csets.kan import kan_box_check
from csets.maps import enumerate_maps, find_isomorphism
from csets.serialization import cubical_set_to_json, load_cubical_set
from models.errors import DomainError, TruncationError

INTERVAL_JSON = {
    "max_dim": 1,
    "cubes": {"0": ["a", "b"], "1": ["e", "sa", "sb"]},
    "faces": {"d(1,0)": {"e": "a", "sa": "a", "sb": "b"}, "d(1,1)": {"e": "b", "sa": "a", "sb": "b"}},
    "degens": {"s(1)": {"a": "sa", "b": "sb"}},
    "conns": {},
}


def nondegenerate_counts(X):
    return [len(X.nondegenerate(k)) for k in range(X.max_dim + 1)]


def test_representable_counts():
    assert representable(1, 2).counts() == [2, 3, 6]


def test_square_nondegenerate_cubes(square):
    assert nondegenerate_counts(square) == [4, 4, 1]


def test_boundary_counts():
    assert standard_cell("boundary", 2, 1).counts() == [4, 8]
    assert nondegenerate_counts(standard_cell("boundary", 2, 2)) == [4, 4, 0]


def test_open_box_drops_one_face():
    box = standard_cell("open_box", 2, 2, 1, 0)
    assert nondegenerate_counts(box) == [4, 3, 0]


def test_open_box_rejects_bad_index():
    with pytest.raises(DomainError):
        standard_cell("open_box", 2, 2, 3, 0)


@pytest.mark.parametrize("X", [representable(2, 2), standard_cell("boundary", 2, 2), discrete("ab", 2), point(2)])
def test_cubical_identities_hold_on_actions(X):
    assert X.check_identities() == []


def test_eilenberg_zilber_decomposition():
    X = representable(1, 2)
    for x in X.cubes(2):
        z, e = X.ez_decomposition(x)
        assert not X.is_degenerate(z)
        assert X.act(z, e) == x


def test_face_outside_range_is_a_domain_error(square):
    x = square.cubes(1)[0]
    with pytest.raises(DomainError):
        square.face(x, 2, 0)


def test_degeneracy_at_the_top_needs_more_dimensions(square):
    with pytest.raises(TruncationError):
        square.degen(square.cubes(2)[0], 1)


def test_truncate():
    assert representable(1, 2).truncate(1).counts() == [2, 3]
    with pytest.raises(TruncationError):
        representable(1, 2).truncate(3)


def test_components():
    assert len(pi0(standard_cell("boundary", 2, 2))) == 1
    assert len(pi0(discrete(["a", "b"], 1))) == 2
    assert len(pi0(empty(1))) == 0


def test_maps_from_a_point_pick_a_vertex():
    assert len(enumerate_maps(representable(0, 1), representable(1, 1))) == 2


def test_isomorphism_between_equal_cells():
    assert find_isomorphism(representable(1, 2), representable(1, 2)) is not None
    assert find_isomorphism(representable(1, 1), standard_cell("boundary", 2, 1)) is None


def test_kan_check_on_cells():
    assert kan_box_check(standard_cell("boundary", 2, 2), 2).verdict == "fail"
    assert kan_box_check(representable(1, 1), 1).verdict == "pass"


def test_kan_check_beyond_truncation():
    with pytest.raises(DomainError):
        kan_box_check(representable(1, 1), 2)


def test_load_interval_from_json():
    X = load_cubical_set(json.dumps(INTERVAL_JSON), "I")
    assert X.counts() == [2, 3]
    assert X.face("e", 1, 1) == "b"
    assert X.nondegenerate(1) == ("e",)
    assert X.check_identities() == []


def test_json_of_the_interval_keeps_string_labels():
    X = load_cubical_set(json.dumps(INTERVAL_JSON))
    payload = cubical_set_to_json(X)
    assert payload["cubes"] == INTERVAL_JSON["cubes"]
    assert payload["faces"]["d(1,0)"] == INTERVAL_JSON["faces"]["d(1,0)"]


def test_incomplete_json_is_a_domain_error():
    broken = dict(INTERVAL_JSON, degens={})
    with pytest.raises(DomainError):
        load_cubical_set(json.dumps(broken))


def test_invalid_json_is_a_domain_error():
    with pytest.raises(DomainError):
        load_cubical_set("{not json")


def test_table_breaking_an_identity_is_rejected():
    # a.s(1) = e but e.d(1,1) = b, so s(1);d(1,1) is not the identity at a
    with pytest.raises(DomainError, match="cubical identities"):
        CubicalSet(1, {0: ["a", "b"], 1: ["e", "f"]},
                   faces={"e": ("a", "b"), "f": ("b", "b")},
                   degens={"a": ("e",), "b": ("f",)},
                   conns={"a": (), "b": ()})


def test_json_breaking_an_identity_is_rejected():
    crossed = dict(INTERVAL_JSON, degens={"s(1)": {"a": "sb", "b": "sb"}})
    with pytest.raises(DomainError, match="cubical identities"):
        load_cubical_set(json.dumps(crossed))
