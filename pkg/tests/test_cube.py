import pytest

from cube.box_morphism import (
    NotInBox, compose, enumerate_box_morphisms, from_word, identity, normal_form, parse_vertex_map,
    product, search_word, vertices,
)
from cube.generators import connection, degeneracy, face, format_word, parse_word
from cube.identities import check_table_identities
from models.errors import DomainError


def table_map(text):
    table, src, dst = parse_vertex_map(text)
    return normal_form(dict(zip(vertices(src), table)), src, dst)


@pytest.mark.parametrize("m, n, expected", [(0, 1, 2), (1, 1, 3), (2, 1, 6), (0, 2, 4), (1, 2, 8)])
def test_enumerate_box_morphisms_counts(m, n, expected):
    assert len(enumerate_box_morphisms(m, n)) == expected


@pytest.mark.parametrize("text, word", [("max2", "g(1,0)"), ("min2", "g(1,1)"), ("proj2_1", "s(2)"), ("id2", "id")])
def test_normal_form_of_named_maps(text, word):
    f = table_map(text)
    assert not isinstance(f, NotInBox)
    assert str(f) == word


def test_swap_is_not_in_the_box():
    swap = {(0, 0): (0, 0), (0, 1): (1, 0), (1, 0): (0, 1), (1, 1): (1, 1)}
    assert isinstance(normal_form(swap, 2, 2), NotInBox)


def test_majority_is_not_in_the_box():
    majority = {v: (int(sum(v) >= 2),) for v in vertices(3)}
    assert isinstance(normal_form(majority, 3, 1), NotInBox)


def test_non_monotone_map_is_rejected():
    negation = {(0,): (1,), (1,): (0,)}
    with pytest.raises(DomainError):
        normal_form(negation, 1, 1)


def test_degeneracy_after_face_is_identity():
    f = from_word(parse_word("d(1,0)", 0), 0)
    g = from_word(parse_word("s(1)", 1), 1)
    assert str(compose(g, f)) == "id"
    assert compose(g, f) == identity(0)


def test_face_applies_on_points():
    assert face(2, 1, 1).apply((0,)) == (1, 0)
    assert degeneracy(2, 2).apply((1, 0)) == (1,)
    assert connection(2, 1, 0).apply((0, 1)) == (1,)
    assert connection(2, 1, 1).apply((0, 1)) == (0,)


def test_parse_word_rejects_out_of_range_index():
    with pytest.raises(DomainError):
        parse_word("d(3,0)", 0)


def test_every_enumerated_morphism_has_a_word_reproducing_it():
    for f in enumerate_box_morphisms(2, 2):
        assert from_word(f.word, f.src) == f


def test_structural_word_agrees_with_search():
    for f in enumerate_box_morphisms(2, 1):
        found = search_word(f.table, f.src, f.dst)
        assert found is not None
        assert from_word(found, f.src) == f


def test_product_of_identities():
    assert product(identity(1), identity(2)) == identity(3)


def test_format_word_round_trip_from_text():
    word = parse_word("d(1,1);g(1,0)", 2)
    assert format_word(word) == "d(1,1);g(1,0)"


def test_cubical_identities_hold_on_tables():
    assert check_table_identities(5).verdict == "pass"
