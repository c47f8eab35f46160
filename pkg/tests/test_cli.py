import json

import pytest

from main import run
from models.constants import EXIT_FAIL, EXIT_OK, EXIT_USAGE


def output(capsys):
    return capsys.readouterr().out.strip()


def test_normal_form_of_max(capsys):
    assert run(["cube", "normal-form", "--map", "max2"]) == EXIT_OK
    assert output(capsys) == "g(1,0)"


def test_swap_is_not_in_the_cube_category(capsys):
    assert run(["cube", "normal-form", "--map", "00:00,01:10,10:01,11:11"]) == EXIT_FAIL
    assert output(capsys).startswith("not in the cube category")


def test_compose_degeneracy_after_face(capsys):
    assert run(["cube", "compose", "--g", "s(1)", "--f", "d(1,0)", "--src", "0"]) == EXIT_OK
    assert output(capsys) == "id"


def test_components_of_the_hollow_square(capsys):
    assert run(["cset", "pi0", "--x", "boundary2", "--max-dim", "2"]) == EXIT_OK
    assert output(capsys) == "components: 1"


def test_homotopy_classes_into_a_point(capsys):
    assert run(["graph", "htpy-classes", "--x", "C4", "--y", "I0"]) == EXIT_OK
    assert output(capsys) == "classes: 1"


def test_box_product_compared_with_the_square(capsys):
    assert run(["graph", "box", "--x", "I1", "--y", "I1", "--compare", "C4"]) == EXIT_OK
    assert output(capsys).endswith("isomorphic to C4: yes")


@pytest.mark.parametrize("graph, expected", [("C5", "H_1 = Z"), ("C4", "H_1 = 0")])
def test_first_homology_of_the_nerve(capsys, graph, expected):
    assert run(["nerve", "h1", "--graph", graph]) == EXIT_OK
    assert output(capsys) == expected


def test_json_output(capsys):
    assert run(["graph", "htpy-classes", "--x", "I0", "--y", "C5", "--json"]) == EXIT_OK
    payload = json.loads(output(capsys))
    assert payload == {"classes": 1, "sizes": [5]}


def test_unknown_graph_is_a_usage_error(capsys):
    assert run(["graph", "build", "--name", "P4"]) == EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_missing_verb_is_a_usage_error():
    assert run([]) == EXIT_USAGE


def test_shadow_of_a_contraction(capsys):
    assert run(["dmsl", "shadow", "--x", "C4", "--y", "I0"]) == EXIT_OK
    assert ": pass" in output(capsys).splitlines()[0]
