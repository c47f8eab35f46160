import pytest

from csets.cells import representable, standard_cell
from graphs.graph import cycle, interval


@pytest.fixture
def square():
    return representable(2, 2)


@pytest.fixture
def square_boundary():
    return standard_cell("boundary", 2, 2)


@pytest.fixture
def small_graphs():
    return {"I0": interval(0), "I1": interval(1), "C3": cycle(3), "C4": cycle(4), "C5": cycle(5)}
