"""
The cubical nerves N^G_m of a graph and the tower maps between them.

A k-cube of N^G_m X is a graph map I_m^{box k} -> X, stored as
(k, images) with images listed over the grid points in lexicographic order.
"""

import logging
from functools import lru_cache
from typing import Dict, Hashable, List, Literal, Optional, Tuple

from csets.cubical_set import CubicalSet
from csets.kan import find_filler, open_box_maps
from csets.maps import CubicalMap
from cube.generators import Generator
from graphs.graph import Graph, grid
from graphs.homotopy import iter_graph_maps
from models.errors import DomainError
from models.verdicts import Report
from utils.cell_budget import CellBudget, default_budget

logger = logging.getLogger(__name__)

NerveCube = Tuple[int, Tuple[Hashable, ...]]


@lru_cache(maxsize=None)
def _grid(m: int, k: int) -> Graph:
    return grid(m, k)


def grid_act(m: int, cube: NerveCube, gen: Generator) -> NerveCube:
    """Precompose a grid map with the grid action of a generator."""
    k, images = cube
    if gen.dst != k:
        raise DomainError(f"{gen.notation()} does not act on a {k}-cube")
    target = _grid(m, k).index
    points = _grid(m, gen.src).vertices
    return gen.src, tuple(images[target[gen.apply(p, m)]] for p in points)


def graph_nerve(X: Graph, m: int, max_dim: int, budget: Optional[CellBudget] = None) -> CubicalSet:
    if m < 1:
        raise DomainError(f"N^G_m needs m >= 1, got {m}")
    budget = budget or default_budget(f"N^G_{m} {X}")
    cubes: Dict[int, List[NerveCube]] = {}
    for k in range(max_dim + 1):
        maps = sorted(iter_graph_maps(_grid(m, k), X, budget), key=lambda f: tuple(X.index[w] for w in f.images))
        cubes[k] = [(k, f.images) for f in maps]
        logger.debug("N^G_%d %s: %d cubes in dimension %d", m, X, len(cubes[k]), k)
    nerve = CubicalSet.from_action(max_dim, cubes, lambda x, gen: grid_act(m, x, gen), f"N^G_{m}({X.name})")
    return nerve


def _reindex(m: int, k: int, shape: Literal["l", "r"]):
    """Index table of l^{box k} or r^{box k}: I_{m+1}^k -> I_m^k."""
    def coordinate(j: int) -> int:
        if shape == "l":
            return max(j - 1, 0)
        return min(j, m)
    target = _grid(m, k).index
    return [target[tuple(coordinate(j) for j in p)] for p in _grid(m + 1, k).vertices]


def tower_cube(cube: NerveCube, m: int, shape: Literal["l", "r"]) -> NerveCube:
    k, images = cube
    return k, tuple(images[i] for i in _reindex(m, k, shape))


def tower_map(lower: CubicalSet, upper: CubicalSet, m: int, shape: Literal["l", "r"]) -> CubicalMap:
    """l* or r*: N^G_m X -> N^G_{m+1} X."""
    mapping = {x: tower_cube(x, m, shape) for x in lower.all_cubes()}
    return CubicalMap(lower, upper, mapping, f"{shape}*")


def tower_shape(m: int) -> Literal["l", "r"]:
    """The tower alternates l* (odd m) and r* (even m)."""
    return "l" if m % 2 else "r"


def nerve_kan_check(X: Graph, m: int, max_dim: int, d: int, levels: int = 1,
                    budget: Optional[CellBudget] = None,
                    custom_logger: Optional[logging.Logger] = None) -> Report:
    """
    Fill every open box of N^G_m X up to dimension d, pushing a box up the
    tower m -> m+1 -> ... -> m+levels when it does not fill where it started.
    Boxes that fill nowhere are inconclusive: the colimit may still fill them.
    """
    log = custom_logger or logger
    if d > max_dim:
        raise DomainError(f"box dimension {d} exceeds the truncation {max_dim}")
    budget = budget or default_budget(f"N^G kan check {X}")
    nerves = [graph_nerve(X, m + j, max_dim, budget) for j in range(levels + 1)]
    report = Report(f"open box fillers in N^G_{m}({X.name}) up to dimension {d}, stabilized to level {m + levels}")
    report.notes.append("within truncation")
    filled_at = [0] * (levels + 1)
    for n in range(1, d + 1):
        for i in range(1, n + 1):
            for eps in (0, 1):
                for walls in open_box_maps(nerves[0], n, i, eps, budget):
                    for j, nerve in enumerate(nerves):
                        if find_filler(nerve, n, i, eps, walls) is not None:
                            filled_at[j] += 1
                            break
                        if j < levels:
                            walls = {key: tower_cube(w, m + j, tower_shape(m + j)) for key, w in walls.items()}
                    else:
                        report.add(f"box({n},{i},{eps})", "inconclusive", walls={f"d{key}": repr(w) for key, w in sorted(walls.items())})
    for j, count in enumerate(filled_at):
        if count:
            report.add(f"filled at level {m + j}", "pass", boxes=count)
    log.info("N^G_%d(%s) kan check: %s", m, X, report.verdict)
    return report
