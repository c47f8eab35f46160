"""
Standard cells: the representable n-cube, its boundary and its open boxes.

Cubes of all three are box morphisms [1]^k -> [1]^n, acted on by
precomposition.
"""

import logging
from typing import Literal, Optional

from cube.box_morphism import BoxMorphism, compose, enumerate_box_morphisms, from_generator
from cube.generators import Generator, face
from csets.cubical_set import CubicalSet
from models.errors import DomainError

logger = logging.getLogger(__name__)

CellKind = Literal["cube", "boundary", "open_box"]


def _precompose(x: BoxMorphism, gen: Generator) -> BoxMorphism:
    return compose(x, from_generator(gen))


def representable(n: int, max_dim: int) -> CubicalSet:
    if n < 0 or max_dim < 0:
        raise DomainError(f"dimensions must be >= 0, got n={n}, D={max_dim}")
    cubes = {k: enumerate_box_morphisms(k, n) for k in range(max_dim + 1)}
    logger.debug("representable cube %d truncated at %d: %s", n, max_dim, [len(c) for c in cubes.values()])
    return CubicalSet.from_action(max_dim, cubes, _precompose, f"cube[{n}]")


def constant_coordinates(x: BoxMorphism):
    """Pairs (j, value) of coordinates on which x is constant (j is 1-based)."""
    return {(j + 1, x.table[0][j]) for j in range(x.dst) if len({out[j] for out in x.table}) == 1}


def standard_cell(kind: CellKind, n: int, max_dim: int, i: Optional[int] = None,
                  eps: Optional[int] = None) -> CubicalSet:
    """The n-cube, its boundary, or the (i, eps)-open box, truncated at max_dim."""
    if kind == "cube":
        return representable(n, max_dim)
    if kind == "boundary":
        cube = representable(n, max_dim)
        return cube.restrict(lambda x: bool(constant_coordinates(x)), f"boundary[{n}]")
    if kind == "open_box":
        if n < 1 or i is None or eps is None or not 1 <= i <= n or eps not in (0, 1):
            raise DomainError(f"open box needs n >= 1, 1 <= i <= n and eps in {{0,1}}; got n={n}, i={i}, eps={eps}")
        cube = representable(n, max_dim)
        return cube.restrict(lambda x: bool(constant_coordinates(x) - {(i, eps)}), f"open_box[{n},{i},{eps}]")
    raise DomainError(f"unknown cell kind {kind!r}")


def face_cube(n: int, i: int, eps: int) -> BoxMorphism:
    """The (n-1)-cube of the n-cube given by the face d(i, eps)."""
    return from_generator(face(n, i, eps))
