"""
The cubical categories c[n] and the functors c(theta) between them.

c[n](i, j) is the representable (j-i-1)-cube for i < j. Its coordinates are
the intermediate vertices listed from j-1 down to i+1, so a cube is a box
morphism [1]^k -> [1]^(j-i-1) whose coordinate for vertex v says whether v
is passed through.
"""

import logging
from typing import Sequence

from csets.cells import representable
from csets.cubical_set import CubicalSet, empty, point
from cube.box_morphism import BoxMorphism, compose as compose_box, from_generator, identity as box_identity, product
from cube.generators import face
from enriched.category import CubicalCategory, verify_axioms
from enriched.functors import CubicalFunctor
from models.errors import DomainError

logger = logging.getLogger(__name__)


def terminal(k: int) -> BoxMorphism:
    """The unique map [1]^k -> [1]^0."""
    return BoxMorphism(k, 0, ((),) * (2 ** k))


def _check_monotone(theta: Sequence[int]):
    if any(b < a for a, b in zip(theta, theta[1:])):
        raise DomainError(f"{tuple(theta)} is not monotone")


class RigidSimplexCategory(CubicalCategory):
    def __init__(self, n: int, max_dim: int):
        if n < 0:
            raise DomainError(f"c[n] needs n >= 0, got {n}")
        super().__init__(range(n + 1), max_dim, f"c[{n}]")
        self.n = n
        report = verify_axioms(self)
        if report.failures:
            raise DomainError(f"{self.name} breaks the category axioms: {report.failures[0].name}")

    def _build_hom(self, a, b, max_dim) -> CubicalSet:
        if a < b:
            return representable(b - a - 1, max_dim)
        if a == b:
            return point(max_dim)
        return empty(max_dim)

    def cube_dim(self, a, b, x) -> int:
        return x[1] if a == b else x.src

    def act(self, a, b, x, gen):
        if a == b:
            return "*", gen.src
        return compose_box(x, from_generator(gen))

    def compose(self, a, b, c, g, f):
        if a == b == c:
            return "*", g[1] + f[1]
        if a == b:
            return product(g, terminal(f[1]))
        if b == c:
            return product(terminal(g[1]), f)
        # the composite passes through b: its coordinate is constant 1
        return compose_box(from_generator(face(c - a - 1, c - b, 1)), product(g, f))

    def identity(self, a):
        return "*", 0

    def top(self, a: int, b: int):
        """The generating cube of c[n](a, b)."""
        return ("*", 0) if a == b else box_identity(b - a - 1)


def rigid_simplex(n: int, max_dim: int) -> RigidSimplexCategory:
    return RigidSimplexCategory(n, max_dim)


def push_cube(theta: Sequence[int], i: int, j: int, x):
    """
    c(theta) on a cube x of c[m](i, j): vertex v of the target is passed
    through when some vertex of (i, j) over it is.
    """
    if i == j:
        return x
    a, b = theta[i], theta[j]
    if a == b:
        return "*", x.src
    rows = []
    for out in x.table:
        row = []
        for v in range(b - 1, a, -1):
            row.append(max((out[j - 1 - u] for u in range(i + 1, j) if theta[u] == v), default=0))
        rows.append(tuple(row))
    return BoxMorphism(x.src, b - a - 1, tuple(rows))


def rigid_functor(theta: Sequence[int], source: RigidSimplexCategory,
                  target: RigidSimplexCategory) -> CubicalFunctor:
    """c(theta): c[m] -> c[n] for a monotone theta: [m] -> [n] given by its values."""
    theta = tuple(theta)
    _check_monotone(theta)
    if len(theta) != source.n + 1 or any(not 0 <= t <= target.n for t in theta):
        raise DomainError(f"{theta} is not a map [{source.n}] -> [{target.n}]")
    return CubicalFunctor(source, target, {i: theta[i] for i in source.objects},
                          lambda i, j, x: push_cube(theta, i, j, x), f"c{theta}")
