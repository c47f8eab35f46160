"""
Bicubical sets: cubical objects in cubical sets.

cells[(p, q)] lists the cells of outer dimension p and inner dimension q;
act_outer / act_inner apply a generator in one direction.
"""

import logging
from typing import Callable, Dict, Hashable, List, Mapping, Sequence, Tuple

from cube.generators import Generator, connection, degeneracy, face
from csets.components import Components, components_from_edges
from csets.cubical_set import CubicalSet
from models.errors import DomainError

logger = logging.getLogger(__name__)


class BicubicalSet:
    def __init__(self, max_dim: int, cells: Mapping[Tuple[int, int], Sequence[Hashable]],
                 act_outer: Callable[[Hashable, Generator], Hashable],
                 act_inner: Callable[[Hashable, Generator], Hashable], name: str = ""):
        self.max_dim = max_dim
        self.cells = {(p, q): tuple(cells.get((p, q), ())) for p in range(max_dim + 1) for q in range(max_dim + 1)}
        self.act_outer = act_outer
        self.act_inner = act_inner
        self.name = name

    def row(self, p: int) -> CubicalSet:
        """The cubical set B_{p, .}."""
        return CubicalSet.from_action(self.max_dim, {q: self.cells[(p, q)] for q in range(self.max_dim + 1)},
                                      self.act_inner, f"{self.name}[{p},.]")

    def commutation_violations(self) -> List[str]:
        """Outer and inner generators must commute wherever both are defined."""
        violations = []
        for (p, q), layer in self.cells.items():
            for outer in _generators_from(p, self.max_dim):
                for inner in _generators_from(q, self.max_dim):
                    for x in layer:
                        a = self.act_inner(self.act_outer(x, outer), inner)
                        b = self.act_outer(self.act_inner(x, inner), outer)
                        if a != b:
                            violations.append(f"{outer.notation()} and {inner.notation()} disagree at {x!r}")
        return violations


def _generators_from(k: int, max_dim: int) -> List[Generator]:
    """Generators acting on k-cubes and landing within max_dim."""
    gens = [face(k, i, e) for i in range(1, k + 1) for e in (0, 1)]
    if k < max_dim:
        gens += [degeneracy(k + 1, i) for i in range(1, k + 2)]
        gens += [connection(k + 1, i, e) for i in range(1, k + 1) for e in (0, 1)]
    return gens


def diagonal(B: BicubicalSet) -> CubicalSet:
    """(diag B)_n = B_{n,n}, acted on by both families at once."""
    cubes = {n: B.cells[(n, n)] for n in range(B.max_dim + 1)}
    return CubicalSet.from_action(B.max_dim, cubes, lambda x, g: B.act_inner(B.act_outer(x, g), g),
                                  f"diag({B.name})")


def constant_bicubical(Y: CubicalSet) -> BicubicalSet:
    """B_{p,q} = Y_q, constant in the outer direction; cells are (p, y)."""
    cells = {(p, q): [(p, y) for y in Y.cubes(q)] for p in range(Y.max_dim + 1) for q in range(Y.max_dim + 1)}
    return BicubicalSet(Y.max_dim, cells,
                        lambda c, g: (g.src, c[1]),
                        lambda c, g: (c[0], Y.act_generator(c[1], g)),
                        f"const({Y.name})")


def levelwise_discrete(X: CubicalSet) -> BicubicalSet:
    """B_{p,q} = X_p as a discrete set in the inner direction; cells are (x, q)."""
    cells = {(p, q): [(x, q) for x in X.cubes(p)] for p in range(X.max_dim + 1) for q in range(X.max_dim + 1)}
    return BicubicalSet(X.max_dim, cells,
                        lambda c, g: (X.act_generator(c[0], g), c[1]),
                        lambda c, g: (c[0], g.src),
                        f"disc({X.name})")


def external_product(A: CubicalSet, B: CubicalSet) -> BicubicalSet:
    """(A box-times B)_{p,q} = A_p x B_q."""
    d = min(A.max_dim, B.max_dim)
    cells = {(p, q): [(a, b) for a in A.cubes(p) for b in B.cubes(q)] for p in range(d + 1) for q in range(d + 1)}
    return BicubicalSet(d, cells,
                        lambda c, g: (A.act_generator(c[0], g), c[1]),
                        lambda c, g: (c[0], B.act_generator(c[1], g)),
                        f"{A.name} ext {B.name}")


def pi0_by_rows(B: BicubicalSet) -> Components:
    """
    pi_0 of the diagonal from the rows: components of B_{0,.} glued along the
    two outer faces of each cell of B_{1,0}.
    """
    if B.max_dim < 1:
        raise DomainError("the row formula needs outer dimension 1")
    vertices = list(B.cells[(0, 0)])
    edges = []
    for x in B.cells[(0, 1)]:
        edges.append((B.act_inner(x, face(1, 1, 0)), B.act_inner(x, face(1, 1, 1))))
    for x in B.cells[(1, 0)]:
        edges.append((B.act_outer(x, face(1, 1, 0)), B.act_outer(x, face(1, 1, 1))))
    return components_from_edges(vertices, edges)
