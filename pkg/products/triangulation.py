"""
Triangulation of cubical sets and its bounded right adjoint.

A k-simplex of TX is a pair (z, chain): z a nondegenerate n-cube and chain a
weakly increasing sequence of k + 1 vertices of [1]^n that is nonconstant in
every coordinate (it runs from 0...0 to 1...1).
"""

import itertools
import logging
from typing import Dict, Hashable, List, Optional, Tuple

from cube.box_morphism import BoxMorphism, compose, from_generator, vertices
from csets.cubical_set import CubicalSet
from csets.maps import CubicalMap, iter_maps
from models.errors import TruncationError
from products.simplicial import (
    SimplicialMap, SimplicialSet, chain_degen, chain_face, simplicial_cube, simplicial_product,
)
from products.tensor import canonical_pair
from utils.cell_budget import CellBudget, default_budget

logger = logging.getLogger(__name__)

Chain = Tuple[Tuple[int, ...], ...]


def interior_chains(n: int, k: int) -> List[Chain]:
    """Weakly increasing chains of length k + 1 in {0,1}^n from 0...0 to 1...1."""
    bottom, top = (0,) * n, (1,) * n
    points = vertices(n)
    chains = []

    def extend(chain):
        if len(chain) == k + 1:
            if chain[-1] == top:
                chains.append(tuple(chain))
            return
        for p in points:
            if all(a <= b for a, b in zip(chain[-1], p)):
                extend(chain + [p])

    extend([bottom])
    return chains


def normalize(X: CubicalSet, x: Hashable, chain: Chain) -> Tuple[Hashable, Chain]:
    """Representative of (x, chain) with x nondegenerate and chain interior."""
    while True:
        n = X.dim(x)
        for j in range(n):
            values = {p[j] for p in chain}
            if len(values) == 1:
                x = X.face(x, j + 1, values.pop())
                chain = tuple(p[:j] + p[j + 1:] for p in chain)
                break
        else:
            if not X.is_degenerate(x):
                return x, chain
            z, e = X.ez_decomposition(x)
            x, chain = z, tuple(e(p) for p in chain)


def triangulate(X: CubicalSet, custom_logger: Optional[logging.Logger] = None) -> SimplicialSet:
    log = custom_logger or logger
    simplices: Dict[int, List[tuple]] = {}
    for k in range(X.max_dim + 1):
        layer = []
        for n in range(k + 1):
            chains = interior_chains(n, k)
            for z in X.nondegenerate(n):
                layer.extend((z, c) for c in chains)
        simplices[k] = layer
    result = SimplicialSet.from_action(
        X.max_dim, simplices,
        lambda s, i: normalize(X, s[0], chain_face(s[1], i)),
        lambda s, j: normalize(X, s[0], chain_degen(s[1], j)),
        f"T({X.name})",
    )
    log.debug("triangulated %s into %s", X.name, result.describe())
    return result


def triangulate_map(F: CubicalMap, TX: SimplicialSet, TY: SimplicialSet) -> SimplicialMap:
    mapping = {}
    for k in range(TX.max_dim + 1):
        for z, chain in TX.cells(k):
            mapping[(z, chain)] = normalize(F.dst, F(z), chain)
    return SimplicialMap(TX, TY, mapping, "T(F)")


def representable_triangulation_iso(TC: SimplicialSet, cube_n: int) -> SimplicialMap:
    """T(cube[n]) -> (Delta^1)^n, (z, chain) -> z o chain."""
    target = simplicial_cube(cube_n, TC.max_dim)
    mapping = {(z, chain): tuple(z(p) for p in chain)
               for k in range(TC.max_dim + 1) for z, chain in TC.cells(k)}
    return SimplicialMap(TC, target, mapping, "T(cube) = (Delta1)^n")


def comparison_map(X: CubicalSet, Y: CubicalSet, T_XY: SimplicialSet, TX: SimplicialSet,
                   TY: SimplicialSet) -> SimplicialMap:
    """T(X (x) Y) -> TX x TY, splitting chain coordinates between the factors."""
    target = simplicial_product(TX, TY)
    mapping = {}
    for k in range(T_XY.max_dim + 1):
        for (x, y), chain in T_XY.cells(k):
            m = X.dim(x)
            left = normalize(X, x, tuple(p[:m] for p in chain))
            right = normalize(Y, y, tuple(p[m:] for p in chain))
            mapping[((x, y), chain)] = (left, right)
    return SimplicialMap(T_XY, target, mapping, "T(X (x) Y) -> TX x TY")


class BoundedU:
    """(UX)_n = simplicial maps (Delta^1)^n -> X for n <= max_dim."""

    def __init__(self, X: SimplicialSet, max_dim: int, budget: Optional[CellBudget] = None):
        if X.max_dim < max_dim:
            raise TruncationError(f"U({X.name}) at dimension {max_dim}", max_dim)
        budget = budget or default_budget("bounded U")
        self.X = X
        self.max_dim = max_dim
        self.cubes_n = {n: simplicial_cube(n, X.max_dim) for n in range(max_dim + 1)}
        self.order = {n: [c for k in range(X.max_dim + 1) for c in self.cubes_n[n].cells(k)]
                      for n in range(max_dim + 1)}
        self.positions = {n: {c: p for p, c in enumerate(order)} for n, order in self.order.items()}
        layers = {n: [(n, tuple(f(c) for c in self.order[n]))
                      for f in iter_maps(self.cubes_n[n], X, budget, cls=SimplicialMap)]
                  for n in range(max_dim + 1)}
        self.cset = CubicalSet.from_action(max_dim, layers, self._act, f"U({X.name})")

    def evaluate(self, phi: tuple, chain: tuple) -> Hashable:
        n, images = phi
        return images[self.positions[n][chain]]

    def precompose(self, phi: tuple, f: BoxMorphism) -> tuple:
        k = f.src
        return (k, tuple(self.evaluate(phi, tuple(f(p) for p in chain)) for chain in self.order[k]))

    def _act(self, phi: tuple, gen) -> tuple:
        return self.precompose(phi, from_generator(gen))


def alpha(UA: BoundedU, UB: BoundedU, UAB: BoundedU, source: CubicalSet) -> CubicalMap:
    """UA (x) UB -> U(A x B), (a, b) -> (chain -> (a(first m coordinates), b(last n coordinates)))."""
    mapping = {}
    for k in range(source.max_dim + 1):
        for a, b in source.cubes(k):
            m, n = a[0], b[0]
            images = tuple((UA.evaluate(a, tuple(p[:m] for p in chain)),
                            UB.evaluate(b, tuple(p[m:] for p in chain)))
                           for chain in UAB.order[m + n])
            mapping[(a, b)] = (m + n, images)
    return CubicalMap(source, UAB.cset, mapping, "alpha")
