"""
Geometric product of cubical sets.

k-cubes of X (x) Y are pairs (x, y) with dim x + dim y = k, modulo
(x.s(m+1), y) = (x, y.s(1)). The representative keeps the left factor free
of a degeneracy in its last coordinate.
"""

import logging
from typing import Hashable, Tuple

from cube.box_morphism import BoxMorphism, product, vertices
from cube.generators import Generator, connection, degeneracy, face
from csets.cubical_set import CubicalSet
from csets.maps import CubicalMap

logger = logging.getLogger(__name__)


def canonical_pair(X: CubicalSet, Y: CubicalSet, x: Hashable, y: Hashable) -> Tuple[Hashable, Hashable]:
    m = X.dim(x)
    while m >= 1:
        below = X.face(x, m, 0)
        if X.degen(below, m) != x:
            break
        x, y = below, Y.degen(y, 1)
        m -= 1
    return x, y


def act_on_pair(X: CubicalSet, Y: CubicalSet, pair: Tuple[Hashable, Hashable], gen: Generator):
    """pair.gen by the case formulas, then canonicalized."""
    x, y = pair
    m = X.dim(x)
    i = gen.index
    if gen.kind == "face":
        if i <= m:
            return canonical_pair(X, Y, X.face(x, i, gen.eps), y)
        return canonical_pair(X, Y, x, Y.face(y, i - m, gen.eps))
    if gen.kind == "degeneracy":
        if i <= m:
            return canonical_pair(X, Y, X.degen(x, i), y)
        return canonical_pair(X, Y, x, Y.degen(y, i - m))
    if i <= m:
        return canonical_pair(X, Y, X.conn(x, i, gen.eps), y)
    return canonical_pair(X, Y, x, Y.conn(y, i - m, gen.eps))


def is_canonical(X: CubicalSet, x: Hashable) -> bool:
    m = X.dim(x)
    return m == 0 or X.degen(X.face(x, m, 0), m) != x


def tensor(X: CubicalSet, Y: CubicalSet) -> CubicalSet:
    """X (x) Y truncated at the smaller of the two bounds."""
    d = min(X.max_dim, Y.max_dim)
    cubes = {}
    for k in range(d + 1):
        layer = []
        for m in range(k + 1):
            lefts = [x for x in X.cubes(m) if is_canonical(X, x)]
            layer.extend((x, y) for x in lefts for y in Y.cubes(k - m))
        cubes[k] = layer
    result = CubicalSet.from_action(d, cubes, lambda pair, gen: act_on_pair(X, Y, pair, gen),
                                    f"{X.name} (x) {Y.name}")
    logger.debug("tensor %s", result.describe())
    return result


def tensor_maps(F: CubicalMap, G: CubicalMap, source: CubicalSet, target: CubicalSet) -> CubicalMap:
    """F (x) G between the given tensor products."""
    mapping = {}
    for k in range(source.max_dim + 1):
        for x, y in source.cubes(k):
            mapping[(x, y)] = canonical_pair(F.dst, G.dst, F(x), G(y))
    return CubicalMap(source, target, mapping, "tensor of maps")


def representable_iso(source: CubicalSet, target: CubicalSet) -> CubicalMap:
    """cube[p] (x) cube[q] -> cube[p+q], (a, b) -> a x b."""
    mapping = {}
    for k in range(source.max_dim + 1):
        for a, b in source.cubes(k):
            mapping[(a, b)] = product(a, b)
    return CubicalMap(source, target, mapping, "product of box morphisms")


def right_unitor(X: CubicalSet, XI: CubicalSet) -> CubicalMap:
    """X (x) point -> X, (x, pt_j) -> x with j trailing dummy coordinates."""
    mapping = {}
    for k in range(XI.max_dim + 1):
        for x, pt in XI.cubes(k):
            m = X.dim(x)
            projection = BoxMorphism(k, m, tuple(v[:m] for v in vertices(k)))
            mapping[(x, pt)] = X.act(x, projection)
    return CubicalMap(XI, X, mapping, "right unitor")


def left_unitor(IX: CubicalSet, X: CubicalSet) -> CubicalMap:
    """point (x) X -> X, (pt_0, x) -> x; every canonical pair has a 0-dimensional left factor."""
    mapping = {(pt, x): x for k in range(IX.max_dim + 1) for pt, x in IX.cubes(k)}
    return CubicalMap(IX, X, mapping, "left unitor")


def associator(X: CubicalSet, Y: CubicalSet, Z: CubicalSet,
               XY_Z: CubicalSet, YZ: CubicalSet, X_YZ: CubicalSet) -> CubicalMap:
    """((x, y), z) -> (x, (y, z)), canonicalized on both levels."""
    mapping = {}
    for k in range(XY_Z.max_dim + 1):
        for (x, y), z in XY_Z.cubes(k):
            inner = canonical_pair(Y, Z, y, z)
            mapping[((x, y), z)] = canonical_pair(X, YZ, x, inner)
    return CubicalMap(XY_Z, X_YZ, mapping, "associator")
