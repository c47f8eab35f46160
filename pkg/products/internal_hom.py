"""
The internal hom cSet(X, Y): n-cubes are maps cube[n] (x) X -> Y.

Cubes are keyed (n, images) with images listed in the cell order of the
source cube[n] (x) X.
"""

import logging
from typing import Dict, Hashable, List, Optional, Tuple

from cube.box_morphism import BoxMorphism, compose, from_generator
from csets.cells import representable
from csets.cubical_set import CubicalSet
from csets.maps import CubicalMap, iter_maps
from models.errors import TruncationError
from products.tensor import canonical_pair, tensor
from utils.cell_budget import CellBudget, default_budget

logger = logging.getLogger(__name__)


class InternalHom:
    """cSet(X, Y) truncated at D, with the sources cube[n] (x) X kept for evaluation."""

    def __init__(self, X: CubicalSet, Y: CubicalSet, max_dim: int, budget: Optional[CellBudget] = None):
        self.X = X
        self.Y = Y
        self.max_dim = max_dim
        top = max(X.top_nondegenerate_dim(), 0)
        needed = max_dim + top
        if Y.max_dim < needed or X.max_dim < needed:
            raise TruncationError(f"cSet({X.name}, {Y.name}) at dimension {max_dim}", needed)
        budget = budget or default_budget("internal hom")
        self.cubes_n: Dict[int, CubicalSet] = {}
        self.sources: Dict[int, CubicalSet] = {}
        self.order: Dict[int, List[Hashable]] = {}
        self.positions: Dict[int, Dict[Hashable, int]] = {}
        self.truncation = needed
        layers: Dict[int, List[tuple]] = {}
        for n in range(max_dim + 1):
            cube = representable(n, needed)
            source = tensor(cube, X.truncate(needed))
            self.cubes_n[n] = cube
            self.sources[n] = source
            self.order[n] = [c for k in range(source.max_dim + 1) for c in source.cubes(k)]
            self.positions[n] = {c: p for p, c in enumerate(self.order[n])}
            layers[n] = [(n, tuple(f(c) for c in self.order[n]))
                         for f in iter_maps(source, Y, budget)]
            logger.debug("internal hom %s -> %s: %d cubes in dimension %d", X.name, Y.name, len(layers[n]), n)
        self.cset = CubicalSet.from_action(max_dim, layers, self._act, f"hom({X.name}, {Y.name})")

    def evaluate(self, phi: tuple, pair: Tuple[Hashable, Hashable]) -> Hashable:
        """phi(a, x) for a canonical pair of cube[n] (x) X."""
        n, images = phi
        return images[self.positions[n][pair]]

    def precompose(self, phi: tuple, f: BoxMorphism) -> tuple:
        """phi o (f (x) id) for f : [1]^k -> [1]^n."""
        n, _ = phi
        k = f.src
        cube_n = self.cubes_n[n]
        images = []
        for a, x in self.order[k]:
            moved = canonical_pair(cube_n, self.X, compose(f, a), x)
            images.append(self.evaluate(phi, moved))
        return (k, tuple(images))

    def _act(self, phi: tuple, gen) -> tuple:
        return self.precompose(phi, from_generator(gen))

    def as_map(self, phi: tuple) -> CubicalMap:
        n, images = phi
        return CubicalMap(self.sources[n], self.Y, dict(zip(self.order[n], images)))

    def key_of(self, f: CubicalMap, n: int) -> tuple:
        return (n, tuple(f(c) for c in self.order[n]))


def internal_hom(X: CubicalSet, Y: CubicalSet, max_dim: int, budget: Optional[CellBudget] = None) -> CubicalSet:
    return InternalHom(X, Y, max_dim, budget).cset


def curry(hom: InternalHom, Z: CubicalSet, phi: CubicalMap) -> CubicalMap:
    """Transpose phi : Z (x) X -> Y to Z -> cSet(X, Y); z -> ((a, x) -> phi(z.a, x))."""
    if Z.max_dim < hom.truncation:
        raise TruncationError(f"currying over {Z.name}", hom.truncation)
    mapping = {}
    for p in range(min(Z.max_dim, hom.max_dim) + 1):
        for z in Z.cubes(p):
            images = []
            for a, x in hom.order[p]:
                za = Z.act(z, a)
                images.append(phi(canonical_pair(Z, hom.X, za, x)))
            mapping[z] = (p, tuple(images))
    return CubicalMap(Z, hom.cset, mapping, "curried")


def uncurry(hom: InternalHom, ZX: CubicalSet, Z: CubicalSet, Phi: CubicalMap) -> CubicalMap:
    """Transpose Phi : Z -> cSet(X, Y) back to Z (x) X -> Y using the top cube (id, x)."""
    mapping = {}
    for k in range(ZX.max_dim + 1):
        for z, x in ZX.cubes(k):
            p = Z.dim(z)
            top = hom.cubes_n[p].cubes(p)
            identity_cube = next(a for a in top if a.is_identity)
            mapping[(z, x)] = hom.evaluate(Phi(z), canonical_pair(hom.cubes_n[p], hom.X, identity_cube, x))
    return CubicalMap(ZX, hom.Y, mapping, "uncurried")
