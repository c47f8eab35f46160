"""
Cubical categories: categories enriched in cubical sets under the geometric product.

A category exposes cube-level operations (membership, action, composition,
identities) so large mapping spaces are only materialized on demand. The
composite of g in C(b, c) and f in C(a, b) is a cube of dimension
dim g + dim f whose first coordinates come from g.
"""

import itertools
import logging
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from csets.components import Components, pi0
from csets.cubical_set import CubicalSet, discrete, empty, point
from cube.box_morphism import BoxMorphism
from cube.generators import Generator, connection, degeneracy, face
from enriched.finite_category import FiniteCategory
from models.errors import TruncationError
from models.verdicts import Report
from products.tensor import is_canonical
from utils.cell_budget import CellBudget, default_budget

logger = logging.getLogger(__name__)

Obj = Hashable
Cube = Hashable


class CubicalCategory:
    """Base class; subclasses provide _build_hom, compose and identity."""

    def __init__(self, objects: Sequence[Obj], max_dim: int, name: str = ""):
        self.objects = tuple(objects)
        self.max_dim = max_dim
        self.name = name
        self._homs: Dict[Tuple[Obj, Obj, int], CubicalSet] = {}

    # --- mapping spaces ---

    def hom(self, a: Obj, b: Obj, max_dim: Optional[int] = None) -> CubicalSet:
        d = self.max_dim if max_dim is None else max_dim
        key = (a, b, d)
        if key not in self._homs:
            self._homs[key] = self._build_hom(a, b, d)
            logger.debug("%s: materialized %s", self.name, self._homs[key].describe())
        return self._homs[key]

    def _build_hom(self, a: Obj, b: Obj, max_dim: int) -> CubicalSet:
        raise NotImplementedError

    def contains(self, a: Obj, b: Obj, x: Cube) -> bool:
        return x in self.hom(a, b)

    def cube_dim(self, a: Obj, b: Obj, x: Cube) -> int:
        return self.hom(a, b).dim(x)

    def act(self, a: Obj, b: Obj, x: Cube, gen: Generator) -> Cube:
        return self.hom(a, b).act_generator(x, gen)

    def act_morphism(self, a: Obj, b: Obj, x: Cube, f: BoxMorphism) -> Cube:
        for gen in f.word:
            x = self.act(a, b, x, gen)
        return x

    def compose(self, a: Obj, b: Obj, c: Obj, g: Cube, f: Cube) -> Cube:
        raise NotImplementedError

    def identity(self, a: Obj) -> Cube:
        raise NotImplementedError

    # --- 0- and 1-cubes ---

    def components(self, a: Obj, b: Obj) -> Components:
        return pi0(self.hom(a, b))

    def one_cube_between(self, a: Obj, b: Obj, x: Cube, y: Cube) -> Optional[Cube]:
        """A 1-cube with faces (x, y) or (y, x)."""
        H = self.hom(a, b)
        if H.max_dim < 1:
            return None
        found = H.by_boundary(1, (x, y)) or H.by_boundary(1, (y, x))
        return found[0] if found else None

    def skeleton(self, a: Obj, b: Obj) -> nx.Graph:
        """0-cubes joined by the endpoints of 1-cubes."""
        H = self.hom(a, b)
        graph = nx.Graph()
        graph.add_nodes_from(H.cubes(0))
        if H.max_dim >= 1:
            graph.add_edges_from(H.boundary_tuple(x) for x in H.cubes(1))
        return graph

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name}, objects={len(self.objects)}, D={self.max_dim})"


# --- geometric product of mapping spaces, cube by cube ---

def act_on_composable(C: CubicalCategory, a: Obj, b: Obj, c: Obj, g: Cube, f: Cube, gen: Generator):
    """(g (x) f).gen by the tensor case formulas."""
    m, n = C.cube_dim(b, c, g), C.cube_dim(a, b, f)
    i = gen.index
    if gen.kind == "face":
        if i <= m:
            return C.act(b, c, g, face(m, i, gen.eps)), f
        return g, C.act(a, b, f, face(n, i - m, gen.eps))
    if gen.kind == "degeneracy":
        if i <= m:
            return C.act(b, c, g, degeneracy(m + 1, i)), f
        return g, C.act(a, b, f, degeneracy(n + 1, i - m))
    if i <= m:
        return C.act(b, c, g, connection(m + 1, i, gen.eps)), f
    return g, C.act(a, b, f, connection(n + 1, i - m, gen.eps))


def generators_on(k: int, max_dim: int) -> List[Generator]:
    """Generators acting on a k-cube without leaving the truncation."""
    gens = [face(k, i, e) for i in range(1, k + 1) for e in (0, 1)]
    if k < max_dim:
        gens += [degeneracy(k + 1, i) for i in range(1, k + 2)]
        gens += [connection(k + 1, i, e) for i in range(1, k + 1) for e in (0, 1)]
    return gens


# --- axioms ---

def _pick(rng, items: List, sample: Optional[int]) -> List:
    if sample is None or len(items) <= sample:
        return items
    return [items[i] for i in sorted(rng.choice(len(items), size=sample, replace=False))]


def verify_axioms(C: CubicalCategory, objects: Optional[Sequence[Obj]] = None,
                  sample: Optional[int] = None, seed: int = 0,
                  budget: Optional[CellBudget] = None,
                  custom_logger: Optional[logging.Logger] = None) -> Report:
    """
    Units, cubical naturality of composition (which includes compatibility
    with the tensor identifications) and associativity on nondegenerate
    triples. With ``sample`` each family is checked on a seeded random subset.
    """
    log = custom_logger or logger
    objects = tuple(C.objects if objects is None else objects)
    budget = budget or default_budget(f"axioms of {C.name}")
    rng = np.random.default_rng(seed)
    D = C.max_dim
    report = Report(f"enriched category axioms of {C.name or 'cubical category'}")
    report.notes.append("within truncation")
    if sample is not None:
        report.notes.append(f"sampled: at most {sample} instances per family")

    for a, b in itertools.product(objects, repeat=2):
        H = C.hom(a, b)
        cubes = _pick(rng, list(H.all_cubes()), sample)
        for x in cubes:
            budget.charge()
            if C.compose(a, b, b, C.identity(b), x) != x:
                report.add(f"left unit at {a!r}->{b!r}", "fail", cube=repr(x))
            if C.compose(a, a, b, x, C.identity(a)) != x:
                report.add(f"right unit at {a!r}->{b!r}", "fail", cube=repr(x))

    for a, b, c in itertools.product(objects, repeat=3):
        G, F = C.hom(b, c), C.hom(a, b)
        pairs = [(g, f) for j in range(D + 1) for g in G.cubes(j) if is_canonical(G, g)
                 for l in range(D + 1 - j) for f in F.cubes(l)]
        for g, f in _pick(rng, pairs, sample):
            budget.charge()
            k = G.dim(g) + F.dim(f)
            gf = C.compose(a, b, c, g, f)
            for gen in generators_on(k, D):
                moved = act_on_composable(C, a, b, c, g, f, gen)
                if C.compose(a, b, c, *moved) != C.act(a, c, gf, gen):
                    report.add(f"composition natural at {a!r}->{b!r}->{c!r}", "fail",
                               pair=repr((g, f)), generator=gen.notation())

    for a, b, c, d in itertools.product(objects, repeat=4):
        H, G, F = C.hom(c, d), C.hom(b, c), C.hom(a, b)
        triples = [(h, g, f) for i in range(D + 1) for h in H.nondegenerate(i)
                   for j in range(D + 1 - i) for g in G.nondegenerate(j)
                   for l in range(D + 1 - i - j) for f in F.nondegenerate(l)]
        for h, g, f in _pick(rng, triples, sample):
            budget.charge()
            left = C.compose(a, c, d, h, C.compose(a, b, c, g, f))
            right = C.compose(a, b, d, C.compose(b, c, d, h, g), f)
            if left != right:
                report.add(f"associativity at {a!r}->{b!r}->{c!r}->{d!r}", "fail", triple=repr((h, g, f)))

    if not report.failures:
        report.add("axioms", "pass", objects=len(objects))
    log.info("axioms of %s: %s", C.name, report.verdict)
    return report


# --- concrete categories ---

class Sk0Category(CubicalCategory):
    """An ordinary category with discrete mapping spaces; k-cubes are (morphism, k)."""

    def __init__(self, base: FiniteCategory, max_dim: int):
        super().__init__(base.objects, max_dim, f"Sk0({base.name})")
        self.base = base

    def _build_hom(self, a, b, max_dim):
        return discrete(self.base.hom(a, b), max_dim, f"{self.name}({a!r},{b!r})")

    def compose(self, a, b, c, g, f):
        return self.base.compose(a, b, c, g[0], f[0]), g[1] + f[1]

    def identity(self, a):
        return self.base.identity(a), 0


class SuspensionCategory(CubicalCategory):
    """Objects 0 and 1, C(0,1) = X, C(1,0) empty, trivial endomorphisms."""

    def __init__(self, X: CubicalSet, max_dim: Optional[int] = None):
        D = X.max_dim if max_dim is None else max_dim
        super().__init__((0, 1), D, f"Sigma({X.name})")
        self.X = X.truncate(D)
        self._point = point(D)

    def _build_hom(self, a, b, max_dim):
        if max_dim > self.max_dim:
            raise TruncationError(f"{self.name}({a},{b})", max_dim)
        if a == b:
            return self._point.truncate(max_dim)
        if (a, b) == (0, 1):
            return self.X.truncate(max_dim)
        return empty(max_dim)

    def compose(self, a, b, c, g, f):
        if a == b == c:
            return "*", g[1] + f[1]
        if a == b:
            # x (x) pt_l: the trailing coordinates are dummies
            return self.X.act_word(g, [degeneracy(k + 1, k + 1) for k in range(self.X.dim(g), self.X.dim(g) + f[1])])
        # pt_j (x) x
        return self.X.act_word(f, [degeneracy(k + 1, 1) for k in range(self.X.dim(f), self.X.dim(f) + g[1])])

    def identity(self, a):
        return "*", 0


def suspension(X: CubicalSet, max_dim: Optional[int] = None) -> SuspensionCategory:
    return SuspensionCategory(X, max_dim)


def sk0(C: FiniteCategory, max_dim: int) -> Sk0Category:
    return Sk0Category(C, max_dim)

