"""
Nerves: the homotopy-coherent nerve of a cubical category, the nerve of a
finite category, and the homotopy category of a simplicial set.

An n-simplex of the coherent nerve is a cubical functor c[n] -> C, stored
as (objects, cubes) with one (j-i-1)-cube of C(c_i, c_j) for every i < j,
in lexicographic order of (i, j). Such cubes define a functor exactly when
every face d(j-l, 1) of the (i, j) cube is the composite through l.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

from networkx.utils import UnionFind

from coherent.rigid_simplex import push_cube
from cube.box_morphism import identity as box_identity
from cube.generators import face
from enriched.category import CubicalCategory
from enriched.finite_category import FiniteCategory
from enriched.functors import degenerate
from models.constants import MAX_COHERENT_NERVE_DIM
from models.errors import DomainError, TruncationError
from products.simplicial import SimplicialSet, chain_degen, chain_face
from utils.cell_budget import CellBudget, default_budget

logger = logging.getLogger(__name__)

Obj = Hashable
Cube = Hashable
NerveSimplex = Tuple[Tuple[Obj, ...], Tuple[Cube, ...]]


def simplex_pairs(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]


def nerve_vertex(a: Obj) -> NerveSimplex:
    return (a,), ()


def face_theta(n: int, i: int) -> Tuple[int, ...]:
    return tuple(v for v in range(n + 1) if v != i)


def degeneracy_theta(n: int, j: int) -> Tuple[int, ...]:
    return tuple(range(j + 1)) + tuple(range(j, n + 1))


# --- the coherent nerve ---

class FaceIndex:
    """Cubes of C(a, b) of dimension k keyed by their faces d(r, 1), r = 1..k."""

    def __init__(self, C: CubicalCategory, depth: int):
        self.C = C
        self.depth = depth
        self._index: Dict[Tuple[Obj, Obj, int], Dict[tuple, List[Cube]]] = {}

    def lookup(self, a: Obj, b: Obj, k: int, faces: tuple) -> List[Cube]:
        key = (a, b, k)
        if key not in self._index:
            index: Dict[tuple, List[Cube]] = {}
            for x in self.C.hom(a, b, self.depth).cubes(k):
                signature = tuple(self.C.act(a, b, x, face(k, r, 1)) for r in range(1, k + 1))
                index.setdefault(signature, []).append(x)
            self._index[key] = index
        return self._index[key].get(faces, [])


def iter_functors(C: CubicalCategory, n: int, objects: Optional[Sequence[Obj]] = None,
                  budget: Optional[CellBudget] = None, index: Optional[FaceIndex] = None) -> Iterator[NerveSimplex]:
    """Every cubical functor c[n] -> C, within the truncation of C."""
    if n - 1 > C.max_dim:
        raise TruncationError(f"{n}-simplices of the coherent nerve of {C.name}", n - 1)
    objects = tuple(C.objects if objects is None else objects)
    budget = budget or default_budget(f"coherent nerve of {C.name}")
    index = index or FaceIndex(C, max(n - 1, 0))
    order = sorted(simplex_pairs(n), key=lambda pair: (pair[1] - pair[0], pair[0]))
    lexicographic = simplex_pairs(n)

    def extend(objs, chosen, position):
        if position == len(order):
            budget.charge()
            yield objs, tuple(chosen[pair] for pair in lexicographic)
            return
        i, j = order[position]
        k = j - i - 1
        faces = tuple(C.compose(objs[i], objs[j - r], objs[j], chosen[(j - r, j)], chosen[(i, j - r)])
                      for r in range(1, k + 1))
        for x in index.lookup(objs[i], objs[j], k, faces):
            chosen[(i, j)] = x
            yield from extend(objs, chosen, position + 1)
        chosen.pop((i, j), None)

    for objs in itertools.product(objects, repeat=n + 1):
        yield from extend(objs, {}, 0)


def act_on_simplex(C: CubicalCategory, sigma: NerveSimplex, theta: Sequence[int]) -> NerveSimplex:
    """sigma . theta: precomposition with c(theta)."""
    objs, cubes = sigma
    table = dict(zip(simplex_pairs(len(objs) - 1), cubes))
    result = []
    for a, b in simplex_pairs(len(theta) - 1):
        i, j = theta[a], theta[b]
        if i == j:
            result.append(degenerate(C, objs[i], objs[i], C.identity(objs[i]), b - a - 1))
            continue
        g = push_cube(theta, a, b, box_identity(b - a - 1))
        result.append(C.act_morphism(objs[i], objs[j], table[(i, j)], g))
    return tuple(objs[t] for t in theta), tuple(result)


def coherent_nerve(C: CubicalCategory, n_max: int, objects: Optional[Sequence[Obj]] = None,
                   budget: Optional[CellBudget] = None,
                   custom_logger: Optional[logging.Logger] = None) -> SimplicialSet:
    log = custom_logger or logger
    if n_max > MAX_COHERENT_NERVE_DIM:
        raise DomainError(f"the coherent nerve is enumerated up to dimension {MAX_COHERENT_NERVE_DIM}, not {n_max}")
    budget = budget or default_budget(f"coherent nerve of {C.name}")
    index = FaceIndex(C, max(n_max - 1, 0))
    simplices = {n: list(iter_functors(C, n, objects, budget, index)) for n in range(n_max + 1)}
    log.debug("coherent nerve of %s: %s", C.name, [len(simplices[n]) for n in range(n_max + 1)])

    def face_fn(x, i):
        return act_on_simplex(C, x, face_theta(len(x[0]) - 1, i))

    def degen_fn(x, j):
        return act_on_simplex(C, x, degeneracy_theta(len(x[0]) - 1, j))

    return SimplicialSet.from_action(n_max, simplices, face_fn, degen_fn, f"N({C.name})")


# --- nerves of ordinary categories ---

def category_nerve(F: FiniteCategory, max_dim: int) -> SimplicialSet:
    """Simplices (objects, morphisms) with morphisms[i]: objects[i] -> objects[i + 1]."""
    def chains(k):
        def extend(objs, arrows):
            if len(arrows) == k:
                yield tuple(objs), tuple(arrows)
                return
            for b in F.objects:
                for f in F.hom(objs[-1], b):
                    yield from extend(objs + [b], arrows + [f])

        for a in F.objects:
            yield from extend([a], [])

    def face_fn(x, i):
        objs, arrows = x
        n = len(arrows)
        if i == 0:
            return objs[1:], arrows[1:]
        if i == n:
            return objs[:-1], arrows[:-1]
        composite = F.compose(objs[i - 1], objs[i], objs[i + 1], arrows[i], arrows[i - 1])
        return objs[:i] + objs[i + 1:], arrows[:i - 1] + (composite,) + arrows[i + 1:]

    def degen_fn(x, j):
        objs, arrows = x
        return objs[:j + 1] + objs[j:], arrows[:j] + (F.identity(objs[j]),) + arrows[j:]

    simplices = {k: list(chains(k)) for k in range(max_dim + 1)}
    return SimplicialSet.from_action(max_dim, simplices, face_fn, degen_fn, f"N({F.name})")


def thin_groupoid_nerve(max_dim: int = 3) -> SimplicialSet:
    """E1: the nerve of the groupoid with two uniquely isomorphic objects."""
    simplices = {k: list(itertools.product((0, 1), repeat=k + 1)) for k in range(max_dim + 1)}
    return SimplicialSet.from_action(max_dim, simplices, chain_face, chain_degen, "E1")


# --- homotopy categories from 1- and 2-simplices ---

@dataclass
class SimplicialHomotopyCategory(FiniteCategory):
    """Morphisms are 1-simplices modulo the relations of the 2-simplices; each class is named by its first edge."""
    classes: Dict[Hashable, Hashable] = field(default_factory=dict)

    def class_of(self, edge: Hashable) -> Hashable:
        return self.classes[edge]


def homotopy_category_from_relations(vertices: Sequence[Hashable], edges: Dict[Hashable, Tuple[Hashable, Hashable]],
                                     identities: Dict[Hashable, Hashable],
                                     triangles: Iterable[Tuple[Hashable, Hashable, Hashable]], name: str = "",
                                     budget: Optional[CellBudget] = None) -> SimplicialHomotopyCategory:
    """
    Congruence closure: a triangle (d0, d1, d2) says d1 = d0 o d2. Classes
    are merged until composition is a function of the classes.
    """
    budget = budget or default_budget(f"homotopy category {name}")
    triangles = list(triangles)
    classes = UnionFind(edges)
    table: Dict[Tuple[Hashable, Hashable], Hashable] = {}
    changed = True
    while changed:
        changed = False
        table = {}
        budget.charge(len(triangles))
        for d0, d1, d2 in triangles:
            key = (classes[d0], classes[d2])
            if key not in table:
                table[key] = d1
            elif classes[table[key]] != classes[d1]:
                classes.union(table[key], d1)
                changed = True
    first: Dict[Hashable, Hashable] = {}
    for e in edges:
        first.setdefault(classes[e], e)
    names = {e: first[classes[e]] for e in edges}
    homs: Dict[Tuple[Hashable, Hashable], List[Hashable]] = {}
    for e, (a, b) in edges.items():
        if names[e] == e:
            homs.setdefault((a, b), []).append(e)
    composition = {}
    for a, b, c in itertools.product(vertices, repeat=3):
        entries = {}
        for f in homs.get((a, b), ()):
            for g in homs.get((b, c), ()):
                key = (classes[g], classes[f])
                if key not in table:
                    raise DomainError(f"{g!r} o {f!r} is not represented by a 1-simplex in {name}")
                entries[(g, f)] = names[table[key]]
        composition[(a, b, c)] = entries
    return SimplicialHomotopyCategory(tuple(vertices), {pair: tuple(m) for pair, m in homs.items()}, composition,
                                      {v: names[identities[v]] for v in vertices}, name, names)


def simplicial_ho(X: SimplicialSet, budget: Optional[CellBudget] = None) -> SimplicialHomotopyCategory:
    """Ho(X) when every composable pair of edges has a filler; otherwise DomainError."""
    if X.max_dim < 2:
        raise TruncationError(f"Ho({X.name}) needs 2-simplices", 2)
    edges = {e: (X.face(e, 1), X.face(e, 0)) for e in X.cells(1)}
    identities = {v: X.degen(v, 0) for v in X.cells(0)}
    triangles = ((X.face(t, 0), X.face(t, 1), X.face(t, 2)) for t in X.cells(2))
    return homotopy_category_from_relations(X.cells(0), edges, identities, triangles, f"Ho({X.name})", budget)
