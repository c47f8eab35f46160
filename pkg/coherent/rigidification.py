"""
The rigidification cX of a simplicial set X.

A k-cube of cX(x, y) is a reduced tuple of pairs (s, f) listed in
application order: s is a nondegenerate simplex of dimension m >= 1 and f a
cube of c[m](0, m), a box morphism into [1]^(m-1) without constant
coordinates. Composition concatenates tuples. The coordinates of the whole
cube are laid out with the last applied pair first, each pair owning a
contiguous block.

Reduction works on global maps [1]^k -> [1]^(m-1), one per pair:
  - a coordinate constant 1 at vertex v splits s into its faces on
    [0..v] and [v..m];
  - a coordinate constant 0 at vertex v replaces s by the face missing v;
  - a degenerate s = z.theta is replaced by z with c(theta) applied, and
    dropped when z is a vertex.
A coordinate used by no pair belongs to the first listed pair that uses a
later coordinate, or to the last listed pair when there is none.
"""

import itertools
import logging
from typing import Dict, Iterator, List, Literal, NamedTuple, Optional, Sequence, Set, Tuple

import networkx as nx

from coherent.rigid_simplex import RigidSimplexCategory, push_cube
from csets.cubical_set import CubicalSet
from cube.box_morphism import BoxMorphism, compose as compose_box, enumerate_box_morphisms, from_generator, vertices
from cube.generators import Generator
from enriched.category import CubicalCategory
from enriched.functors import CubicalFunctor
from models.errors import DomainError
from models.verdicts import Report
from products.simplicial import SimplicialSet
from utils.cell_budget import CellBudget, default_budget

logger = logging.getLogger(__name__)

Simplex = object
Pair = Tuple[Simplex, BoxMorphism]
Order = Literal["forward", "backward"]


class RigidTuple(NamedTuple):
    source: Simplex
    target: Simplex
    dim: int
    pairs: Tuple[Pair, ...]


# --- global maps ---

def _spread(f: BoxMorphism, lo: int, k: int) -> BoxMorphism:
    """f read on the coordinates lo, ..., lo + f.src - 1 of [1]^k."""
    return BoxMorphism(k, f.dst, tuple(f(p[lo:lo + f.src]) for p in vertices(k)))


def _restrict(F: BoxMorphism, block: Sequence[int]) -> BoxMorphism:
    table = []
    for q in vertices(len(block)):
        p = [0] * F.src
        for t, bit in zip(block, q):
            p[t] = bit
        table.append(F(tuple(p)))
    return BoxMorphism(len(block), F.dst, tuple(table))


def _columns(F: BoxMorphism, keep: Sequence[int]) -> BoxMorphism:
    keep = list(keep)
    return BoxMorphism(F.src, len(keep), tuple(tuple(row[c] for c in keep) for row in F.table))


def _constant_outputs(F: BoxMorphism) -> Iterator[Tuple[int, int]]:
    for c in range(F.dst):
        values = {row[c] for row in F.table}
        if len(values) == 1:
            yield c, values.pop()


def used_inputs(F: BoxMorphism) -> Set[int]:
    used = set()
    for t in range(F.src):
        for p in vertices(F.src):
            if p[t] == 0 and F(p) != F(p[:t] + (1,) + p[t + 1:]):
                used.add(t)
                break
    return used


def global_maps(t: RigidTuple) -> List[Pair]:
    """The pairs of t with each f read on all coordinates of the cube, in application order."""
    spread, lo = [], 0
    for s, f in reversed(t.pairs):
        spread.append((s, _spread(f, lo, t.dim)))
        lo += f.src
    return spread[::-1]


# --- reduction ---

def _collapse(X: SimplicialSet, s, F: BoxMorphism) -> Optional[List[Pair]]:
    z, theta = X.ez_decomposition(s)
    if z == s:
        return None
    if X.dim(z) == 0:
        return []
    return [(z, push_cube(theta, 0, len(theta) - 1, F))]


def _split(X: SimplicialSet, s, F: BoxMorphism) -> Optional[List[Pair]]:
    m = X.dim(s)
    for c, value in _constant_outputs(F):
        if value == 1:
            v = m - 1 - c
            front = X.act_monotone(s, tuple(range(v + 1)))
            back = X.act_monotone(s, tuple(range(v, m + 1)))
            return [(front, _columns(F, range(c + 1, m - 1))), (back, _columns(F, range(c)))]
    return None


def _inner_face(X: SimplicialSet, s, F: BoxMorphism) -> Optional[List[Pair]]:
    m = X.dim(s)
    for c, value in _constant_outputs(F):
        if value == 0:
            return [(X.face(s, m - 1 - c), _columns(F, [d for d in range(m - 1) if d != c]))]
    return None


_RULES = (_collapse, _split, _inner_face)


def _reduce_once(X: SimplicialSet, factors: List[Pair], order: Order) -> bool:
    positions = range(len(factors)) if order == "forward" else reversed(range(len(factors)))
    rules = _RULES if order == "forward" else _RULES[::-1]
    for n in positions:
        s, F = factors[n]
        for rule in rules:
            replacement = rule(X, s, F)
            if replacement is not None:
                factors[n:n + 1] = replacement
                return True
    return False


def _distribute(x, y, k: int, factors: List[Pair]) -> RigidTuple:
    if not factors:
        return RigidTuple(x, y, k, ())
    listing = factors[::-1]
    used = [used_inputs(F) for _, F in listing]
    owner = []
    for t in range(k):
        holders = [n for n, u in enumerate(used) if t in u]
        if len(holders) > 1:
            raise DomainError(f"coordinate {t + 1} is read by two pairs of a rigid tuple")
        if holders:
            owner.append(holders[0])
            continue
        later = [n for n, u in enumerate(used) if any(r > t for r in u)]
        owner.append(min(later) if later else len(listing) - 1)
    if any(b < a for a, b in zip(owner, owner[1:])):
        raise DomainError("the coordinates of a rigid tuple are not in block order")
    pairs = [(s, _restrict(F, [t for t in range(k) if owner[t] == n])) for n, (s, F) in enumerate(listing)]
    return RigidTuple(x, y, k, tuple(pairs[::-1]))


def normalize(X: SimplicialSet, x, y, k: int, factors: Sequence[Pair], order: Order = "forward") -> RigidTuple:
    """Reduce pairs of global maps on [1]^k to a rigid tuple."""
    factors = list(factors)
    while _reduce_once(X, factors, order):
        pass
    return _distribute(x, y, k, factors)


# --- the category ---

def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class RigidificationCategory(CubicalCategory):
    def __init__(self, X: SimplicialSet, max_dim: int, max_length: Optional[int] = None,
                 budget: Optional[CellBudget] = None):
        super().__init__(X.cells(0), max_dim, f"c({X.name})")
        self.X = X
        self.budget = budget or default_budget(self.name)
        self.arrows: Dict[Simplex, List[Tuple[Simplex, Simplex]]] = {}
        graph = nx.DiGraph()
        graph.add_nodes_from(X.cells(0))
        for m in range(1, X.max_dim + 1):
            for s in X.nondegenerate(m):
                vs = X.vertices_of(s)
                self.arrows.setdefault(vs[0], []).append((s, vs[-1]))
                graph.add_edge(vs[0], vs[-1])
        if max_length is None and not nx.is_directed_acyclic_graph(graph):
            raise DomainError(f"{X.name} has a directed cycle of nondegenerate simplices; give a maximal tuple length")
        self.max_length = max_length

    def chains(self, a, b) -> Iterator[Tuple[Simplex, ...]]:
        """Composable nondegenerate simplices from a to b, in application order."""
        limit = self.max_length

        def extend(vertex, chain):
            if vertex == b:
                yield tuple(chain)
            if limit is not None and len(chain) >= limit:
                return
            for s, end in self.arrows.get(vertex, ()):
                yield from extend(end, chain + [s])

        yield from extend(a, [])

    def _local_cubes(self, m: int, k: int, last: bool) -> List[BoxMorphism]:
        cubes = []
        for f in enumerate_box_morphisms(k, m - 1):
            if any(True for _ in _constant_outputs(f)):
                continue
            if not last and k and (k - 1) not in used_inputs(f):
                continue
            cubes.append(f)
        return cubes

    def _build_hom(self, a, b, max_dim) -> CubicalSet:
        cubes: Dict[int, List[RigidTuple]] = {k: [] for k in range(max_dim + 1)}
        for chain in self.chains(a, b):
            if not chain:
                for k in range(max_dim + 1):
                    cubes[k].append(RigidTuple(a, b, k, ()))
                continue
            dims = [self.X.dim(s) for s in chain]
            for k in range(max_dim + 1):
                for sizes in _compositions(k, len(chain)):
                    choices = [self._local_cubes(m, size, n == 0) for n, (m, size) in enumerate(zip(dims, sizes))]
                    for fs in itertools.product(*choices):
                        self.budget.charge()
                        cubes[k].append(RigidTuple(a, b, k, tuple(zip(chain, fs))))
        logger.debug("%s(%r, %r): %s", self.name, a, b, [len(cubes[k]) for k in range(max_dim + 1)])
        return CubicalSet.from_action(max_dim, cubes, self.act_tuple, f"{self.name}({a!r},{b!r})")

    def act_tuple(self, t: RigidTuple, gen: Generator) -> RigidTuple:
        move = from_generator(gen)
        factors = [(s, compose_box(F, move)) for s, F in global_maps(t)]
        return normalize(self.X, t.source, t.target, gen.src, factors)

    def cube_dim(self, a, b, x) -> int:
        return x.dim

    def act(self, a, b, x, gen):
        return self.act_tuple(x, gen)

    def compose(self, a, b, c, g, f):
        k = g.dim + f.dim
        factors = [(s, _spread(F, g.dim, k)) for s, F in global_maps(f)]
        factors += [(s, _spread(G, 0, k)) for s, G in global_maps(g)]
        return normalize(self.X, a, c, k, factors)

    def identity(self, a):
        return RigidTuple(a, a, 0, ())

    def pair(self, s, f: BoxMorphism) -> RigidTuple:
        """The cube (s, f) for any simplex s and any cube f of c[m](0, m)."""
        vs = self.X.vertices_of(s)
        return normalize(self.X, vs[0], vs[-1], f.src, [(s, f)])


def rigidification(X: SimplicialSet, max_dim: int, max_length: Optional[int] = None,
                   budget: Optional[CellBudget] = None) -> RigidificationCategory:
    return RigidificationCategory(X, max_dim, max_length, budget)


def simplex_functor(R: RigidificationCategory, s, source: RigidSimplexCategory) -> CubicalFunctor:
    """The functor c[m] -> cX picked out by an m-simplex s."""
    X = R.X
    vs = X.vertices_of(s)

    def on_cubes(i, j, x):
        if i == j:
            return RigidTuple(vs[i], vs[i], x[1], ())
        return R.pair(X.act_monotone(s, tuple(range(i, j + 1))), x)

    return CubicalFunctor(source, R, {i: vs[i] for i in source.objects}, on_cubes, f"c[{X.dim(s)}] -> {R.name}")


def confluence_check(X: SimplicialSet, max_dim: int, max_length: int = 2,
                     budget: Optional[CellBudget] = None) -> Report:
    """
    Reduce every unreduced tuple of at most max_length pairs, simplices
    degenerate or not, in two different orders and compare the results.
    """
    budget = budget or default_budget("confluence")
    report = Report(f"reduction order on tuples over {X.name}")
    arrows: Dict[Simplex, List[Tuple[Simplex, Simplex]]] = {}
    for m in range(1, X.max_dim + 1):
        for s in X.cells(m):
            vs = X.vertices_of(s)
            arrows.setdefault(vs[0], []).append((s, vs[-1]))
    checked = 0

    def chains(vertex, chain):
        if chain:
            yield tuple(chain), vertex
        if len(chain) < max_length:
            for s, end in arrows.get(vertex, ()):
                yield from chains(end, chain + [s])

    for x in X.cells(0):
        for chain, y in chains(x, []):
            dims = [X.dim(s) for s in chain]
            for k in range(max_dim + 1):
                for sizes in _compositions(k, len(chain)):
                    choices = [enumerate_box_morphisms(size, m - 1) for m, size in zip(dims, sizes)]
                    for fs in itertools.product(*choices):
                        budget.charge()
                        raw = RigidTuple(x, y, k, tuple(zip(chain, fs)))
                        factors = global_maps(raw)
                        forward = normalize(X, x, y, k, factors, "forward")
                        backward = normalize(X, x, y, k, factors, "backward")
                        checked += 1
                        if forward != backward:
                            report.add("confluence", "fail", tuple=repr(raw))
    if not report.failures:
        report.add("confluence", "pass", tuples=checked)
    return report
