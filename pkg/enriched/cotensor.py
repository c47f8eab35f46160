"""
Weak cotensors by cubes and the connection homotopy on a cotensor tower.

A witness that W is the cotensor of X by cube[n] identifies the k-cubes of
C(Z, W) with the (k+n)-cubes of C(Z, X), the new coordinates last. This is
cSet(cube[n], C(Z, X)) evaluated through the representable n-cube.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Hashable, List, Optional, Sequence

from cube.box_morphism import BoxMorphism, compose as compose_box, enumerate_box_morphisms, vertices
from cube.generators import Generator, face
from enriched.category import CubicalCategory, generators_on
from enriched.graph_category import GraphCubicalCategory
from enriched.homotopy import EquivalenceHint
from graphs.graph import Graph
from graphs.nerve import _grid
from graphs.homotopy import hom_graph
from models.errors import DomainError
from models.verdicts import Report

logger = logging.getLogger(__name__)

Obj = Hashable
Cube = Hashable


@dataclass
class CotensorWitness:
    category: CubicalCategory
    base: Obj
    n: int
    candidate: Obj
    to_cube: Callable[[Obj, Cube], Cube]
    from_cube: Callable[[Obj, Cube], Cube]
    name: str = ""


def unit_cotensor(C: CubicalCategory, X: Obj) -> CotensorWitness:
    """cube[0] cotensor X = X."""
    return CotensorWitness(C, X, 0, X, lambda Z, x: x, lambda Z, y: y, "unit")


def graph_cotensor(C: GraphCubicalCategory, X: Graph, n: int) -> CotensorWitness:
    """W = Graph^box(I_m^{box n}, X); a vertex of W is an image tuple over the grid points."""
    if n == 0:
        return unit_cotensor(C, X)
    W = hom_graph(_grid(C.m, n), X, C.budget)
    W = Graph(W.vertices, W.edges, f"{X.name}^I{C.m}^{n}")
    block = len(_grid(C.m, n).vertices)

    def to_cube(Z: Graph, w):
        k, images = w
        return k + n, tuple(tuple(zmap[v] for zmap in wmap) for wmap in images for v in range(block))

    def from_cube(Z: Graph, y):
        K, images = y
        if K < n:
            raise DomainError(f"a {K}-cube has no cotensor transpose by the {n}-cube")
        grouped = []
        for start in range(0, len(images), block):
            chunk = images[start:start + block]
            grouped.append(tuple(tuple(chunk[v][z] for v in range(block)) for z in range(len(Z.vertices))))
        return K - n, tuple(grouped)

    return CotensorWitness(C, X, n, W, to_cube, from_cube, f"graph cotensor of {X.name} by cube[{n}]")


def graph_cotensor_tower(C: GraphCubicalCategory, X: Graph, n: int) -> List[CotensorWitness]:
    return [graph_cotensor(C, X, j) for j in range(n + 1)]


def _shift(gen: Generator, n: int) -> Generator:
    """gen (x) id_n: the same generator on the leading coordinates."""
    return Generator(gen.kind, gen.ambient + n, gen.index, gen.eps)


def verify_cotensor(w: CotensorWitness, test_objects: Sequence[Obj],
                    tower: Optional[Sequence[CotensorWitness]] = None,
                    custom_logger: Optional[logging.Logger] = None) -> Report:
    """
    For every Z: the transpose is a bijection C(Z, W)_k -> C(Z, X)_{k+n},
    commutes with the cubical operators, and is natural in Z along 0-cubes.
    Given the tower that w tops, the induced maps W_q -> W_p are also checked
    to form a functor on the cube category.
    """
    if tower is not None and (len(tower) != w.n + 1 or tower[-1].candidate != w.candidate):
        raise DomainError(f"{w.name or 'the witness'} is not the top of the given cotensor tower")
    log = custom_logger or logger
    C, X, W, n = w.category, w.base, w.candidate, w.n
    D = C.max_dim
    report = Report(f"cotensor {w.name or W!r} of {X!r} by cube[{n}]")
    report.notes.append("within truncation")
    regular = []
    for Z in test_objects:
        CW, CX = C.hom(Z, W), C.hom(Z, X, D + n)
        counts = ([len(CW.cubes(k)) for k in range(D + 1)], [len(CX.cubes(k + n)) for k in range(D + 1)])
        if counts[0] != counts[1]:
            report.add(f"component {Z!r}", "fail", counts=counts)
            continue
        broken = False
        for k in range(D + 1):
            images = [w.to_cube(Z, x) for x in CW.cubes(k)]
            if len(set(images)) != len(images) or any(y not in CX for y in images):
                report.add(f"component {Z!r}", "fail", dimension=k, reason="not a bijection")
                broken = True
                break
            for x, y in zip(CW.cubes(k), images):
                if w.from_cube(Z, y) != x:
                    report.add(f"inverse {Z!r}", "fail", cube=repr(x))
                    broken = True
                    break
                for gen in generators_on(k, D):
                    if w.to_cube(Z, CW.act_generator(x, gen)) != CX.act_generator(y, _shift(gen, n)):
                        report.add(f"operators {Z!r}", "fail", cube=repr(x), generator=gen.notation())
                        broken = True
                        break
                if broken:
                    break
            if broken:
                break
        if not broken:
            regular.append(Z)
    for Z, Z2 in itertools.product(regular, repeat=2):
        CW = C.hom(Z, W)
        for h in C.hom(Z2, Z).cubes(0):
            for x in CW.all_cubes():
                left = w.to_cube(Z2, C.compose(Z2, Z, W, x, h))
                right = C.compose(Z2, Z, X, w.to_cube(Z, x), h)
                if left != right:
                    report.add(f"naturality {Z2!r}->{Z!r}", "fail", morphism=repr(h), cube=repr(x))
                    break
    if not report.failures:
        report.add("cotensor", "pass", objects=len(regular))
    if tower is not None:
        for result in cotensor_functoriality_check(tower).results:
            report.add(f"tower {result.name}", result.verdict, **result.detail)
    log.info("cotensor check %s: %s", w.name, report.verdict)
    return report


# --- the tower as a diagram on the opposite cube category ---

def cotensor_map(tower: Sequence[CotensorWitness], theta: BoxMorphism) -> Cube:
    """theta: [1]^p -> [1]^q induces the 0-cube W_q -> W_p."""
    p, q = theta.src, theta.dst
    wp, wq = tower[p], tower[q]
    C, X, Wq = wq.category, wq.base, wq.candidate
    transpose = wq.to_cube(Wq, C.identity(Wq))
    return wp.from_cube(Wq, C.act_morphism(Wq, X, transpose, theta))


def cotensor_functoriality_check(tower: Sequence[CotensorWitness]) -> Report:
    n = len(tower) - 1
    C = tower[0].category
    report = Report(f"functoriality of the cotensor tower up to cube[{n}]")
    for p in range(n + 1):
        Wp = tower[p].candidate
        if cotensor_map(tower, BoxMorphism(p, p, vertices(p))) != C.identity(Wp):
            report.add(f"identity {p}", "fail")
    for p, q, r in itertools.product(range(n + 1), repeat=3):
        for first in enumerate_box_morphisms(p, q):
            for second in enumerate_box_morphisms(q, r):
                whole = cotensor_map(tower, compose_box(second, first))
                Wp, Wq, Wr = tower[p].candidate, tower[q].candidate, tower[r].candidate
                parts = C.compose(Wr, Wq, Wp, cotensor_map(tower, first), cotensor_map(tower, second))
                if whole != parts:
                    report.add(f"composition {p}->{q}->{r}", "fail", first=str(first), second=str(second))
    if not report.failures:
        report.add("functoriality", "pass", levels=n + 1)
    return report


def structure_morphism(tower: Sequence[CotensorWitness], n: int) -> Cube:
    """X -> W_n, induced by [1]^n -> [1]^0."""
    return cotensor_map(tower, BoxMorphism(n, 0, tuple(() for _ in vertices(n))))


def evaluation_morphism(tower: Sequence[CotensorWitness], n: int) -> Cube:
    """W_n -> X, induced by the vertex (1, ..., 1)."""
    return cotensor_map(tower, BoxMorphism(0, n, ((1,) * n,)))


def _rho(n: int, j: int) -> BoxMorphism:
    """(t, u) -> (1, ..., 1, max(t, u_j), u_{j+1}, ..., u_n)."""
    table = []
    for point in vertices(n + 1):
        t, u = point[0], point[1:]
        table.append((1,) * (j - 1) + (max(t, u[j - 1]),) + u[j:])
    return BoxMorphism(n + 1, n, tuple(table))


def connection_homotopy_check(tower: Sequence[CotensorWitness], n: Optional[int] = None,
                              custom_logger: Optional[logging.Logger] = None) -> Report:
    """
    The structure morphism c: X -> W_n has the section e with e.c = id, and
    connections give a zig-zag of n 1-cubes from id_{W_n} to c.e.
    """
    log = custom_logger or logger
    n = len(tower) - 1 if n is None else n
    if n >= len(tower):
        raise DomainError(f"no cotensor witness for cube[{n}]")
    w = tower[n]
    C, X, W = w.category, w.base, w.candidate
    report = Report(f"connection homotopy for {X!r} -> cube[{n}] cotensor")
    c, e = structure_morphism(tower, n), evaluation_morphism(tower, n)
    if C.compose(X, W, X, e, c) != C.identity(X):
        report.add("section", "fail", reason="e.c is not the identity")
    transpose = w.to_cube(W, C.identity(W))
    current = C.identity(W)
    for j in range(1, n + 1):
        H = w.from_cube(W, C.act_morphism(W, X, transpose, _rho(n, j)))
        start, end = C.act(W, W, H, face(1, 1, 0)), C.act(W, W, H, face(1, 1, 1))
        if not C.contains(W, W, H):
            report.add(f"step {j}", "fail", reason="not a 1-cube of the mapping space")
        if start != current:
            report.add(f"step {j}", "fail", reason="does not start where the previous step ended")
        current = end
    if current != C.compose(W, X, W, c, e):
        report.add("endpoint", "fail", reason="the zig-zag does not end at c.e")
    if not report.failures:
        report.add("connection homotopy", "pass", steps=n)
    report.notes.append("within truncation")
    log.info("connection homotopy check at cube[%d]: %s", n, report.verdict)
    return report


def connection_hint(tower: Sequence[CotensorWitness], n: int):
    """An equivalence hint for c: X -> W_n: inverse e, back = (id_X,), forth along the connection steps."""
    w = tower[n]
    C, X, W = w.category, w.base, w.candidate
    transpose = w.to_cube(W, C.identity(W))
    forth = [C.identity(W)]
    for j in range(1, n + 1):
        H = w.from_cube(W, C.act_morphism(W, X, transpose, _rho(n, j)))
        forth.append(C.act(W, W, H, face(1, 1, 1)))
    return EquivalenceHint(evaluation_morphism(tower, n), (C.identity(X),), tuple(forth))
