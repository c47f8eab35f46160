"""
Cubical functors, natural transformations and the product with [1].
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Optional, Sequence

from csets.cubical_set import CubicalSet, empty
from csets.maps import CubicalMap
from csets.cells import representable
from cube.box_morphism import BoxMorphism
from cube.generators import degeneracy, face
from enriched.category import CubicalCategory, generators_on, sk0
from enriched.finite_category import FiniteFunctor, arrow_category
from enriched.homotopy import ho
from models.errors import DomainError
from models.verdicts import Report
from products.tensor import tensor

logger = logging.getLogger(__name__)

Obj = Hashable
Cube = Hashable


@dataclass
class CubicalFunctor:
    src: CubicalCategory
    dst: CubicalCategory
    on_objects: Dict[Obj, Obj]
    on_cubes: Callable[[Obj, Obj, Cube], Cube]
    name: str = ""

    def __call__(self, a: Obj, b: Obj, x: Cube) -> Cube:
        return self.on_cubes(a, b, x)

    def then(self, other: "CubicalFunctor") -> "CubicalFunctor":
        F = self.on_objects
        return CubicalFunctor(self.src, other.dst, {a: other.on_objects[F[a]] for a in F},
                              lambda a, b, x: other(F[a], F[b], self(a, b, x)),
                              f"{other.name} o {self.name}")


def identity_functor(C: CubicalCategory) -> CubicalFunctor:
    return CubicalFunctor(C, C, {a: a for a in C.objects}, lambda a, b, x: x, "id")


def verify_functor(F: CubicalFunctor, objects: Optional[Sequence[Obj]] = None) -> Report:
    """Identities, composition and the cubical operators, on every cube within truncation."""
    C, E, Fo = F.src, F.dst, F.on_objects
    objects = tuple(C.objects if objects is None else objects)
    report = Report(f"cubical functor {F.name or ''}".strip())
    report.notes.append("within truncation")
    for a in objects:
        if F(a, a, C.identity(a)) != E.identity(Fo[a]):
            report.add(f"identity {a!r}", "fail")
    for a, b in itertools.product(objects, repeat=2):
        H = C.hom(a, b)
        for x in H.all_cubes():
            y = F(a, b, x)
            if not E.contains(Fo[a], Fo[b], y):
                report.add(f"cube {a!r}->{b!r}", "fail", cube=repr(x), reason="image is not a cube")
                continue
            for gen in generators_on(H.dim(x), H.max_dim):
                if F(a, b, H.act_generator(x, gen)) != E.act(Fo[a], Fo[b], y, gen):
                    report.add(f"operators {a!r}->{b!r}", "fail", cube=repr(x), generator=gen.notation())
    for a, b, c in itertools.product(objects, repeat=3):
        G, H = C.hom(b, c), C.hom(a, b)
        for j in range(C.max_dim + 1):
            for g in G.cubes(j):
                for l in range(C.max_dim + 1 - j):
                    for f in H.cubes(l):
                        left = F(a, c, C.compose(a, b, c, g, f))
                        right = E.compose(Fo[a], Fo[b], Fo[c], F(b, c, g), F(a, b, f))
                        if left != right:
                            report.add(f"composition {a!r}->{b!r}->{c!r}", "fail", pair=repr((g, f)))
    if not report.failures:
        report.add("functor", "pass", objects=len(objects))
    return report


def ho_functor(F: CubicalFunctor, objects: Optional[Sequence[Obj]] = None) -> FiniteFunctor:
    """pi0 change of base: ho(F): ho(C) -> ho(D) on the given objects."""
    objects = tuple(F.src.objects if objects is None else objects)
    source = ho(F.src, objects)
    target = ho(F.dst, tuple(dict.fromkeys(F.on_objects[a] for a in objects)))
    morphisms = {}
    for a, b, f in source.morphisms():
        Fa, Fb = F.on_objects[a], F.on_objects[b]
        morphisms[(a, b, f)] = target.class_of(Fa, Fb, F(a, b, f))
    return FiniteFunctor(source, target, {a: F.on_objects[a] for a in objects}, morphisms)


# --- natural transformations ---

@dataclass
class CubicalNaturalTransformation:
    """Components alpha_a in D(Fa, Ga)_0."""
    source: CubicalFunctor
    target: CubicalFunctor
    components: Dict[Obj, Cube]
    name: str = ""


def verify_natural_transformation(alpha: CubicalNaturalTransformation,
                                  objects: Optional[Sequence[Obj]] = None) -> Report:
    F, G = alpha.source, alpha.target
    if F.src is not G.src or F.dst is not G.dst:
        raise DomainError("a natural transformation needs functors with the same source and target")
    C, E = F.src, F.dst
    objects = tuple(C.objects if objects is None else objects)
    report = Report(f"natural transformation {alpha.name}".strip())
    report.notes.append("within truncation")
    for a in objects:
        if not E.contains(F.on_objects[a], G.on_objects[a], alpha.components[a]):
            report.add(f"component {a!r}", "fail", reason="not a 0-cube of the mapping space")
    if report.failures:
        return report
    for a, b in itertools.product(objects, repeat=2):
        Fa, Fb, Ga, Gb = F.on_objects[a], F.on_objects[b], G.on_objects[a], G.on_objects[b]
        for x in C.hom(a, b).all_cubes():
            left = E.compose(Fa, Fb, Gb, alpha.components[b], F(a, b, x))
            right = E.compose(Fa, Ga, Gb, G(a, b, x), alpha.components[a])
            if left != right:
                report.add(f"naturality {a!r}->{b!r}", "fail", cube=repr(x))
    if not report.failures:
        report.add("naturality", "pass", objects=len(objects))
    if report.failures:
        return report
    # the same data as a functor out of C x [1]
    realized = verify_functor(transformation_as_functor(alpha), [(c, i) for i in (0, 1) for c in objects])
    for result in realized.results:
        report.add(f"C x [1] {result.name}", result.verdict, **result.detail)
    return report


class ArrowProduct(CubicalCategory):
    """
    C x [1]: objects (c, i) with i in {0, 1}; the mapping space from (c, i) to
    (d, j) is C(c, d) when i <= j and empty otherwise. A cube keeps the cube of C.
    """

    def __init__(self, C: CubicalCategory):
        super().__init__([(c, i) for i in (0, 1) for c in C.objects], C.max_dim, f"{C.name} x [1]")
        self.base = C

    def _build_hom(self, a, b, max_dim) -> CubicalSet:
        if a[1] > b[1]:
            return empty(max_dim)
        return self.base.hom(a[0], b[0], max_dim)

    def contains(self, a, b, x) -> bool:
        return a[1] <= b[1] and self.base.contains(a[0], b[0], x)

    def cube_dim(self, a, b, x) -> int:
        return self.base.cube_dim(a[0], b[0], x)

    def act(self, a, b, x, gen):
        return self.base.act(a[0], b[0], x, gen)

    def compose(self, a, b, c, g, f):
        return self.base.compose(a[0], b[0], c[0], g, f)

    def identity(self, a):
        return self.base.identity(a[0])


def transformation_as_functor(alpha: CubicalNaturalTransformation) -> CubicalFunctor:
    """(c, 0) -> Fc, (c, 1) -> Gc; a cube x: (c, 0) -> (d, 1) goes to alpha_d o F(x)."""
    F, G = alpha.source, alpha.target
    P = ArrowProduct(F.src)
    objects = {(c, i): (F if i == 0 else G).on_objects[c] for c, i in P.objects}

    def on_cubes(a, b, x):
        (c, i), (d, j) = a, b
        if i == j:
            return (F if i == 0 else G)(c, d, x)
        return F.dst.compose(F.on_objects[c], F.on_objects[d], G.on_objects[d], alpha.components[d], F(c, d, x))

    return CubicalFunctor(P, F.dst, objects, on_cubes, f"{alpha.name} as a functor")


# --- postcomposition with a 1-cube ---

def postcomposition_homotopy(C: CubicalCategory, W: Obj, X: Obj, Y: Obj, H: Cube,
                             source: Optional[CubicalSet] = None) -> CubicalMap:
    """
    cube[1] (x) C(W, X) -> C(W, Y), (a, x) -> (H.a) o x; restricted to the two
    vertices of cube[1] it is postcomposition with the endpoints of H.
    """
    if C.cube_dim(X, Y, H) != 1:
        raise DomainError("postcomposition homotopy needs a 1-cube")
    source = source or tensor(representable(1, C.max_dim), C.hom(W, X))
    target = C.hom(W, Y)
    mapping = {}
    for k in range(source.max_dim + 1):
        for a, x in source.cubes(k):
            mapping[(a, x)] = C.compose(W, X, Y, C.act_morphism(X, Y, H, a), x)
    return CubicalMap(source, target, mapping, "postcomposition homotopy")


def postcomposition_endpoints_check(C: CubicalCategory, W: Obj, X: Obj, Y: Obj, H: Cube) -> Report:
    """The homotopy is a cubical map whose ends are f_* and g_* for f, g the faces of H."""
    report = Report("postcomposition homotopy")
    P = postcomposition_homotopy(C, W, X, Y, H)
    for violation in P.naturality_violations():
        report.add("natural", "fail", violation=violation)
    ends = [C.act(X, Y, H, face(1, 1, e)) for e in (0, 1)]
    for e, end in enumerate(ends):
        vertex = BoxMorphism(0, 1, ((e,),))
        for x in C.hom(W, X).all_cubes():
            if P((vertex, x)) != C.compose(W, X, Y, end, x):
                report.add(f"end {e}", "fail", cube=repr(x))
                break
    if not report.failures:
        report.add("postcomposition homotopy", "pass")
    return report


# --- functors out of the arrow category ---

def degenerate(E: CubicalCategory, a: Obj, b: Obj, x: Cube, k: int) -> Cube:
    """x with k dummy coordinates in front."""
    for n in range(E.cube_dim(a, b, x), E.cube_dim(a, b, x) + k):
        x = E.act(a, b, x, degeneracy(n + 1, 1))
    return x


def arrow_functor(E: CubicalCategory, a: Obj, b: Obj, f: Cube, source: Optional[CubicalCategory] = None) -> CubicalFunctor:
    """Sk0([1]) -> E picking the 0-cube f: a -> b."""
    S = source or sk0(arrow_category(), E.max_dim)
    objects = {0: a, 1: b}

    def on_cubes(i, j, x):
        _, k = x
        if i == j:
            return degenerate(E, objects[i], objects[i], E.identity(objects[i]), k)
        return degenerate(E, a, b, f, k)

    return CubicalFunctor(S, E, objects, on_cubes, f"arrow {f!r}")


def postcomposition_transformation(F: CubicalFunctor, c: Obj, f: Cube, name: str = "") -> CubicalNaturalTransformation:
    """F picks u: a -> b; the transformation F => f_* F has components id_a and f: b -> c."""
    E = F.dst
    a, b = F.on_objects[0], F.on_objects[1]
    u = F(0, 1, ((0, 1), 0))
    G = arrow_functor(E, a, c, E.compose(a, b, c, f, u), F.src)
    return CubicalNaturalTransformation(F, G, {0: E.identity(a), 1: f}, name or f"postcomposition with {f!r}")


def suspension_functor(F: CubicalMap, source: CubicalCategory, target: CubicalCategory) -> CubicalFunctor:
    """Sigma F: Sigma X -> Sigma Y for a map F: X -> Y."""
    def on_cubes(a, b, x):
        return F(x) if (a, b) == (0, 1) else x

    return CubicalFunctor(source, target, {0: 0, 1: 1}, on_cubes, f"Sigma({F.name})")
