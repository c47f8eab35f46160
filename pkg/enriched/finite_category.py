"""
Finite ordinary categories given by explicit composition tables.

These are the targets of the homotopy-category construction and the index
shapes of resolution diagrams.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

from cube.box_morphism import compose as compose_box, enumerate_box_morphisms, identity as box_identity
from models.errors import DomainError
from models.verdicts import Report

logger = logging.getLogger(__name__)

Obj = Hashable
Morphism = Hashable


@dataclass
class FiniteCategory:
    objects: Tuple[Obj, ...]
    homs: Dict[Tuple[Obj, Obj], Tuple[Morphism, ...]]
    composition: Dict[Tuple[Obj, Obj, Obj], Dict[Tuple[Morphism, Morphism], Morphism]]
    identities: Dict[Obj, Morphism]
    name: str = field(default="", compare=False)

    def hom(self, a: Obj, b: Obj) -> Tuple[Morphism, ...]:
        return self.homs.get((a, b), ())

    def compose(self, a: Obj, b: Obj, c: Obj, g: Morphism, f: Morphism) -> Morphism:
        """g o f for f: a -> b and g: b -> c."""
        try:
            return self.composition[(a, b, c)][(g, f)]
        except KeyError:
            raise DomainError(f"{g!r} o {f!r} is not defined on {a!r} -> {b!r} -> {c!r} in {self.name}")

    def identity(self, a: Obj) -> Morphism:
        return self.identities[a]

    def morphisms(self) -> Iterator[Tuple[Obj, Obj, Morphism]]:
        for a in self.objects:
            for b in self.objects:
                for f in self.hom(a, b):
                    yield a, b, f

    def size(self) -> int:
        return sum(len(m) for m in self.homs.values())

    def inverse(self, a: Obj, b: Obj, f: Morphism) -> Optional[Morphism]:
        for g in self.hom(b, a):
            if self.compose(a, b, a, g, f) == self.identity(a) and self.compose(b, a, b, f, g) == self.identity(b):
                return g
        return None

    def is_groupoid(self) -> bool:
        return all(self.inverse(a, b, f) is not None for a, b, f in self.morphisms())

    def initial_objects(self) -> List[Obj]:
        return [a for a in self.objects if all(len(self.hom(a, b)) == 1 for b in self.objects)]

    def terminal_objects(self) -> List[Obj]:
        return [b for b in self.objects if all(len(self.hom(a, b)) == 1 for a in self.objects)]

    def verify(self) -> Report:
        report = Report(f"category axioms of {self.name or 'finite category'}")
        for a in self.objects:
            if self.identities.get(a) not in self.hom(a, a):
                report.add(f"identity {a!r}", "fail", reason="missing identity")
        for a, b, f in self.morphisms():
            if self.compose(a, b, b, self.identity(b), f) != f or self.compose(a, a, b, f, self.identity(a)) != f:
                report.add(f"unit {f!r}", "fail", source=repr(a), target=repr(b))
        for a, b, c, d in itertools.product(self.objects, repeat=4):
            for f in self.hom(a, b):
                for g in self.hom(b, c):
                    gf = self.compose(a, b, c, g, f)
                    for h in self.hom(c, d):
                        if self.compose(a, c, d, h, gf) != self.compose(a, b, d, self.compose(b, c, d, h, g), f):
                            report.add(f"associativity {h!r},{g!r},{f!r}", "fail")
        if not report.failures:
            report.add("axioms", "pass", morphisms=self.size())
        return report


def tabulate(objects: Sequence[Obj], hom: Callable[[Obj, Obj], Iterable[Morphism]],
             compose: Callable[[Obj, Obj, Obj, Morphism, Morphism], Morphism],
             identity: Callable[[Obj], Morphism], name: str = "") -> FiniteCategory:
    objects = tuple(objects)
    homs = {(a, b): tuple(hom(a, b)) for a in objects for b in objects}
    composition = {}
    for a, b, c in itertools.product(objects, repeat=3):
        composition[(a, b, c)] = {(g, f): compose(a, b, c, g, f) for f in homs[(a, b)] for g in homs[(b, c)]}
    return FiniteCategory(objects, homs, composition, {a: identity(a) for a in objects}, name)


# --- corpus ---

def poset_category(n: int) -> FiniteCategory:
    """[n] = 0 -> 1 -> ... -> n; the morphism i -> j is the pair (i, j)."""
    return tabulate(range(n + 1),
                    lambda a, b: [(a, b)] if a <= b else [],
                    lambda a, b, c, g, f: (a, c),
                    lambda a: (a, a),
                    f"[{n}]")


def arrow_category() -> FiniteCategory:
    return poset_category(1)


def cyclic_group(order: int) -> FiniteCategory:
    """Z/order as a one-object category."""
    return tabulate(["*"], lambda a, b: range(order),
                    lambda a, b, c, g, f: (g + f) % order, lambda a: 0, f"Z/{order}")


def discrete_category(objects: Sequence[Obj]) -> FiniteCategory:
    return tabulate(objects, lambda a, b: [("id", a)] if a == b else [],
                    lambda a, b, c, g, f: ("id", a), lambda a: ("id", a), "discrete")


def box_category(n: int) -> FiniteCategory:
    """The opposite of the cube category on [1]^0..[1]^n; a morphism a -> b is a box morphism [1]^b -> [1]^a."""
    return tabulate(range(n + 1),
                    lambda a, b: enumerate_box_morphisms(b, a),
                    lambda a, b, c, g, f: compose_box(f, g),
                    box_identity,
                    f"box^op<={n}")


def opposite(C: FiniteCategory) -> FiniteCategory:
    return tabulate(C.objects, lambda a, b: C.hom(b, a),
                    lambda a, b, c, g, f: C.compose(c, b, a, f, g),
                    C.identity, f"{C.name}^op")


# --- functors ---

@dataclass
class FiniteFunctor:
    src: FiniteCategory
    dst: FiniteCategory
    on_objects: Dict[Obj, Obj]
    on_morphisms: Dict[Tuple[Obj, Obj, Morphism], Morphism]

    def __call__(self, a: Obj, b: Obj, f: Morphism) -> Morphism:
        return self.on_morphisms[(a, b, f)]

    def then(self, other: "FiniteFunctor") -> "FiniteFunctor":
        objects = {a: other.on_objects[x] for a, x in self.on_objects.items()}
        morphisms = {(a, b, f): other(self.on_objects[a], self.on_objects[b], m)
                     for (a, b, f), m in self.on_morphisms.items()}
        return FiniteFunctor(self.src, other.dst, objects, morphisms)

    def verify(self) -> Report:
        report = Report(f"functor {self.src.name} -> {self.dst.name}")
        F = self.on_objects
        for a in self.src.objects:
            if self(a, a, self.src.identity(a)) != self.dst.identity(F[a]):
                report.add(f"identity {a!r}", "fail")
        for a, b, c in itertools.product(self.src.objects, repeat=3):
            for f in self.src.hom(a, b):
                for g in self.src.hom(b, c):
                    left = self(a, c, self.src.compose(a, b, c, g, f))
                    right = self.dst.compose(F[a], F[b], F[c], self(b, c, g), self(a, b, f))
                    if left != right:
                        report.add(f"composition {g!r} o {f!r}", "fail")
        if not report.failures:
            report.add("functoriality", "pass")
        return report


def identity_functor(C: FiniteCategory) -> FiniteFunctor:
    return FiniteFunctor(C, C, {a: a for a in C.objects}, {(a, b, f): f for a, b, f in C.morphisms()})
