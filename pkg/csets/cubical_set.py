"""
Finite, dimension-truncated cubical sets with connections.

Cubes are arbitrary hashable keys, unique across dimensions. Operators act
on the right: x.face(i, e) lowers the dimension, degeneracies and
connections raise it. Degenerate cubes are stored explicitly together with
every (root, generator) pair that produces them.
"""

import logging
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from cube.box_morphism import BoxMorphism, from_word, identity
from cube.generators import Generator, connection, degeneracy, face
from cube.identities import check_action_identities
from models.errors import DomainError, TruncationError

logger = logging.getLogger(__name__)

Cube = Hashable


class CubicalSet:
    """A cubical set truncated at max_dim, with total action tables."""

    def __init__(self, max_dim: int, cubes: Mapping[int, Sequence[Cube]],
                 faces: Mapping[Cube, Tuple[Cube, ...]],
                 degens: Mapping[Cube, Tuple[Cube, ...]],
                 conns: Mapping[Cube, Tuple[Cube, ...]],
                 name: str = "", verify: bool = True):
        self.max_dim = max_dim
        self.name = name
        self._cubes: Dict[int, Tuple[Cube, ...]] = {k: tuple(cubes.get(k, ())) for k in range(max_dim + 1)}
        self._dim: Dict[Cube, int] = {}
        for k, layer in self._cubes.items():
            for x in layer:
                if x in self._dim:
                    raise DomainError(f"cube {x!r} appears in dimensions {self._dim[x]} and {k}")
                self._dim[x] = k
        self._faces = dict(faces)
        self._degens = dict(degens)
        self._conns = dict(conns)
        self._validate_tables()
        self._sources: Dict[Cube, List[Tuple[Cube, Generator]]] = {}
        for x, images in self._degens.items():
            k = self._dim[x]
            for i, y in enumerate(images, start=1):
                self._sources.setdefault(y, []).append((x, degeneracy(k + 1, i)))
        for x, images in self._conns.items():
            k = self._dim[x]
            for slot, y in enumerate(images):
                gen = connection(k + 1, slot // 2 + 1, slot % 2)
                self._sources.setdefault(y, []).append((x, gen))
        self._signatures: Dict[int, Dict[Tuple[Cube, ...], List[Cube]]] = {}
        if verify:
            violations = self.check_identities()
            if violations:
                raise DomainError(f"{name or 'cubical set'} breaks {len(violations)} cubical identities, "
                                  f"first: {violations[0]}")

    # --- construction ---

    @classmethod
    def from_action(cls, max_dim: int, cubes: Mapping[int, Sequence[Cube]],
                    act: Callable[[Cube, Generator], Cube], name: str = "", verify: bool = True) -> "CubicalSet":
        """Tabulate act(x, gen) = x.gen for every generator that stays within max_dim."""
        faces, degens, conns = {}, {}, {}
        for k in range(max_dim + 1):
            for x in cubes.get(k, ()):
                faces[x] = tuple(act(x, face(k, i, e)) for i in range(1, k + 1) for e in (0, 1))
                if k < max_dim:
                    degens[x] = tuple(act(x, degeneracy(k + 1, i)) for i in range(1, k + 2))
                    conns[x] = tuple(act(x, connection(k + 1, i, e)) for i in range(1, k + 1) for e in (0, 1))
        return cls(max_dim, cubes, faces, degens, conns, name, verify)

    def _validate_tables(self):
        for x, k in self._dim.items():
            expected = {
                "faces": (self._faces.get(x, ()), 2 * k, k - 1),
                "degens": (self._degens.get(x, ()), k + 1 if k < self.max_dim else 0, k + 1),
                "conns": (self._conns.get(x, ()), 2 * k if k < self.max_dim else 0, k + 1),
            }
            for table, (images, count, target) in expected.items():
                if len(images) != count:
                    raise DomainError(f"{table} of {x!r} has {len(images)} entries, expected {count}")
                for y in images:
                    if self._dim.get(y) != target:
                        raise DomainError(f"{table} of {x!r} contains {y!r}, not a {target}-cube")

    # --- queries ---

    def cubes(self, k: int) -> Tuple[Cube, ...]:
        return self._cubes.get(k, ())

    cells = cubes

    def all_cubes(self) -> Iterator[Cube]:
        for k in range(self.max_dim + 1):
            yield from self._cubes[k]

    def dim(self, x: Cube) -> int:
        try:
            return self._dim[x]
        except KeyError:
            raise DomainError(f"{x!r} is not a cube of {self.name or 'this cubical set'}")

    def __contains__(self, x: Cube) -> bool:
        return x in self._dim

    def counts(self) -> List[int]:
        return [len(self._cubes[k]) for k in range(self.max_dim + 1)]

    def face(self, x: Cube, i: int, e: int) -> Cube:
        k = self.dim(x)
        if not 1 <= i <= k or e not in (0, 1):
            raise DomainError(f"face d({i},{e}) undefined on a {k}-cube")
        return self._faces[x][2 * (i - 1) + e]

    def degen(self, x: Cube, i: int) -> Cube:
        k = self.dim(x)
        if k >= self.max_dim:
            raise TruncationError(f"degeneracy of the {k}-cube {x!r}", k + 1)
        if not 1 <= i <= k + 1:
            raise DomainError(f"degeneracy s({i}) undefined on a {k}-cube")
        return self._degens[x][i - 1]

    def conn(self, x: Cube, i: int, e: int) -> Cube:
        k = self.dim(x)
        if k >= self.max_dim:
            raise TruncationError(f"connection of the {k}-cube {x!r}", k + 1)
        if not 1 <= i <= k or e not in (0, 1):
            raise DomainError(f"connection g({i},{e}) undefined on a {k}-cube")
        return self._conns[x][2 * (i - 1) + e]

    def act_generator(self, x: Cube, gen: Generator) -> Cube:
        """x.gen; x must live in the target dimension of gen."""
        if self.dim(x) != gen.dst:
            raise DomainError(f"{gen.notation()} does not act on the {self.dim(x)}-cube {x!r}")
        if gen.kind == "face":
            return self.face(x, gen.index, gen.eps)
        if gen.kind == "degeneracy":
            return self.degen(x, gen.index)
        return self.conn(x, gen.index, gen.eps)

    raise_cell = act_generator

    def act_word(self, x: Cube, word: Sequence[Generator]) -> Cube:
        """x.(g1 o ... o gr) = (...(x.g1)...).gr"""
        for gen in word:
            x = self.act_generator(x, gen)
        return x

    def act(self, x: Cube, f: BoxMorphism) -> Cube:
        """Action of an arbitrary box morphism through its canonical word."""
        if self.dim(x) != f.dst:
            raise DomainError(f"box morphism into [1]^{f.dst} cannot act on the {self.dim(x)}-cube {x!r}")
        if f.src > self.max_dim:
            raise TruncationError(f"action landing in dimension {f.src}", f.src)
        return self.act_word(x, f.word)

    def boundary_tuple(self, x: Cube) -> Tuple[Cube, ...]:
        return self._faces[x]

    def degenerate_sources(self, x: Cube) -> List[Tuple[Cube, Generator]]:
        return self._sources.get(x, [])

    def is_degenerate(self, x: Cube) -> bool:
        return x in self._sources

    def nondegenerate(self, k: int) -> Tuple[Cube, ...]:
        return tuple(x for x in self._cubes.get(k, ()) if x not in self._sources)

    def top_nondegenerate_dim(self) -> int:
        """Largest dimension holding a nondegenerate cube, -1 when empty."""
        for k in range(self.max_dim, -1, -1):
            if self.nondegenerate(k):
                return k
        return -1

    def by_boundary(self, k: int, boundary: Tuple[Cube, ...]) -> List[Cube]:
        """k-cubes with the given face tuple."""
        if k not in self._signatures:
            index: Dict[Tuple[Cube, ...], List[Cube]] = {}
            for y in self._cubes.get(k, ()):
                index.setdefault(self._faces[y], []).append(y)
            self._signatures[k] = index
        return self._signatures[k].get(boundary, [])

    def ez_decomposition(self, x: Cube) -> Tuple[Cube, BoxMorphism]:
        """x = z.e with z nondegenerate and e a composite of degeneracies and connections."""
        k = self.dim(x)
        sources = self._sources.get(x)
        if not sources:
            return x, identity(k)
        y, gen = sources[0]
        z, e = self.ez_decomposition(y)
        return z, from_word(e.word + (gen,), k)

    # --- derived sets ---

    def truncate(self, max_dim: int) -> "CubicalSet":
        if max_dim > self.max_dim:
            raise TruncationError(f"cannot raise the truncation of {self.name or 'a cubical set'}", max_dim)
        cubes = {k: self._cubes[k] for k in range(max_dim + 1)}
        keep = set(x for k in cubes for x in cubes[k])
        degens = {x: imgs for x, imgs in self._degens.items() if x in keep and self._dim[x] < max_dim}
        conns = {x: imgs for x, imgs in self._conns.items() if x in keep and self._dim[x] < max_dim}
        faces = {x: imgs for x, imgs in self._faces.items() if x in keep}
        return CubicalSet(max_dim, cubes, faces, degens, conns, self.name, verify=False)

    def restrict(self, keep: Callable[[Cube], bool], name: str = "") -> "CubicalSet":
        """Sub cubical set on the cubes satisfying keep; must be closed under all operators."""
        cubes = {k: tuple(x for x in self._cubes[k] if keep(x)) for k in range(self.max_dim + 1)}
        kept = set(x for layer in cubes.values() for x in layer)

        def pick(table):
            return {x: imgs for x, imgs in table.items() if x in kept}

        return CubicalSet(self.max_dim, cubes, pick(self._faces), pick(self._degens), pick(self._conns),
                          name or self.name, verify=False)

    def relabel(self, label: Callable[[Cube], Cube], name: str = "") -> "CubicalSet":
        cubes = {k: tuple(label(x) for x in layer) for k, layer in self._cubes.items()}

        def move(table):
            return {label(x): tuple(label(y) for y in imgs) for x, imgs in table.items()}

        return CubicalSet(self.max_dim, cubes, move(self._faces), move(self._degens), move(self._conns),
                          name or self.name, verify=False)

    def check_identities(self) -> List[str]:
        """Contravariant cubical identities on the action tables."""
        return check_action_identities(self.act_word, self.cubes, self.max_dim)

    def describe(self) -> str:
        nondeg = [len(self.nondegenerate(k)) for k in range(self.max_dim + 1)]
        return f"{self.name or 'cubical set'}: cubes {self.counts()}, nondegenerate {nondeg}"

    def __repr__(self) -> str:
        return f"CubicalSet({self.describe()})"


def discrete(points: Iterable[Hashable], max_dim: int, name: str = "") -> CubicalSet:
    """The cubical set with only degenerate cubes over a set of vertices; cubes are (point, k)."""
    points = list(points)
    cubes = {k: [(p, k) for p in points] for k in range(max_dim + 1)}

    def act(x, gen):
        return (x[0], gen.src)

    return CubicalSet.from_action(max_dim, cubes, act, name or "discrete")


def point(max_dim: int) -> CubicalSet:
    return discrete(["*"], max_dim, "point")


def empty(max_dim: int) -> CubicalSet:
    return CubicalSet(max_dim, {}, {}, {}, {}, "empty")
