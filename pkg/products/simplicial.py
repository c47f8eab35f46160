"""
Finite, dimension-truncated simplicial sets.

Same container protocol as CubicalSet (cells, boundary_tuple,
degenerate_sources, raise_cell, by_boundary) so that map enumeration,
path components and homology accept either.
"""

import itertools
import logging
from typing import Callable, Dict, Hashable, Iterator, List, Mapping, Sequence, Tuple

from csets.maps import PresheafMap
from models.errors import DomainError, TruncationError
from models.json_types import SimplicialSetDTO

logger = logging.getLogger(__name__)

Simplex = Hashable
Chain = Tuple[Tuple[int, ...], ...]


class SimplicialSet:
    def __init__(self, max_dim: int, simplices: Mapping[int, Sequence[Simplex]],
                 faces: Mapping[Simplex, Tuple[Simplex, ...]],
                 degens: Mapping[Simplex, Tuple[Simplex, ...]], name: str = ""):
        self.max_dim = max_dim
        self.name = name
        self._cells = {k: tuple(simplices.get(k, ())) for k in range(max_dim + 1)}
        self._dim: Dict[Simplex, int] = {}
        for k, layer in self._cells.items():
            for x in layer:
                if x in self._dim:
                    raise DomainError(f"simplex {x!r} appears in dimensions {self._dim[x]} and {k}")
                self._dim[x] = k
        self._faces = dict(faces)
        self._degens = dict(degens)
        for x, k in self._dim.items():
            if len(self._faces.get(x, ())) != (k + 1 if k else 0):
                raise DomainError(f"simplex {x!r} needs {k + 1 if k else 0} faces")
            if len(self._degens.get(x, ())) != (k + 1 if k < max_dim else 0):
                raise DomainError(f"simplex {x!r} has a wrong number of degeneracies")
        self._sources: Dict[Simplex, List[Tuple[Simplex, int]]] = {}
        for x, images in self._degens.items():
            for j, y in enumerate(images):
                self._sources.setdefault(y, []).append((x, j))
        self._signatures: Dict[int, Dict[tuple, List[Simplex]]] = {}

    @classmethod
    def from_action(cls, max_dim: int, simplices: Mapping[int, Sequence[Simplex]],
                    face_fn: Callable[[Simplex, int], Simplex],
                    degen_fn: Callable[[Simplex, int], Simplex], name: str = "") -> "SimplicialSet":
        faces, degens = {}, {}
        for k in range(max_dim + 1):
            for x in simplices.get(k, ()):
                faces[x] = tuple(face_fn(x, i) for i in range(k + 1)) if k else ()
                if k < max_dim:
                    degens[x] = tuple(degen_fn(x, j) for j in range(k + 1))
        return cls(max_dim, simplices, faces, degens, name)

    # --- protocol ---

    def cells(self, k: int) -> Tuple[Simplex, ...]:
        return self._cells.get(k, ())

    simplices = cells

    def dim(self, x: Simplex) -> int:
        try:
            return self._dim[x]
        except KeyError:
            raise DomainError(f"{x!r} is not a simplex of {self.name or 'this simplicial set'}")

    def __contains__(self, x: Simplex) -> bool:
        return x in self._dim

    def counts(self) -> List[int]:
        return [len(self._cells[k]) for k in range(self.max_dim + 1)]

    def face(self, x: Simplex, i: int) -> Simplex:
        k = self.dim(x)
        if not 0 <= i <= k or k == 0:
            raise DomainError(f"face d{i} undefined on a {k}-simplex")
        return self._faces[x][i]

    def degen(self, x: Simplex, j: int) -> Simplex:
        k = self.dim(x)
        if k >= self.max_dim:
            raise TruncationError(f"degeneracy of the {k}-simplex {x!r}", k + 1)
        if not 0 <= j <= k:
            raise DomainError(f"degeneracy s{j} undefined on a {k}-simplex")
        return self._degens[x][j]

    raise_cell = degen

    def boundary_tuple(self, x: Simplex) -> Tuple[Simplex, ...]:
        return self._faces[x]

    def degenerate_sources(self, x: Simplex) -> List[Tuple[Simplex, int]]:
        return self._sources.get(x, [])

    def is_degenerate(self, x: Simplex) -> bool:
        return x in self._sources

    def nondegenerate(self, k: int) -> Tuple[Simplex, ...]:
        return tuple(x for x in self._cells.get(k, ()) if x not in self._sources)

    def by_boundary(self, k: int, boundary: tuple) -> List[Simplex]:
        if k not in self._signatures:
            index: Dict[tuple, List[Simplex]] = {}
            for y in self._cells.get(k, ()):
                index.setdefault(self._faces[y], []).append(y)
            self._signatures[k] = index
        return self._signatures[k].get(boundary, [])

    def vertices_of(self, x: Simplex) -> Tuple[Simplex, ...]:
        """Ordered vertices v_0..v_k of a simplex."""
        k = self.dim(x)
        if k == 0:
            return (x,)
        result = []
        for v in range(k + 1):
            y = x
            # drop every vertex but v
            for i in range(k, v, -1):
                y = self.face(y, i)
            for _ in range(v):
                y = self.face(y, 0)
            result.append(y)
        return tuple(result)

    def act_monotone(self, x: Simplex, theta: Sequence[int]) -> Simplex:
        """x . theta for a monotone theta : [m] -> [k] given by its values."""
        k = self.dim(x)
        if any(b < a for a, b in zip(theta, theta[1:])) or any(not 0 <= t <= k for t in theta):
            raise DomainError(f"{tuple(theta)} is not a monotone map into [{k}]")
        image = sorted(set(theta))
        for v in range(k, -1, -1):
            if v not in image:
                x = self.face(x, v)
        for v in range(len(theta) - 1):
            if theta[v] == theta[v + 1]:
                x = self.degen(x, v)
        return x

    def ez_decomposition(self, x: Simplex) -> Tuple[Simplex, Tuple[int, ...]]:
        """x = z . theta with z nondegenerate and theta : [k] -> [p] a monotone surjection."""
        k = self.dim(x)
        sources = self._sources.get(x)
        if not sources:
            return x, tuple(range(k + 1))
        y, j = sources[0]
        z, inner = self.ez_decomposition(y)
        return z, tuple(inner[v if v <= j else v - 1] for v in range(k + 1))

    def truncate(self, max_dim: int) -> "SimplicialSet":
        if max_dim > self.max_dim:
            raise TruncationError("cannot raise the truncation of a simplicial set", max_dim)
        simplices = {k: self._cells[k] for k in range(max_dim + 1)}
        keep = {x for layer in simplices.values() for x in layer}
        faces = {x: f for x, f in self._faces.items() if x in keep}
        degens = {x: d for x, d in self._degens.items() if x in keep and self._dim[x] < max_dim}
        return SimplicialSet(max_dim, simplices, faces, degens, self.name)

    def check_identities(self) -> List[str]:
        """The simplicial identities on the action tables."""
        violations = []
        d, s = self.face, self.degen
        for k in range(self.max_dim + 1):
            for x in self._cells[k]:
                if k >= 2:
                    for i, j in itertools.combinations(range(k + 1), 2):
                        if d(d(x, j), i) != d(d(x, i), j - 1):
                            violations.append(f"d{i}d{j} at {x!r}")
                if k < self.max_dim:
                    for j in range(k + 1):
                        y = s(x, j)
                        for i in range(k + 2):
                            if i < j:
                                expected = s(d(x, i), j - 1) if k >= 1 else None
                            elif i in (j, j + 1):
                                expected = x
                            else:
                                expected = s(d(x, i - 1), j) if k >= 1 else None
                            if expected is not None and d(y, i) != expected:
                                violations.append(f"d{i}s{j} at {x!r}")
                    if k + 1 < self.max_dim:
                        for i in range(k + 1):
                            for j in range(i, k + 1):
                                if s(s(x, j), i) != s(s(x, i), j + 1):
                                    violations.append(f"s{i}s{j} at {x!r}")
        return violations

    def describe(self) -> str:
        nondeg = [len(self.nondegenerate(k)) for k in range(self.max_dim + 1)]
        return f"{self.name or 'simplicial set'}: simplices {self.counts()}, nondegenerate {nondeg}"

    def __repr__(self) -> str:
        return f"SimplicialSet({self.describe()})"


class SimplicialMap(PresheafMap):
    """Map of simplicial sets."""


# --- standard examples ---

def monotone_chains(poset_points: Sequence[tuple], k: int, leq: Callable[[tuple, tuple], bool]) -> Iterator[tuple]:
    """Weakly increasing sequences of length k + 1."""
    def extend(chain):
        if len(chain) == k + 1:
            yield tuple(chain)
            return
        for p in poset_points:
            if not chain or leq(chain[-1], p):
                yield from extend(chain + [p])
    yield from extend([])


def _leq(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def chain_face(chain: tuple, i: int) -> tuple:
    return chain[:i] + chain[i + 1:]


def chain_degen(chain: tuple, j: int) -> tuple:
    return chain[:j + 1] + chain[j:]


def nerve_of_poset(points: Sequence[tuple], max_dim: int, name: str = "") -> SimplicialSet:
    """Simplices are weakly increasing chains; keys are the chains themselves."""
    simplices = {k: list(monotone_chains(points, k, _leq)) for k in range(max_dim + 1)}
    return SimplicialSet.from_action(max_dim, simplices, chain_face, chain_degen, name)


def simplicial_cube(n: int, max_dim: int) -> SimplicialSet:
    """(Delta^1)^n: chains in the poset {0,1}^n."""
    return nerve_of_poset(list(itertools.product((0, 1), repeat=n)), max_dim, f"(Delta1)^{n}")


def standard_simplex(n: int, max_dim: int) -> SimplicialSet:
    """Delta^n with k-simplices the monotone maps [k] -> [n], keyed by their vertex tuples."""
    simplices = {k: list(monotone_chains(range(n + 1), k, lambda a, b: a <= b)) for k in range(max_dim + 1)}
    return SimplicialSet.from_action(max_dim, simplices, chain_face, chain_degen, f"Delta{n}")


def simplicial_product(X: SimplicialSet, Y: SimplicialSet) -> SimplicialSet:
    d = min(X.max_dim, Y.max_dim)
    simplices = {k: [(a, b) for a in X.cells(k) for b in Y.cells(k)] for k in range(d + 1)}
    return SimplicialSet.from_action(
        d, simplices,
        lambda x, i: (X.face(x[0], i), Y.face(x[1], i)),
        lambda x, j: (X.degen(x[0], j), Y.degen(x[1], j)),
        f"{X.name} x {Y.name}",
    )


def simplicial_from_json(payload: dict, name: str = "") -> SimplicialSet:
    try:
        max_dim = int(payload["max_dim"])
        simplices = {int(k): [str(x) for x in layer] for k, layer in payload["simplices"].items()}
        face_tables = {int(key[2:-1]): table for key, table in payload.get("faces", {}).items()}
        degen_tables = {int(key[2:-1]): table for key, table in payload.get("degens", {}).items()}
        dims = {x: k for k, layer in simplices.items() for x in layer}
        faces = {x: tuple(face_tables[i][x] for i in range(k + 1)) if k else () for x, k in dims.items()}
        degens = {x: tuple(degen_tables[j][x] for j in range(k + 1)) for x, k in dims.items() if k < max_dim}
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed simplicial set payload: {exc}")
    return SimplicialSet(max_dim, simplices, faces, degens, name)


def simplicial_to_json(X: SimplicialSet) -> SimplicialSetDTO:
    labels = {}
    for k in range(X.max_dim + 1):
        for n, x in enumerate(X.cells(k)):
            labels[x] = x if isinstance(x, str) else f"s{k}_{n}"
    faces: Dict[str, Dict[str, str]] = {}
    degens: Dict[str, Dict[str, str]] = {}
    for k in range(X.max_dim + 1):
        for x in X.cells(k):
            if k:
                for i in range(k + 1):
                    faces.setdefault(f"d({i})", {})[labels[x]] = labels[X.face(x, i)]
            if k < X.max_dim:
                for j in range(k + 1):
                    degens.setdefault(f"s({j})", {})[labels[x]] = labels[X.degen(x, j)]
    return {
        "max_dim": X.max_dim,
        "simplices": {str(k): [labels[x] for x in X.cells(k)] for k in range(X.max_dim + 1)},
        "faces": faces,
        "degens": degens,
    }
