"""
Maps of finite presheaves and their exhaustive enumeration.

Works for any container exposing max_dim, cells(k), boundary_tuple(x),
degenerate_sources(x), raise_cell(y, op), is_degenerate(x) and
by_boundary(k, faces): both CubicalSet and SimplicialSet do.
"""

import logging
from typing import Dict, Hashable, Iterator, List, Optional, Set

from models.errors import DomainError
from utils.cell_budget import CellBudget, default_budget

logger = logging.getLogger(__name__)


class PresheafMap:
    """Cellwise map src -> dst, defined up to the common truncation."""

    def __init__(self, src, dst, mapping: Dict[Hashable, Hashable], name: str = ""):
        self.src = src
        self.dst = dst
        self.mapping = mapping
        self.name = name

    @property
    def max_dim(self) -> int:
        return min(self.src.max_dim, self.dst.max_dim)

    def __call__(self, x: Hashable) -> Hashable:
        try:
            return self.mapping[x]
        except KeyError:
            raise DomainError(f"{x!r} is outside the domain of {self.name or 'this map'}")

    def __eq__(self, other) -> bool:
        return isinstance(other, PresheafMap) and self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash(frozenset(self.mapping.items()))

    def key(self) -> tuple:
        """Hashable image tuple in the source's cell order."""
        return tuple(self.mapping[x] for k in range(self.max_dim + 1) for x in self.src.cells(k))

    def naturality_violations(self) -> List[str]:
        violations = []
        for k in range(self.max_dim + 1):
            for x in self.src.cells(k):
                image = self.mapping.get(x)
                if image is None or image not in self.dst:
                    violations.append(f"{x!r} has no image")
                    continue
                mapped = tuple(self.mapping[y] for y in self.src.boundary_tuple(x))
                if mapped != self.dst.boundary_tuple(image):
                    violations.append(f"faces of {x!r} do not commute")
                for y, op in self.src.degenerate_sources(x):
                    if self.dst.raise_cell(self.mapping[y], op) != image:
                        violations.append(f"{x!r} = {y!r}.{op} is not preserved")
        return violations

    def is_natural(self) -> bool:
        return not self.naturality_violations()

    def then(self, other: "PresheafMap") -> "PresheafMap":
        """other after self."""
        mapping = {x: other.mapping[y] for x, y in self.mapping.items() if y in other.mapping}
        return type(self)(self.src, other.dst, mapping)

    def is_bijective(self) -> bool:
        for k in range(self.max_dim + 1):
            images = {self.mapping[x] for x in self.src.cells(k)}
            if len(images) != len(self.src.cells(k)) or len(images) != len(self.dst.cells(k)):
                return False
        return True


class CubicalMap(PresheafMap):
    """Map of cubical sets."""


def identity_map(X, cls=CubicalMap) -> PresheafMap:
    return cls(X, X, {x: x for k in range(X.max_dim + 1) for x in X.cells(k)}, "id")


def iter_maps(X, Y, budget: Optional[CellBudget] = None, injective: bool = False,
              fixed: Optional[Dict[Hashable, Hashable]] = None, cls=CubicalMap) -> Iterator[PresheafMap]:
    """
    All maps X -> Y up to the common truncation, in a deterministic order.

    Nondegenerate cells are chosen by backtracking among cells with matching
    faces; degenerate cells are forced by naturality. ``fixed`` pins images.
    """
    d = min(X.max_dim, Y.max_dim)
    budget = budget or default_budget("map enumeration")
    fixed = fixed or {}
    steps = []
    for k in range(d + 1):
        degenerate = [x for x in X.cells(k) if X.is_degenerate(x)]
        if degenerate:
            steps.append(("degenerate", k, degenerate))
        for x in X.cells(k):
            if not X.is_degenerate(x):
                steps.append(("choose", k, x))

    assignment: Dict[Hashable, Hashable] = {}
    used: Set[Hashable] = set()

    def faces_agree(x, image) -> bool:
        return tuple(assignment[y] for y in X.boundary_tuple(x)) == Y.boundary_tuple(image)

    def forced(x):
        image = None
        for y, op in X.degenerate_sources(x):
            candidate = Y.raise_cell(assignment[y], op)
            if image is None:
                image = candidate
            elif candidate != image:
                return None
        if image is None or not faces_agree(x, image):
            return None
        if x in fixed and fixed[x] != image:
            return None
        return image

    def candidates(k, x):
        if x in fixed:
            pinned = fixed[x]
            return [pinned] if pinned in Y and Y.dim(pinned) == k and (k == 0 or faces_agree(x, pinned)) else []
        if k == 0:
            return list(Y.cells(0))
        return Y.by_boundary(k, tuple(assignment[y] for y in X.boundary_tuple(x)))

    def extend(position: int) -> Iterator[PresheafMap]:
        if position == len(steps):
            budget.charge()
            yield cls(X, Y, dict(assignment))
            return
        kind, k, payload = steps[position]
        if kind == "degenerate":
            added = []
            ok = True
            for x in payload:
                image = forced(x)
                if image is None or (injective and image in used):
                    ok = False
                    break
                assignment[x] = image
                added.append(x)
                if injective:
                    used.add(image)
            if ok:
                yield from extend(position + 1)
            for x in added:
                if injective:
                    used.discard(assignment[x])
                del assignment[x]
            return
        x = payload
        for image in candidates(k, x):
            if injective and image in used:
                continue
            assignment[x] = image
            if injective:
                used.add(image)
            yield from extend(position + 1)
            if injective:
                used.discard(image)
            del assignment[x]

    yield from extend(0)


def enumerate_maps(X, Y, budget: Optional[CellBudget] = None, cls=CubicalMap) -> List[PresheafMap]:
    maps = list(iter_maps(X, Y, budget, cls=cls))
    logger.debug("%d maps %s -> %s", len(maps), getattr(X, "name", "?"), getattr(Y, "name", "?"))
    return maps


def find_isomorphism(X, Y, budget: Optional[CellBudget] = None, cls=CubicalMap) -> Optional[PresheafMap]:
    """A bijective map X -> Y within the common truncation, or None."""
    if X.max_dim != Y.max_dim:
        return None
    if any(len(X.cells(k)) != len(Y.cells(k)) for k in range(X.max_dim + 1)):
        return None
    for candidate in iter_maps(X, Y, budget, injective=True, cls=cls):
        return candidate
    return None
