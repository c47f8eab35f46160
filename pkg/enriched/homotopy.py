"""
The homotopy category of a cubical category and homotopy equivalences in it.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

import networkx as nx

from csets.components import Components
from enriched.category import CubicalCategory
from enriched.finite_category import FiniteCategory
from models.errors import TruncationError
from models.verdicts import Decision

logger = logging.getLogger(__name__)

Obj = Hashable
Cube = Hashable


@dataclass
class HomotopyCategory(FiniteCategory):
    """ho(C); a morphism is the first 0-cube of its component."""
    components: Dict[Tuple[Obj, Obj], Components] = field(default_factory=dict)

    def class_of(self, a: Obj, b: Obj, x: Cube) -> Cube:
        comps = self.components[(a, b)]
        return comps.blocks[comps.assignment[x]][0]


def ho(C: CubicalCategory, objects: Optional[Sequence[Obj]] = None,
       custom_logger: Optional[logging.Logger] = None) -> HomotopyCategory:
    """
    Hom-sets are pi0 of the mapping spaces. Composition is checked on every
    pair of representatives; disagreement means the truncation is too low.
    """
    log = custom_logger or logger
    objects = tuple(C.objects if objects is None else objects)
    components = {(a, b): C.components(a, b) for a in objects for b in objects}
    homs = {pair: tuple(block[0] for block in comps.blocks) for pair, comps in components.items()}
    composition = {}
    for a, b, c in itertools.product(objects, repeat=3):
        table = {}
        target = components[(a, c)]
        for f_block in components[(a, b)].blocks:
            for g_block in components[(b, c)].blocks:
                classes = {target.assignment[C.compose(a, b, c, g, f)] for g in g_block for f in f_block}
                if len(classes) != 1:
                    raise TruncationError(f"composition on pi0 of {C.name} is ill-defined at {a!r}->{b!r}->{c!r}",
                                          C.max_dim + 1)
                table[(g_block[0], f_block[0])] = target.blocks[classes.pop()][0]
        composition[(a, b, c)] = table
    identities = {a: components[(a, a)].blocks[components[(a, a)].assignment[C.identity(a)]][0] for a in objects}
    result = HomotopyCategory(objects, homs, composition, identities, f"ho({C.name})", components)
    log.debug("ho(%s): %d morphisms", C.name, result.size())
    return result


def zigzag_path(C: CubicalCategory, a: Obj, b: Obj, start: Cube, end: Cube, bound: int,
                skeleton: Optional[nx.Graph] = None) -> Optional[List[Cube]]:
    """0-cubes start = x0, ..., xn = end joined by 1-cubes, n <= bound."""
    if start == end:
        return [start]
    graph = skeleton if skeleton is not None else C.skeleton(a, b)
    try:
        path = nx.shortest_path(graph, start, end)
    except (nx.NetworkXNoPath, nx.NodeNotFound):
        return None
    return path if len(path) - 1 <= bound else None


def verify_zigzag(C: CubicalCategory, a: Obj, b: Obj, path: Sequence[Cube]) -> bool:
    return all(C.one_cube_between(a, b, x, y) is not None for x, y in zip(path, path[1:]))


@dataclass(frozen=True)
class EquivalenceHint:
    """A candidate inverse g with zig-zags id_a ~ g.f and id_b ~ f.g."""
    inverse: Cube
    back: Tuple[Cube, ...]
    forth: Tuple[Cube, ...]


def check_hint(C: CubicalCategory, a: Obj, b: Obj, f: Cube, hint: EquivalenceHint) -> bool:
    g = hint.inverse
    if not C.contains(b, a, g):
        return False
    back, forth = list(hint.back), list(hint.forth)
    if not back or back[0] != C.identity(a) or back[-1] != C.compose(a, b, a, g, f):
        return False
    if not forth or forth[0] != C.identity(b) or forth[-1] != C.compose(b, a, b, f, g):
        return False
    return verify_zigzag(C, a, a, back) and verify_zigzag(C, b, b, forth)


def is_homotopy_equivalence_enriched(C: CubicalCategory, a: Obj, b: Obj, f: Cube, bound: int,
                                     hints: Sequence[EquivalenceHint] = (),
                                     custom_logger: Optional[logging.Logger] = None) -> Decision:
    """
    Yes with an inverse and zig-zags; No when [f] has no inverse in ho(C) on
    {a, b}; Unknown when an inverse class exists but no zig-zag fits the bound.
    """
    log = custom_logger or logger
    for hint in hints:
        if check_hint(C, a, b, f, hint):
            log.info("%r is a homotopy equivalence in %s (hint)", f, C.name)
            return Decision("yes", witness=hint.inverse,
                            certificate={"back": list(hint.back), "forth": list(hint.forth)})
    objects = (a,) if a == b else (a, b)
    H = ho(C, objects)
    inverse_class = H.inverse(a, b, H.class_of(a, b, f))
    if inverse_class is None:
        log.info("%r is not invertible in %s", f, H.name)
        return Decision("no", certificate={"ho": {f"{x!r}->{y!r}": len(H.hom(x, y)) for x in objects for y in objects}},
                        reason=f"[f] has no inverse in {H.name}")
    back_graph, forth_graph = C.skeleton(a, a), C.skeleton(b, b)
    comps = H.components[(b, a)]
    for g in comps.blocks[comps.assignment[inverse_class]]:
        back = zigzag_path(C, a, a, C.identity(a), C.compose(a, b, a, g, f), bound, back_graph)
        forth = zigzag_path(C, b, b, C.identity(b), C.compose(b, a, b, f, g), bound, forth_graph)
        if back is not None and forth is not None:
            log.info("%r is a homotopy equivalence in %s", f, C.name)
            return Decision("yes", witness=g, certificate={"back": back, "forth": forth})
    return Decision("unknown", reason=f"[f] is invertible in {H.name} but no zig-zag of length <= {bound} was found")
