"""
Morphisms of the cube category as monotone vertex tables.

A BoxMorphism is identified by its table: the images of the vertices of
[1]^src listed in itertools.product order. The canonical generator word is
derived from the table on demand.
"""

import itertools
import logging
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from cube.generators import (
    Generator, Point, connection, degeneracy, face, format_word, parse_word,
)
from models.errors import DomainError

logger = logging.getLogger(__name__)

VertexMap = Dict[Point, Point]


@lru_cache(maxsize=None)
def vertices(n: int) -> Tuple[Point, ...]:
    return tuple(itertools.product((0, 1), repeat=n))


def vertex_index(point: Point) -> int:
    index = 0
    for bit in point:
        index = (index << 1) | bit
    return index


def apply_word(word: Sequence[Generator], point: Point, top: int = 1) -> Point:
    """Apply a word (composition order) to a grid point."""
    for gen in reversed(word):
        point = gen.apply(point, top)
    return point


class NotInBox(NamedTuple):
    src: int
    dst: int
    reason: str


@dataclass(frozen=True)
class BoxMorphism:
    src: int
    dst: int
    table: Tuple[Point, ...]

    def __call__(self, point: Point) -> Point:
        return self.table[vertex_index(point)]

    @cached_property
    def word(self) -> Tuple[Generator, ...]:
        word = _structural_word(self.table, self.src, self.dst)
        if word is None:
            raise DomainError(f"table {self.table} is not a morphism of the cube category")
        return word

    @property
    def is_identity(self) -> bool:
        return self.src == self.dst and self.table == vertices(self.src)

    def grid_apply(self, point: Point, top: int) -> Point:
        """Action on I_top-grids: faces insert 0 or top, connections take max/min."""
        return apply_word(self.word, point, top)

    def __str__(self) -> str:
        return format_word(self.word)


def identity(n: int) -> BoxMorphism:
    if n < 0:
        raise DomainError(f"cube dimension must be >= 0, got {n}")
    return BoxMorphism(n, n, vertices(n))


def from_generator(gen: Generator) -> BoxMorphism:
    return BoxMorphism(gen.src, gen.dst, tuple(gen.apply(v) for v in vertices(gen.src)))


def from_word(word: Sequence[Generator], src: Optional[int] = None) -> BoxMorphism:
    """The composite of a word given in composition order (rightmost applied first)."""
    if not word:
        if src is None:
            raise DomainError("the empty word needs an explicit source dimension")
        return identity(src)
    for later, earlier in zip(word, word[1:]):
        if earlier.dst != later.src:
            raise DomainError(f"{later.notation()} cannot follow {earlier.notation()}")
    first = word[-1].src
    if src is not None and src != first:
        raise DomainError(f"word starts at dimension {first}, not {src}")
    return BoxMorphism(first, word[0].dst, tuple(apply_word(word, v) for v in vertices(first)))


def compose(g: BoxMorphism, f: BoxMorphism) -> BoxMorphism:
    """g after f."""
    if f.dst != g.src:
        raise DomainError(f"cannot compose [1]^{f.src}->[1]^{f.dst} with [1]^{g.src}->[1]^{g.dst}")
    return BoxMorphism(f.src, g.dst, tuple(g.table[vertex_index(p)] for p in f.table))


def compose_all(*morphisms: BoxMorphism) -> BoxMorphism:
    """compose_all(h, g, f) = h after g after f."""
    result = morphisms[-1]
    for g in reversed(morphisms[:-1]):
        result = compose(g, result)
    return result


def product(f: BoxMorphism, g: BoxMorphism) -> BoxMorphism:
    """f x g : [1]^(m+m') -> [1]^(n+n')."""
    return BoxMorphism(f.src + g.src, f.dst + g.dst, tuple(a + b for a in f.table for b in g.table))


def underlying_function(f: BoxMorphism) -> VertexMap:
    return dict(zip(vertices(f.src), f.table))


def split_epi_mono(f: BoxMorphism) -> Tuple[BoxMorphism, BoxMorphism]:
    """Factor f = mono o epi with mono a composite of faces and epi a composite of degeneracies and connections."""
    word = f.word
    cut = 0
    while cut < len(word) and word[cut].kind == "face":
        cut += 1
    epi = from_word(word[cut:], f.src)
    mono = from_word(word[:cut], epi.dst)
    return mono, epi


def is_epi(f: BoxMorphism) -> bool:
    return all(gen.kind != "face" for gen in f.word)


# --- structural membership test ---

_LEAF = "x"


def _read_once(arity: int, fn: Mapping[Point, int]):
    """Decompose fn as a tree of binary max/min over its variables in order, each used once."""
    if arity == 1:
        return _LEAF if fn[(0,)] == 0 and fn[(1,)] == 1 else None
    for eps, op, neutral in ((0, max, 0), (1, min, 1)):
        for t in range(1, arity):
            left = {a: fn[a + (neutral,) * (arity - t)] for a in vertices(t)}
            right = {b: fn[(neutral,) * t + b] for b in vertices(arity - t)}
            if any(fn[a + b] != op(left[a], right[b]) for a in left for b in right):
                continue
            left_tree = _read_once(t, left)
            right_tree = _read_once(arity - t, right)
            if left_tree is not None and right_tree is not None:
                return (eps, left_tree, right_tree)
    return None


def _realize_tree(tree, position: int, ambient: int, out: List[Generator]) -> int:
    if tree == _LEAF:
        return ambient
    eps, left, right = tree
    ambient = _realize_tree(left, position, ambient, out)
    ambient = _realize_tree(right, position + 1, ambient, out)
    out.append(connection(ambient, position, eps))
    return ambient - 1


def _support(column: Tuple[int, ...], src: int) -> List[int]:
    support = []
    for i in range(src):
        bit = 1 << (src - 1 - i)
        if any(column[k] != column[k | bit] for k in range(len(column)) if not k & bit):
            support.append(i)
    return support


def _structural_word(table: Tuple[Point, ...], src: int, dst: int) -> Optional[Tuple[Generator, ...]]:
    """
    Canonical word of a monotone table, or None when the table is not in the cube category.

    Application order: degeneracies (descending), connections block by block, faces (ascending).
    """
    constants: Dict[int, int] = {}
    blocks = []
    for j in range(dst):
        column = tuple(out[j] for out in table)
        if len(set(column)) == 1:
            constants[j] = column[0]
            continue
        blocks.append((_support(column, src), column))

    used = [i for support, _ in blocks for i in support]
    if any(b <= a for a, b in zip(used, used[1:])):
        return None

    application: List[Generator] = []
    ambient = src
    for i in sorted(set(range(src)) - set(used), reverse=True):
        application.append(degeneracy(ambient, i + 1))
        ambient -= 1

    for position, (support, column) in enumerate(blocks, start=1):
        fn = {}
        for bits in vertices(len(support)):
            k = sum(1 << (src - 1 - i) for i, b in zip(support, bits) if b)
            fn[bits] = column[k]
        tree = _read_once(len(support), fn)
        if tree is None:
            return None
        ambient = _realize_tree(tree, position, ambient, application)

    for j in sorted(constants):
        application.append(face(ambient + 1, j + 1, constants[j]))
        ambient += 1
    return tuple(reversed(application))


def _check_monotone(table: Tuple[Point, ...], src: int, dst: int):
    if len(table) != 2 ** src:
        raise DomainError(f"expected {2 ** src} vertex images, got {len(table)}")
    for out in table:
        if len(out) != dst or any(c not in (0, 1) for c in out):
            raise DomainError(f"vertex image {out} is not a vertex of [1]^{dst}")
    for k, out in enumerate(table):
        for i in range(src):
            bit = 1 << (src - 1 - i)
            if not k & bit and any(a > b for a, b in zip(out, table[k | bit])):
                raise DomainError(f"map is not monotone at {vertices(src)[k]} along coordinate {i + 1}")


MapInput = Union[BoxMorphism, Sequence[Generator], Mapping[Point, Point], Callable[[Point], Point]]


def normal_form(f: MapInput, src: Optional[int] = None, dst: Optional[int] = None) -> Union[BoxMorphism, NotInBox]:
    """
    Canonical BoxMorphism of a vertex map or generator word, or NotInBox.

    Vertex maps may be given as a mapping or a callable; then src (and for
    callables dst) must be known.
    """
    if isinstance(f, BoxMorphism):
        return f
    if isinstance(f, str):
        if src is None:
            raise DomainError("parsing a word needs its source dimension")
        return from_word(parse_word(f, src), src)
    if isinstance(f, (list, tuple)) and all(isinstance(g, Generator) for g in f):
        return from_word(f, src)
    if isinstance(f, Mapping):
        if src is None:
            src = len(next(iter(f))) if f else 0
        try:
            table = tuple(tuple(f[v]) for v in vertices(src))
        except KeyError as exc:
            raise DomainError(f"vertex map is missing {exc.args[0]}")
    elif callable(f):
        if src is None:
            raise DomainError("a callable vertex map needs its source dimension")
        table = tuple(tuple(f(v)) for v in vertices(src))
    else:
        raise DomainError(f"cannot read a box morphism from {type(f).__name__}")
    if dst is None:
        dst = len(table[0]) if table else 0
    _check_monotone(table, src, dst)
    word = _structural_word(table, src, dst)
    if word is None:
        return NotInBox(src, dst, "no word of faces, degeneracies and connections realizes the map")
    morphism = BoxMorphism(src, dst, table)
    morphism.__dict__["word"] = word
    return morphism


def search_word(table: Tuple[Point, ...], src: int, dst: int, max_length: Optional[int] = None) -> Optional[Tuple[Generator, ...]]:
    """
    Shortest generator word realizing a table, by breadth-first search.

    Intermediate dimensions stay below max(src, dst) + 1. Kept as an
    independent cross-check of the structural test.
    """
    if max_length is None:
        max_length = src + dst + 2
    cap = max(src, dst) + 1
    start = (src, vertices(src))
    seen = {start: ()}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        dim, current = state
        word = seen[state]
        if dim == dst and current == table:
            return word
        if len(word) == max_length:
            continue
        candidates = [face(dim + 1, i, e) for i in range(1, dim + 2) for e in (0, 1)] if dim + 1 <= cap else []
        candidates += [degeneracy(dim, i) for i in range(1, dim + 1)]
        candidates += [connection(dim, i, e) for i in range(1, dim) for e in (0, 1)]
        for gen in candidates:
            nxt = (gen.dst, tuple(gen.apply(p) for p in current))
            if nxt not in seen:
                seen[nxt] = (gen,) + word
                queue.append(nxt)
    return None


# --- enumeration ---

@lru_cache(maxsize=None)
def read_once_tables(arity: int) -> Tuple[Tuple[int, ...], ...]:
    """All functions {0,1}^arity -> {0,1} built from the variables in order by binary max/min."""
    if arity == 1:
        return ((0, 1),)
    found = set()
    for t in range(1, arity):
        for left in read_once_tables(t):
            for right in read_once_tables(arity - t):
                for op in (max, min):
                    found.add(tuple(op(left[vertex_index(v[:t])], right[vertex_index(v[t:])])
                                    for v in vertices(arity)))
    return tuple(sorted(found))


def _block_labelings(m: int, k: int) -> Iterable[Tuple[int, ...]]:
    for labels in itertools.product(range(k + 1), repeat=m):
        used = [label for label in labels if label]
        if used == sorted(used) and set(used) == set(range(1, k + 1)):
            yield labels


def enumerate_box_morphisms(m: int, n: int) -> List[BoxMorphism]:
    """Every morphism [1]^m -> [1]^n, sorted by table."""
    tables = set()
    for k in range(min(m, n) + 1):
        for positions in itertools.combinations(range(n), k):
            constant_slots = [j for j in range(n) if j not in positions]
            for labels in _block_labelings(m, k):
                blocks = [[i for i in range(m) if labels[i] == b] for b in range(1, k + 1)]
                for fns in itertools.product(*(read_once_tables(len(block)) for block in blocks)):
                    for values in itertools.product((0, 1), repeat=n - k):
                        table = []
                        for v in vertices(m):
                            out = [0] * n
                            for slot, value in zip(constant_slots, values):
                                out[slot] = value
                            for slot, block, fn in zip(positions, blocks, fns):
                                out[slot] = fn[vertex_index(tuple(v[i] for i in block))]
                            table.append(tuple(out))
                        tables.add(tuple(table))
    logger.debug("enumerated %d box morphisms [1]^%d -> [1]^%d", len(tables), m, n)
    return [BoxMorphism(m, n, table) for table in sorted(tables)]


# --- textual vertex maps ---

_NAMED = re.compile(r"^(max|min|id|proj)(\d+)(?:_(\d+))?$")


def parse_vertex_map(text: str) -> Tuple[Tuple[Point, ...], int, int]:
    """
    Read a vertex map: ``max2``, ``min3``, ``id2``, ``proj2_1`` (keep coordinate 1)
    or an explicit table ``00:0,01:1,10:1,11:1``.
    """
    text = text.strip()
    match = _NAMED.match(text)
    if match:
        name, n = match.group(1), int(match.group(2))
        if name in ("max", "min"):
            op = max if name == "max" else min
            return tuple((op(v),) if v else (1 - (name == "max"),) for v in vertices(n)), n, 1
        if name == "id":
            return vertices(n), n, n
        keep = int(match.group(3) or 1)
        if not 1 <= keep <= n:
            raise DomainError(f"projection index {keep} out of range for dimension {n}")
        return tuple((v[keep - 1],) for v in vertices(n)), n, 1
    images = {}
    for entry in text.split(","):
        if ":" not in entry:
            raise DomainError(f"cannot read vertex map entry {entry!r}")
        key, value = (part.strip() for part in entry.split(":", 1))
        images[tuple(int(c) for c in key)] = tuple(int(c) for c in value)
    if not images:
        raise DomainError("empty vertex map")
    src = len(next(iter(images)))
    dst = len(next(iter(images.values())))
    try:
        table = tuple(images[v] for v in vertices(src))
    except KeyError as exc:
        raise DomainError(f"vertex map is missing {exc.args[0]}")
    return table, src, dst
