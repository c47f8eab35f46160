"""
Finite reflexive graphs.

Reflexivity is implicit: edges holds only pairs of distinct vertices and
every vertex counts as adjacent to itself.
"""

import itertools
import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from models.errors import DomainError
from models.json_types import GraphDTO

Vertex = Hashable


@dataclass(frozen=True)
class Graph:
    vertices: Tuple[Vertex, ...]
    edges: FrozenSet[FrozenSet[Vertex]]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        known = set(self.vertices)
        if len(known) != len(self.vertices):
            raise DomainError(f"graph {self.name} lists a vertex twice")
        for edge in self.edges:
            if len(edge) != 2 or not edge <= known:
                raise DomainError(f"edge {sorted(edge, key=repr)} is not a pair of vertices of {self.name}")

    @cached_property
    def index(self) -> Dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def neighborhoods(self) -> Dict[Vertex, Tuple[Vertex, ...]]:
        """Closed neighborhoods in vertex order."""
        result = {}
        for v in self.vertices:
            result[v] = tuple(w for w in self.vertices if w == v or frozenset((v, w)) in self.edges)
        return result

    def adjacent(self, a: Vertex, b: Vertex) -> bool:
        return a == b or frozenset((a, b)) in self.edges

    def __len__(self) -> int:
        return len(self.vertices)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(tuple(edge) for edge in self.edges)
        return graph

    def __str__(self) -> str:
        return self.name or f"graph on {len(self.vertices)} vertices"


def make_graph(vertices: Iterable[Vertex], edges: Iterable[Tuple[Vertex, Vertex]], name: str = "") -> Graph:
    return Graph(tuple(vertices), frozenset(frozenset(e) for e in edges if e[0] != e[1]), name)


# --- builders ---

def interval(n: int) -> Graph:
    """I_n: the path 0 - 1 - ... - n."""
    if n < 0:
        raise DomainError(f"I_n needs n >= 0, got {n}")
    return make_graph(range(n + 1), [(i, i + 1) for i in range(n)], f"I{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"C_n needs n >= 3, got {n}")
    return make_graph(range(n), [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"K_n needs n >= 1, got {n}")
    return make_graph(range(n), itertools.combinations(range(n), 2), f"K{n}")


def grid(m: int, k: int) -> Graph:
    """I_m box-power k; vertices are points of {0..m}^k in lexicographic order."""
    points = list(itertools.product(range(m + 1), repeat=k))
    edges = []
    for p in points:
        for i in range(k):
            if p[i] < m:
                edges.append((p, p[:i] + (p[i] + 1,) + p[i + 1:]))
    return make_graph(points, edges, f"I{m}^{k}")


_NAME = re.compile(r"^([ICK])(\d+)$")


def graph_from_name(name: str) -> Graph:
    """Builders by name: I<n>, C<n>, K<n>."""
    match = _NAME.match(name.strip())
    if match is None:
        raise DomainError(f"unknown graph {name!r}; use I<n>, C<n> or K<n>")
    kind, n = match.group(1), int(match.group(2))
    return {"I": interval, "C": cycle, "K": complete}[kind](n)


def box_product(X: Graph, Y: Graph) -> Graph:
    vertices = [(x, y) for x in X.vertices for y in Y.vertices]
    edges = [((a, y), (b, y)) for a, b in (tuple(e) for e in X.edges) for y in Y.vertices]
    edges += [((x, a), (x, b)) for x in X.vertices for a, b in (tuple(e) for e in Y.edges)]
    return make_graph(vertices, edges, f"{X.name} box {Y.name}")


def find_graph_isomorphism(X: Graph, Y: Graph) -> Optional[Dict[Vertex, Vertex]]:
    matcher = nx.algorithms.isomorphism.GraphMatcher(X.to_networkx(), Y.to_networkx())
    if matcher.is_isomorphic():
        return dict(matcher.mapping)
    return None


def graph_components(X: Graph) -> List[Tuple[Vertex, ...]]:
    order = X.index
    blocks = [tuple(sorted(c, key=order.__getitem__)) for c in nx.connected_components(X.to_networkx())]
    return sorted(blocks, key=lambda block: order[block[0]])


# --- maps ---

@dataclass(frozen=True)
class GraphMap:
    src: Graph
    dst: Graph
    images: Tuple[Vertex, ...]

    def __call__(self, v: Vertex) -> Vertex:
        return self.images[self.src.index[v]]

    def is_valid(self) -> bool:
        if len(self.images) != len(self.src.vertices) or any(w not in self.dst.index for w in self.images):
            return False
        return all(self.dst.adjacent(self(a), self(b)) for a, b in (tuple(e) for e in self.src.edges))

    def then(self, other: "GraphMap") -> "GraphMap":
        """other after self."""
        return GraphMap(self.src, other.dst, tuple(other(w) for w in self.images))


def identity_graph_map(X: Graph) -> GraphMap:
    return GraphMap(X, X, X.vertices)


def constant_graph_map(X: Graph, Y: Graph, target: Vertex) -> GraphMap:
    return GraphMap(X, Y, tuple(target for _ in X.vertices))


# --- JSON ---

def graph_to_json(X: Graph) -> GraphDTO:
    label = {v: str(v) for v in X.vertices}
    edges = sorted(sorted((label[a], label[b])) for a, b in (tuple(e) for e in X.edges))
    return {"vertices": [label[v] for v in X.vertices], "edges": [list(e) for e in edges]}


def graph_from_json(payload: dict, name: str = "") -> Graph:
    try:
        vertices = [str(v) for v in payload["vertices"]]
        edges = [(str(a), str(b)) for a, b in payload.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed graph payload: {exc}")
    return make_graph(vertices, edges, name)


def load_graph(text: str, name: str = "") -> Graph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    return graph_from_json(payload, name)
