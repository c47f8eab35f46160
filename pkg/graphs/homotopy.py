"""
Exponential graphs, homotopy classes and homotopy equivalence of graph maps.
"""

import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from graphs.graph import Graph, GraphMap, Vertex, box_product, graph_components, interval, make_graph
from models.errors import DomainError
from models.verdicts import Decision
from utils.cell_budget import CellBudget, default_budget

logger = logging.getLogger(__name__)


def _search_order(X: Graph) -> List[Vertex]:
    """Vertices in BFS order per component so every vertex after a root has an earlier neighbor."""
    order, seen = [], set()
    for root in X.vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in X.neighborhoods[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def iter_graph_maps(X: Graph, Y: Graph, budget: Optional[CellBudget] = None) -> Iterator[GraphMap]:
    """All graph maps X -> Y, images ordered by X.vertices; deterministic."""
    budget = budget or default_budget(f"maps {X} -> {Y}")
    order = _search_order(X)
    earlier = []
    placed = set()
    for v in order:
        earlier.append([u for u in X.neighborhoods[v] if u in placed and u != v])
        placed.add(v)
    assignment: Dict[Vertex, Vertex] = {}

    def extend(step: int):
        if step == len(order):
            budget.charge()
            yield GraphMap(X, Y, tuple(assignment[v] for v in X.vertices))
            return
        v = order[step]
        if earlier[step]:
            candidates = Y.neighborhoods[assignment[earlier[step][0]]]
        else:
            candidates = Y.vertices
        for w in candidates:
            if all(Y.adjacent(assignment[u], w) for u in earlier[step]):
                assignment[v] = w
                yield from extend(step + 1)
        assignment.pop(v, None)

    yield from extend(0)


def graph_maps(X: Graph, Y: Graph, budget: Optional[CellBudget] = None) -> List[GraphMap]:
    maps = sorted(iter_graph_maps(X, Y, budget), key=lambda f: tuple(Y.index[w] for w in f.images))
    logger.debug("%d graph maps %s -> %s", len(maps), X, Y)
    return maps


def homotopic_in_one_step(f: GraphMap, g: GraphMap) -> bool:
    """There is H: X box I_1 -> Y with H(-,0) = f and H(-,1) = g."""
    return all(f.dst.adjacent(a, b) for a, b in zip(f.images, g.images))


def hom_graph(X: Graph, Y: Graph, budget: Optional[CellBudget] = None) -> Graph:
    """Graph^box(X, Y): vertices are image tuples of graph maps, adjacency is pointwise."""
    maps = graph_maps(X, Y, budget)
    vertices = [f.images for f in maps]
    edges = []
    for i, f in enumerate(maps):
        for g in maps[i + 1:]:
            if homotopic_in_one_step(f, g):
                edges.append((f.images, g.images))
    graph = make_graph(vertices, edges, f"[{X.name},{Y.name}]")
    logger.debug("hom graph %s: %d vertices, %d edges", graph.name, len(vertices), len(edges))
    return graph


def as_map(X: Graph, Y: Graph, vertex: Tuple[Vertex, ...]) -> GraphMap:
    """A vertex of hom_graph(X, Y) as a GraphMap."""
    return GraphMap(X, Y, tuple(vertex))


def homotopy_classes(X: Graph, Y: Graph, budget: Optional[CellBudget] = None) -> List[List[GraphMap]]:
    H = hom_graph(X, Y, budget)
    return [[as_map(X, Y, v) for v in block] for block in graph_components(H)]


# --- homotopies as paths ---

def homotopy_from_path(path: Sequence[GraphMap]) -> GraphMap:
    """The homotopy X box I_n -> Y whose level t is path[t]."""
    if not path:
        raise DomainError("a homotopy needs at least one map")
    for f, g in zip(path, path[1:]):
        if not homotopic_in_one_step(f, g):
            raise DomainError("consecutive maps of a homotopy must be adjacent in the hom graph")
    X, Y = path[0].src, path[0].dst
    n = len(path) - 1
    domain = box_product(X, interval(n))
    return GraphMap(domain, Y, tuple(path[t](x) for x, t in domain.vertices))


def homotopy_levels(H: GraphMap, X: Graph) -> List[GraphMap]:
    n = max(t for _, t in H.src.vertices)
    return [GraphMap(X, H.dst, tuple(H((x, t)) for x in X.vertices)) for t in range(n + 1)]


def concatenate(H1: GraphMap, H2: GraphMap, X: Graph) -> GraphMap:
    """H: X box I_{n+n'} -> Y running H1 then H2; their shared end must agree."""
    first, second = homotopy_levels(H1, X), homotopy_levels(H2, X)
    if first[-1].images != second[0].images:
        raise DomainError("homotopies do not meet: end of the first differs from start of the second")
    return homotopy_from_path(first + second[1:])


def zigzag(start: GraphMap, end: GraphMap, bound: int, H: Optional[Graph] = None) -> Optional[List[GraphMap]]:
    """Shortest path start ~ ... ~ end in the hom graph of length <= bound, or None."""
    X, Y = start.src, start.dst
    H = H or hom_graph(X, Y)
    try:
        path = nx.shortest_path(H.to_networkx(), start.images, end.images)
    except nx.NetworkXNoPath:
        return None
    if len(path) - 1 > bound:
        return None
    return [as_map(X, Y, v) for v in path]


# --- homotopy equivalence ---

def graph_invariants(X: Graph, budget: Optional[CellBudget] = None) -> dict:
    from graphs.nerve import graph_nerve
    from homology.chains import homology_groups
    nerve = graph_nerve(X, 1, 2, budget)
    h1 = homology_groups(nerve, 1)[1]
    return {"pi0": len(graph_components(X)), "H1": str(h1)}


def is_homotopy_equivalence(f: GraphMap, search_bound: int, budget: Optional[CellBudget] = None,
                            custom_logger: Optional[logging.Logger] = None) -> Decision:
    """
    Yes with an inverse g and zig-zags g.f ~ id, f.g ~ id of length <= search_bound;
    No when pi0 or H_1 of N^G_1 differ between source and target; Unknown otherwise.
    """
    log = custom_logger or logger
    X, Y = f.src, f.dst
    near_idX = nx.single_source_shortest_path(hom_graph(X, X, budget).to_networkx(), X.vertices, cutoff=search_bound)
    near_idY = nx.single_source_shortest_path(hom_graph(Y, Y, budget).to_networkx(), Y.vertices, cutoff=search_bound)
    for g in graph_maps(Y, X, budget):
        back = near_idX.get(f.then(g).images)
        forth = near_idY.get(g.then(f).images)
        if back is None or forth is None:
            continue
        log.info("%s -> %s is a homotopy equivalence", X, Y)
        return Decision("yes", witness=g, certificate={"gf": back, "fg": forth})
    source, target = graph_invariants(X, budget), graph_invariants(Y, budget)
    if source != target:
        log.info("%s and %s differ in an invariant: %s vs %s", X, Y, source, target)
        return Decision("no", certificate={"source": source, "target": target}, reason="invariant mismatch")
    return Decision("unknown", reason=f"no inverse with zig-zags of length <= {search_bound}")
