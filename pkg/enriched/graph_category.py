"""
Graph^m: graphs with mapping spaces N^G_m of the exponential graphs.

A k-cube of Graph^m(X, Y) is (k, images) with images a tuple of graph maps
X -> Y (each an image tuple) over the points of I_m^k. Every operation
works on such keys directly; mapping spaces are materialized only when a
whole one is asked for. Objects outside the listed ones are accepted too.
"""

import logging
from typing import Hashable, Optional, Sequence, Tuple

import networkx as nx

from csets.components import Components, components_from_edges
from csets.cubical_set import CubicalSet
from cube.generators import Generator
from enriched.category import CubicalCategory
from graphs.graph import Graph, GraphMap
from graphs.homotopy import hom_graph, homotopic_in_one_step
from graphs.nerve import _grid, graph_nerve, grid_act
from models.errors import DomainError
from utils.cell_budget import CellBudget, default_budget

logger = logging.getLogger(__name__)

GridCube = Tuple[int, Tuple[Tuple[Hashable, ...], ...]]


def compose_maps(Y: Graph, g: Tuple[Hashable, ...], f: Tuple[Hashable, ...]) -> Tuple[Hashable, ...]:
    """Image tuple of g o f, where f lands in Y."""
    return tuple(g[Y.index[w]] for w in f)


class GraphCubicalCategory(CubicalCategory):
    def __init__(self, objects: Sequence[Graph], m: int, max_dim: int, budget: Optional[CellBudget] = None):
        if m < 1:
            raise DomainError(f"Graph^m needs m >= 1, got {m}")
        super().__init__(objects, max_dim, f"Graph^{m}")
        self.m = m
        self.budget = budget or default_budget(f"Graph^{m}")
        self._hom_graphs = {}

    def hom_graph(self, a: Graph, b: Graph) -> Graph:
        if (a, b) not in self._hom_graphs:
            self._hom_graphs[(a, b)] = hom_graph(a, b, self.budget)
        return self._hom_graphs[(a, b)]

    def _build_hom(self, a, b, max_dim) -> CubicalSet:
        return graph_nerve(self.hom_graph(a, b), self.m, max_dim, self.budget)

    def contains(self, a, b, x) -> bool:
        k, images = x
        G = _grid(self.m, k)
        if len(images) != len(G.vertices):
            return False
        if any(not GraphMap(a, b, f).is_valid() for f in set(images)):
            return False
        return all(homotopic_in_one_step(GraphMap(a, b, images[G.index[p]]), GraphMap(a, b, images[G.index[q]]))
                   for p, q in (tuple(e) for e in G.edges))

    def cube_dim(self, a, b, x) -> int:
        return x[0]

    def act(self, a, b, x, gen: Generator):
        return grid_act(self.m, x, gen)

    def compose(self, a, b, c, g, f):
        """Pointwise composite over I_m^{j+k}, g's coordinates first."""
        (j, g_images), (k, f_images) = g, f
        return j + k, tuple(compose_maps(b, gm, fm) for gm in g_images for fm in f_images)

    def identity(self, a):
        return 0, (a.vertices,)

    def vertex(self, f: GraphMap) -> GridCube:
        return 0, (f.images,)

    def components(self, a, b) -> Components:
        H = self.hom_graph(a, b)
        return components_from_edges([(0, (v,)) for v in H.vertices],
                                     [((0, (u,)), (0, (v,))) for u, v in (tuple(e) for e in H.edges)])

    def one_cube_between(self, a, b, x, y):
        (_, (f,)), (_, (g,)) = x, y
        if homotopic_in_one_step(GraphMap(a, b, f), GraphMap(a, b, g)):
            return 1, (f,) + (g,) * self.m
        if self.m == 1:
            return None
        try:
            walk = nx.shortest_path(self.hom_graph(a, b).to_networkx(), f, g)
        except (nx.NetworkXNoPath, nx.NodeNotFound):
            return None
        if len(walk) - 1 > self.m:
            return None
        return 1, tuple(walk) + (g,) * (self.m + 1 - len(walk))

    def skeleton(self, a, b) -> nx.Graph:
        """0-cubes are adjacent when joined by one 1-cube, i.e. by a walk of length m."""
        H = self.hom_graph(a, b).to_networkx()
        graph = nx.Graph()
        graph.add_nodes_from((0, (v,)) for v in H.nodes)
        for u, near in nx.all_pairs_shortest_path_length(H, cutoff=self.m):
            graph.add_edges_from(((0, (u,)), (0, (v,))) for v in near if v != u)
        return graph


def graph_cubical_category(objects: Sequence[Graph], m: int, max_dim: int,
                           budget: Optional[CellBudget] = None) -> GraphCubicalCategory:
    return GraphCubicalCategory(objects, m, max_dim, budget)
