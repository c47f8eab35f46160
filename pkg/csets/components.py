from typing import Dict, Hashable, List, NamedTuple, Tuple

import networkx as nx


class Components(NamedTuple):
    """Path components: vertex blocks in first-appearance order and the block index of each vertex."""
    blocks: List[Tuple[Hashable, ...]]
    assignment: Dict[Hashable, int]

    def __len__(self) -> int:
        return len(self.blocks)

    def same(self, a: Hashable, b: Hashable) -> bool:
        return self.assignment[a] == self.assignment[b]


def components_from_edges(vertices, edges) -> Components:
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(edges)
    order = {v: n for n, v in enumerate(vertices)}
    blocks = sorted((tuple(sorted(c, key=order.__getitem__)) for c in nx.connected_components(graph)),
                    key=lambda block: order[block[0]])
    assignment = {v: n for n, block in enumerate(blocks) for v in block}
    return Components(blocks, assignment)


def pi0(X) -> Components:
    """Vertices modulo the relation generated by the endpoints of 1-cubes (or 1-simplices)."""
    edges = []
    if X.max_dim >= 1:
        for x in X.cells(1):
            a, b = X.boundary_tuple(x)
            edges.append((a, b))
    return components_from_edges(list(X.cells(0)), edges)
