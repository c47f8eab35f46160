from graphs.graph import (
    Graph, GraphMap, box_product, complete, cycle, find_graph_isomorphism, graph_components,
    graph_from_name, grid, interval, make_graph,
)
from graphs.homotopy import (
    concatenate, graph_maps, hom_graph, homotopy_classes, homotopy_from_path, is_homotopy_equivalence,
)
from graphs.nerve import graph_nerve, nerve_kan_check, tower_map
