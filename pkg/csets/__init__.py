from csets.cubical_set import CubicalSet, discrete, empty, point
from csets.cells import representable, standard_cell
from csets.maps import CubicalMap, enumerate_maps, find_isomorphism, iter_maps
from csets.components import pi0
from csets.kan import kan_box_check
