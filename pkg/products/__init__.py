from products.simplicial import SimplicialMap, SimplicialSet, simplicial_cube, simplicial_product, standard_simplex
from products.tensor import canonical_pair, tensor
from products.internal_hom import InternalHom, curry, internal_hom, uncurry
from products.triangulation import BoundedU, alpha, comparison_map, triangulate
from products.bicubical import BicubicalSet, diagonal, external_product, levelwise_discrete, pi0_by_rows
