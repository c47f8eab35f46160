from enriched.finite_category import (
    FiniteCategory, FiniteFunctor, arrow_category, box_category, cyclic_group, discrete_category,
    opposite, poset_category,
)
from enriched.category import CubicalCategory, Sk0Category, SuspensionCategory, sk0, suspension, verify_axioms
from enriched.homotopy import EquivalenceHint, HomotopyCategory, ho, is_homotopy_equivalence_enriched
from enriched.graph_category import GraphCubicalCategory, graph_cubical_category
from enriched.cotensor import (
    CotensorWitness, connection_homotopy_check, graph_cotensor, graph_cotensor_tower, unit_cotensor,
    verify_cotensor,
)
from enriched.functors import (
    ArrowProduct, CubicalFunctor, CubicalNaturalTransformation, verify_functor,
    verify_natural_transformation,
)
