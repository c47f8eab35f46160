from coherent.rigid_simplex import RigidSimplexCategory, push_cube, rigid_functor, rigid_simplex
from coherent.rigidification import (
    RigidTuple, RigidificationCategory, confluence_check, normalize, rigidification, simplex_functor,
)
from coherent.nerve import (
    SimplicialHomotopyCategory, category_nerve, coherent_nerve, iter_functors, simplicial_ho,
    thin_groupoid_nerve,
)
from coherent.counit import counit_eval, counit_functor
from coherent.ho_equivalence import ho_nerve_iso_check
