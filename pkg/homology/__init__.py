from homology.smith import SmithForm, integer_matrix, invariant_factors, smith_normal_form
from homology.chains import HomologyGroup, boundary_matrix, boundary_squares_vanish, format_homology, homology_groups
