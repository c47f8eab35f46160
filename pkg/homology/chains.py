import logging
from typing import Dict, Hashable, List, NamedTuple, Optional

import numpy as np

from csets.cubical_set import CubicalSet
from homology.smith import smith_normal_form
from models.errors import DomainError
from models.json_types import HomologyGroupDTO
from products.simplicial import SimplicialSet
from products.triangulation import triangulate

logger = logging.getLogger(__name__)


class HomologyGroup(NamedTuple):
    degree: int
    betti: int
    torsion: tuple

    def __str__(self) -> str:
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return f"H_{self.degree} = {' ⊕ '.join(parts) if parts else '0'}"

    def as_dict(self) -> HomologyGroupDTO:
        return {"degree": self.degree, "betti": self.betti, "torsion": list(self.torsion)}


def _as_simplicial(S) -> SimplicialSet:
    return triangulate(S) if isinstance(S, CubicalSet) else S


def boundary_matrix(S: SimplicialSet, k: int) -> np.ndarray:
    """Normalized boundary C_k -> C_{k-1}: rows nondegenerate (k-1)-simplices, columns nondegenerate k-simplices."""
    columns = S.nondegenerate(k)
    if k == 0:
        return np.zeros((0, len(columns)), dtype=object)
    rows = S.nondegenerate(k - 1)
    row_index: Dict[Hashable, int] = {x: r for r, x in enumerate(rows)}
    matrix = np.zeros((len(rows), len(columns)), dtype=object)
    for c, x in enumerate(columns):
        for i, y in enumerate(S.boundary_tuple(x)):
            r = row_index.get(y)
            if r is not None:
                matrix[r, c] += -1 if i % 2 else 1
    return matrix


def boundary_squares_vanish(S, up_to: Optional[int] = None) -> bool:
    S = _as_simplicial(S)
    top = S.max_dim if up_to is None else up_to
    for k in range(2, top + 1):
        product = boundary_matrix(S, k - 1).dot(boundary_matrix(S, k))
        if np.any(product != 0):
            return False
    return True


def homology_groups(S, up_to: int, custom_logger: Optional[logging.Logger] = None) -> List[HomologyGroup]:
    """H_0..H_up_to of a simplicial set, or of the triangulation of a cubical set."""
    log = custom_logger or logger
    if up_to + 1 > S.max_dim:
        raise DomainError(f"H_{up_to} needs simplices of dimension {up_to + 1}, truncation is {S.max_dim}")
    S = _as_simplicial(S)
    ranks, factors = {}, {}
    for k in range(up_to + 2):
        snf = smith_normal_form(boundary_matrix(S, k))
        ranks[k] = snf.rank
        factors[k] = [d for d in snf.invariant_factors if d > 1]
    groups = []
    for k in range(up_to + 1):
        chains = len(S.nondegenerate(k))
        betti = chains - ranks[k] - ranks[k + 1]
        groups.append(HomologyGroup(k, betti, tuple(factors[k + 1])))
    log.debug("homology of %s: %s", S.name, "; ".join(str(g) for g in groups))
    return groups


def format_homology(groups: List[HomologyGroup]) -> str:
    return "\n".join(str(g) for g in groups)
