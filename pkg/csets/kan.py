import logging
from typing import Dict, Hashable, List, Optional

from csets.cells import face_cube, standard_cell
from csets.cubical_set import CubicalSet
from csets.maps import iter_maps
from models.errors import DomainError
from models.verdicts import Report
from utils.cell_budget import CellBudget, default_budget

logger = logging.getLogger(__name__)


def box_faces(n: int, i: int, eps: int):
    """The (j, eta) faces present in the (i, eps)-open box of the n-cube."""
    return [(j, e) for j in range(1, n + 1) for e in (0, 1) if (j, e) != (i, eps)]


def find_filler(X: CubicalSet, n: int, i: int, eps: int, walls: Dict[tuple, Hashable]) -> Optional[Hashable]:
    """An n-cube of X whose faces match walls[(j, eta)] on every face but (i, eps)."""
    slots = [(2 * (j - 1) + e, walls[(j, e)]) for j, e in box_faces(n, i, eps)]
    for z in X.cubes(n):
        faces = X.boundary_tuple(z)
        if all(faces[slot] == wall for slot, wall in slots):
            return z
    return None


def open_box_maps(X: CubicalSet, n: int, i: int, eps: int, budget: Optional[CellBudget] = None):
    """Yield the wall assignments of every map from the (i, eps)-open box of the n-cube into X."""
    box = standard_cell("open_box", n, n - 1, i, eps)
    faces = {(j, e): face_cube(n, j, e) for j, e in box_faces(n, i, eps)}
    for f in iter_maps(box, X, budget):
        yield {key: f(cube) for key, cube in faces.items()}


def kan_box_check(X: CubicalSet, d: int, budget: Optional[CellBudget] = None,
                  custom_logger: Optional[logging.Logger] = None) -> Report:
    """
    Search fillers for every open box of dimension <= d.

    An empty failure list means Kan up to d, within truncation.
    """
    log = custom_logger or logger
    if d > X.max_dim:
        raise DomainError(f"box dimension {d} exceeds the truncation {X.max_dim}")
    budget = budget or default_budget("open box search")
    report = Report(f"open box fillers in {X.name or 'cubical set'} up to dimension {d}")
    report.notes.append("within truncation")
    for n in range(1, d + 1):
        for i in range(1, n + 1):
            for eps in (0, 1):
                boxes = unfilled = 0
                for walls in open_box_maps(X, n, i, eps, budget):
                    boxes += 1
                    if find_filler(X, n, i, eps, walls) is None:
                        unfilled += 1
                        report.add(f"box({n},{i},{eps})", "fail",
                                   walls={f"d({j},{e})": repr(w) for (j, e), w in sorted(walls.items())})
                log.debug("open boxes (%d,%d,%d): %d maps, %d unfilled", n, i, eps, boxes, unfilled)
    if not report.failures:
        report.add("all open boxes", "pass", max_dim=d)
    log.info("kan check on %s: %d unfillable boxes", X.name or "cubical set", len(report.failures))
    return report
