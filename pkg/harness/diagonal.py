import logging
from typing import Optional

from csets.components import pi0
from csets.cubical_set import CubicalSet
from csets.maps import CubicalMap
from models.verdicts import Report
from products.bicubical import diagonal, levelwise_discrete, pi0_by_rows

logger = logging.getLogger(__name__)


def diagonal_identity_check(X: CubicalSet, custom_logger: Optional[logging.Logger] = None) -> Report:
    """X against the diagonal of the bicubical set [1]^p -> discrete X_p, via (x, q) -> x."""
    log = custom_logger or logger
    report = Report(f"diag(disc {X.name}) against {X.name}")
    report.notes.append("within truncation")
    B = levelwise_discrete(X)
    violations = B.commutation_violations()
    if violations:
        report.add("bicubical", "fail", first=violations[0], count=len(violations))
        return report
    D = diagonal(B)
    collapse = CubicalMap(D, X, {(x, q): x for (x, q) in D.all_cubes()}, "collapse")
    violations = collapse.naturality_violations()
    if violations:
        report.add("natural", "fail", first=violations[0], count=len(violations))
    elif not collapse.is_bijective():
        report.add("bijective", "fail", counts=[D.counts(), X.counts()])
    else:
        report.add("isomorphism", "pass", counts=X.counts())
    if X.max_dim >= 1:
        by_rows, direct = len(pi0_by_rows(B)), len(pi0(D))
        report.add("pi0 by rows", "pass" if by_rows == direct == len(pi0(X)) else "fail",
                   components=[by_rows, direct])
    log.info("diagonal identity for %s: %s", X.name, report.verdict)
    return report
