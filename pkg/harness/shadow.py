"""
The pi0 shadow of graph localization: components of N^G_m of the hom graph
against homotopy classes of graph maps, and their stability up the tower.
"""

import logging
from typing import Dict, Hashable, Optional

from csets.components import Components, pi0
from csets.cubical_set import CubicalSet
from graphs.graph import Graph
from graphs.homotopy import hom_graph, homotopy_classes
from graphs.nerve import graph_nerve, tower_map
from models.errors import DomainError
from models.verdicts import Report
from utils.cell_budget import CellBudget, default_budget

logger = logging.getLogger(__name__)


def _component_labels(nerve: CubicalSet, comps: Components, labels: Dict[Hashable, int]) -> Dict[int, set]:
    """Class labels met by each component; a 0-cube (0, (v,)) carries the label of v."""
    met: Dict[int, set] = {}
    for x in nerve.cubes(0):
        _, (v,) = x
        met.setdefault(comps.assignment[x], set()).add(labels[v])
    return met


def _check_bijection(report: Report, name: str, met: Dict[int, set], classes: int):
    reached = set().union(*met.values()) if met else set()
    detail = {"components": len(met), "classes": classes}
    if any(len(hit) != 1 for hit in met.values()):
        report.add(name, "fail", reason="a component meets two homotopy classes", **detail)
    elif len(reached) != len(met) or len(reached) != classes:
        report.add(name, "fail", reason="components and classes do not match one to one", **detail)
    else:
        report.add(name, "pass", **detail)


def graph_localization_shadow(X: Graph, Y: Graph, m: int = 1, budget: Optional[CellBudget] = None,
                              custom_logger: Optional[logging.Logger] = None) -> Report:
    log = custom_logger or logger
    if m < 1:
        raise DomainError(f"the shadow starts at level m >= 1, got {m}")
    budget = budget or default_budget(f"localization shadow {X} -> {Y}")
    H = hom_graph(X, Y, budget)
    classes = homotopy_classes(X, Y, budget)
    labels = {f.images: n for n, block in enumerate(classes) for f in block}
    report = Report(f"pi0 N^G_{m}[{X.name},{Y.name}] against homotopy classes")
    report.notes.append("within truncation")

    lower = graph_nerve(H, m, 1, budget)
    lower_comps = pi0(lower)
    _check_bijection(report, f"bijection at level {m}", _component_labels(lower, lower_comps, labels), len(classes))

    upper = graph_nerve(H, m + 1, 1, budget)
    upper_comps = pi0(upper)
    _check_bijection(report, f"bijection at level {m + 1}", _component_labels(upper, upper_comps, labels), len(classes))
    for shape in ("l", "r"):
        step = tower_map(lower, upper, m, shape)
        violations = step.naturality_violations()
        if violations:
            report.add(f"{shape}* natural", "fail", first=violations[0])
            continue
        induced = {}
        for x in lower.cubes(0):
            induced.setdefault(lower_comps.assignment[x], set()).add(upper_comps.assignment[step(x)])
        reached = set().union(*induced.values())
        collapsed = any(len(hit) != 1 for hit in induced.values())
        if collapsed or len(reached) != len(induced) or len(reached) != len(upper_comps):
            report.add(f"{shape}* on pi0", "fail", components=[len(lower_comps), len(upper_comps)])
            continue
        commutes = all(labels[step(x)[1][0]] == labels[x[1][0]] for x in lower.cubes(0))
        report.add(f"{shape}* on pi0", "pass" if commutes else "fail", commutes=commutes)
    log.info("localization shadow [%s,%s] at m=%d: %s", X, Y, m, report.verdict)
    return report
