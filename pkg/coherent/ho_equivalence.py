"""
Ho of the coherent nerve against the homotopy category of C.

Phi sends an edge of N(C) to the component of its 0-cube; Psi sends a
component to the edge of its first 0-cube. The check builds Ho(N(C)) from
the 1- and 2-simplices only and compares both composites with identities.
"""

import logging
from typing import Hashable, Optional, Sequence

from coherent.nerve import FaceIndex, homotopy_category_from_relations, iter_functors, nerve_vertex
from cube.generators import face
from enriched.category import CubicalCategory
from enriched.homotopy import ho
from models.verdicts import Report
from utils.cell_budget import CellBudget, default_budget

logger = logging.getLogger(__name__)

Obj = Hashable


def ho_nerve_iso_check(C: CubicalCategory, objects: Optional[Sequence[Obj]] = None,
                       budget: Optional[CellBudget] = None,
                       custom_logger: Optional[logging.Logger] = None) -> Report:
    log = custom_logger or logger
    objects = tuple(C.objects if objects is None else objects)
    budget = budget or default_budget(f"Ho of the coherent nerve of {C.name}")
    report = Report(f"Ho(N({C.name})) against ho({C.name})")
    report.notes.append("within truncation")
    index = FaceIndex(C, 1)

    vertices = [nerve_vertex(a) for a in objects]
    edges = {e: (nerve_vertex(e[0][0]), nerve_vertex(e[0][1])) for e in iter_functors(C, 1, objects, budget, index)}
    identities = {nerve_vertex(a): ((a, a), (C.identity(a),)) for a in objects}

    def triangles():
        for (a, b, c), (f01, f02, f12) in iter_functors(C, 2, objects, budget, index):
            yield ((b, c), (f12,)), ((a, c), (C.act(a, c, f02, face(1, 1, 0)),)), ((a, b), (f01,))

    nerve_ho = homotopy_category_from_relations(vertices, edges, identities, triangles(),
                                                f"Ho(N({C.name}))", budget)
    cubical_ho = ho(C, objects)

    def phi(edge):
        (a, b), (f,) = edge
        return cubical_ho.class_of(a, b, f)

    def psi(a, b, f):
        return nerve_ho.class_of(((a, b), (f,)))

    for edge in edges:
        if phi(edge) != phi(nerve_ho.class_of(edge)):
            report.add("Phi well defined", "fail", edge=repr(edge))
            break
    for a in objects:
        if phi(nerve_ho.identity(nerve_vertex(a))) != cubical_ho.identity(a):
            report.add(f"Phi identity {a!r}", "fail")
    for x, y, g in nerve_ho.morphisms():
        if psi(x[0][0], y[0][0], phi(g)) != g:
            report.add("Psi Phi = id", "fail", morphism=repr(g))
    for a, b, f in cubical_ho.morphisms():
        if phi(psi(a, b, f)) != f:
            report.add("Phi Psi = id", "fail", morphism=repr(f))
    for (x, y, z), table in nerve_ho.composition.items():
        a, b, c = x[0][0], y[0][0], z[0][0]
        for (g, f), h in table.items():
            if phi(h) != cubical_ho.compose(a, b, c, phi(g), phi(f)):
                report.add(f"Phi functor {a!r}->{b!r}->{c!r}", "fail", pair=repr((g, f)))
    if not report.failures:
        report.add("isomorphism", "pass", morphisms=cubical_ho.size(), edges=len(edges))
    log.info("Ho comparison for %s: %s", C.name, report.verdict)
    return report
