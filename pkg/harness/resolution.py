"""
Resolution candidates and the checks of their three conditions.

R1: the index category is weakly contractible (via an initial or terminal object).
R2: every structure morphism Y -> Y_i is a homotopy equivalence.
R3: each listed weak equivalence X' -> X induces a bijection on pi0 (and,
    on request, matching H_1) of the homotopy colimit of C(-, Y_.).
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from config.cubix_config import CUBIX_CONFIG
from coherent.nerve import category_nerve
from csets.components import Components, components_from_edges, pi0
from cube.box_morphism import from_generator
from enriched.category import CubicalCategory
from enriched.cotensor import connection_hint, cotensor_map, graph_cotensor_tower, structure_morphism
from enriched.finite_category import FiniteCategory, box_category, poset_category
from enriched.graph_category import GraphCubicalCategory
from enriched.homotopy import EquivalenceHint, is_homotopy_equivalence_enriched
from graphs.homotopy import graph_invariants
from homology.chains import homology_groups
from models.errors import ResourceError, TruncationError
from models.verdicts import Report
from products.bicubical import BicubicalSet, diagonal, pi0_by_rows

logger = logging.getLogger(__name__)

Obj = Hashable
Cube = Hashable
WeakEquivalence = Tuple[Obj, Obj, Cube]


@dataclass
class ResolutionCandidate:
    """
    A diagram i -> Y_i over a finite index category under Y. ``on_morphisms``
    gives the 0-cube Y_i -> Y_j of an index morphism; ``box_depth`` is n when
    the index is the opposite cube category up to [1]^n.
    """
    category: CubicalCategory
    target: Obj
    index: FiniteCategory
    objects: Dict[Obj, Obj]
    structure: Dict[Obj, Cube]
    on_morphisms: Callable[[Obj, Obj, Hashable], Cube]
    weak_equivalences: Sequence[WeakEquivalence] = ()
    hints: Dict[Obj, Sequence[EquivalenceHint]] = field(default_factory=dict)
    box_depth: Optional[int] = None
    name: str = ""


# --- builders ---

def cotensor_resolution(C: GraphCubicalCategory, Y, n: int,
                        weak_equivalences: Sequence[WeakEquivalence] = ()) -> ResolutionCandidate:
    """The cotensor tower Y_p = Y^(cube[p]) over the opposite cube category up to [1]^n."""
    tower = graph_cotensor_tower(C, Y, n)
    return ResolutionCandidate(
        C, Y, box_category(n),
        {p: tower[p].candidate for p in range(n + 1)},
        {p: structure_morphism(tower, p) for p in range(n + 1)},
        lambda a, b, theta: cotensor_map(tower, theta),
        weak_equivalences,
        {p: (connection_hint(tower, p),) for p in range(n + 1)},
        n,
        f"cotensor tower of {Y.name} up to cube[{n}]",
    )


def constant_resolution(C: CubicalCategory, Y, n: int,
                        weak_equivalences: Sequence[WeakEquivalence] = ()) -> ResolutionCandidate:
    identity = C.identity(Y)
    return ResolutionCandidate(
        C, Y, box_category(n), {p: Y for p in range(n + 1)}, {p: identity for p in range(n + 1)},
        lambda a, b, theta: identity, weak_equivalences, {}, n, f"constant diagram at {Y!r}",
    )


def arrow_resolution(C: CubicalCategory, Y, Z, f: Cube,
                     weak_equivalences: Sequence[WeakEquivalence] = ()) -> ResolutionCandidate:
    """Y_0 = Y and Y_1 = Z over [1], with Y -> Z the given 0-cube f."""
    objects = {0: Y, 1: Z}
    structure = {0: C.identity(Y), 1: f}

    def on_morphisms(a, b, u):
        return C.identity(objects[a]) if a == b else f

    return ResolutionCandidate(C, Y, poset_category(1), objects, structure, on_morphisms,
                               weak_equivalences, name=f"{Y!r} -> {Z!r}")



# --- the checks ---

def check_diagram(r: ResolutionCandidate) -> Report:
    """Functoriality of i -> Y_i and the cone Y -> Y_i."""
    C, I, Yi = r.category, r.index, r.objects
    report = Report(f"diagram {r.name}")
    for a in I.objects:
        if r.on_morphisms(a, a, I.identity(a)) != C.identity(Yi[a]):
            report.add(f"identity {a!r}", "fail")
    for a, b, u in I.morphisms():
        image = r.on_morphisms(a, b, u)
        if C.compose(r.target, Yi[a], Yi[b], image, r.structure[a]) != r.structure[b]:
            report.add(f"cone {a!r}->{b!r}", "fail", morphism=str(u))
        for c in I.objects:
            for v in I.hom(b, c):
                left = r.on_morphisms(a, c, I.compose(a, b, c, v, u))
                right = C.compose(Yi[a], Yi[b], Yi[c], r.on_morphisms(b, c, v), image)
                if left != right:
                    report.add(f"composition {a!r}->{b!r}->{c!r}", "fail", first=str(u), second=str(v))
    if not report.failures:
        report.add("diagram", "pass", morphisms=I.size())
    return report


def check_r1(index: FiniteCategory) -> Tuple[str, dict]:
    initial, terminal = index.initial_objects(), index.terminal_objects()
    if initial or terminal:
        return "pass", {"initial": [repr(a) for a in initial], "terminal": [repr(a) for a in terminal]}
    N = category_nerve(index, 2)
    components = len(pi0(N))
    if components != 1:
        return "fail", {"components": components}
    h1 = homology_groups(N, 1)[1]
    if h1.betti or h1.torsion:
        return "fail", {"H1": str(h1)}
    return "inconclusive", {"reason": "no initial or terminal object, nerve connected with H_1 = 0"}


def check_r2(r: ResolutionCandidate, bound: int) -> List[Tuple[str, str, dict]]:
    C, Y = r.category, r.target
    results = []
    for i in r.index.objects:
        decision = is_homotopy_equivalence_enriched(C, Y, r.objects[i], r.structure[i], bound, r.hints.get(i, ()))
        if decision.is_yes:
            results.append((f"R2 at {i!r}", "pass", {"inverse": repr(decision.witness)}))
            continue
        detail = {"reason": decision.reason}
        if decision.certificate:
            detail["certificate"] = decision.certificate
        if decision.is_no and isinstance(C, GraphCubicalCategory):
            detail["invariants"] = {"source": graph_invariants(Y, C.budget),
                                    "target": graph_invariants(r.objects[i], C.budget)}
        results.append((f"R2 at {i!r}", "fail" if decision.is_no else "inconclusive", detail))
    return results


def colimit_components(r: ResolutionCandidate, X: Obj) -> Components:
    """pi0 of the homotopy colimit of C(X, Y_i): the colimit of the pi0 over the index."""
    C, I = r.category, r.index
    vertices, edges = [], []
    for i in I.objects:
        comps = C.components(X, r.objects[i])
        for block in comps.blocks:
            vertices.extend((i, x) for x in block)
            edges.extend(((i, block[0]), (i, x)) for x in block[1:])
    for a, b, u in I.morphisms():
        image = r.on_morphisms(a, b, u)
        for x in C.hom(X, r.objects[a]).cubes(0):
            edges.append(((a, x), (b, C.compose(X, r.objects[a], r.objects[b], image, x))))
    return components_from_edges(vertices, edges)


def diagram_bicubical(r: ResolutionCandidate, X: Obj, max_dim: int) -> BicubicalSet:
    """B_{p,q} = C(X, Y_p)_q for a diagram on the opposite cube category; cells are (p, x)."""
    if r.box_depth is None or r.box_depth < max_dim:
        raise TruncationError(f"the diagram {r.name} has no level {max_dim}", max_dim)
    C = r.category
    cells = {(p, q): [(p, x) for x in C.hom(X, r.objects[p], max_dim).cubes(q)]
             for p in range(max_dim + 1) for q in range(max_dim + 1)}

    def act_outer(cell, gen):
        p, x = cell
        u = r.on_morphisms(p, gen.src, from_generator(gen))
        return gen.src, C.compose(X, r.objects[p], r.objects[gen.src], u, x)

    def act_inner(cell, gen):
        p, x = cell
        return p, C.act(X, r.objects[p], x, gen)

    return BicubicalSet(max_dim, cells, act_outer, act_inner, f"C({X!r}, {r.name})")


def _pi0_of(r: ResolutionCandidate, X: Obj) -> Tuple[Components, Callable[[Obj, Cube], Hashable]]:
    """Components and the key under which a 0-cube x of C(X, Y_i) is found."""
    if r.box_depth:
        return pi0_by_rows(diagram_bicubical(r, X, 1)), lambda i, x: (i, x)
    return colimit_components(r, X), lambda i, x: (i, x)


def check_r3(r: ResolutionCandidate, shadow_degree: int = 0) -> List[Tuple[str, str, dict]]:
    C = r.category
    results = []
    for source, target, f in r.weak_equivalences:
        name = f"R3 along {f!r}"
        before, key = _pi0_of(r, target)
        after, _ = _pi0_of(r, source)
        images = {}
        rows = r.index.objects if not r.box_depth else (0,)
        for i in rows:
            for x in C.hom(target, r.objects[i]).cubes(0):
                moved = C.compose(source, target, r.objects[i], x, f)
                images.setdefault(before.assignment[key(i, x)], set()).add(after.assignment[key(i, moved)])
        reached = set().union(*images.values()) if images else set()
        detail = {"components": [len(before), len(after)], "degrees": [0]}
        if any(len(hit) != 1 for hit in images.values()) or len(reached) != len(images) or len(reached) != len(after):
            results.append((name, "fail", detail))
            continue
        verdict = "pass"
        if shadow_degree >= 1:
            try:
                groups = [homology_groups(diagonal(diagram_bicubical(r, X, 2)), 1)[1] for X in (target, source)]
            except (ResourceError, TruncationError) as exc:
                detail["H1"] = f"not evaluated: {exc}"
                verdict = "inconclusive"
            else:
                detail["degrees"].append(1)
                detail["H1"] = [str(h) for h in groups]
                if groups[0] != groups[1]:
                    verdict = "fail"
        results.append((name, verdict, detail))
    return results


def check_resolution(r: ResolutionCandidate, bound: Optional[int] = None, shadow_degree: int = 0,
                     custom_logger: Optional[logging.Logger] = None) -> Report:
    log = custom_logger or logger
    bound = CUBIX_CONFIG.htpy_bound if bound is None else bound
    report = Report(f"resolution conditions for {r.name}")
    report.notes.append("within truncation")
    report.notes.append("R1 by an initial or terminal object; R3 in pi0" + (" and H_1" if shadow_degree else "") + " shadow")
    for result in check_diagram(r).failures:
        report.results.append(result)
    verdict, detail = check_r1(r.index)
    report.add("R1", verdict, **detail)
    for name, verdict, detail in check_r2(r, bound):
        report.add(name, verdict, **detail)
    for name, verdict, detail in check_r3(r, shadow_degree):
        report.add(name, verdict, **detail)
    log.info("resolution %s: %s", r.name, report.verdict)
    return report


def condition_verdicts(report: Report) -> Dict[str, str]:
    """Worst verdict per condition: R1, R2, R3 and the diagram itself."""
    rank = {"pass": 0, "inconclusive": 1, "fail": 2}
    verdicts: Dict[str, str] = {}
    for result in report.results:
        condition = result.name.split(" ")[0] if result.name.startswith("R") else "diagram"
        current = verdicts.get(condition, "pass")
        verdicts[condition] = max(current, result.verdict, key=rank.__getitem__)
    return verdicts
