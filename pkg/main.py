from config.cubix_config import CUBIX_CONFIG, LOGGING_CONFIG
from cube.box_morphism import NotInBox, compose, from_word, normal_form, parse_vertex_map, vertices
from cube.generators import format_word, parse_word
from cube.identities import check_table_identities
from csets.cells import standard_cell
from csets.components import pi0
from csets.cubical_set import CubicalSet, point
from csets.kan import kan_box_check
from csets.maps import enumerate_maps
from csets.serialization import cubical_set_to_json, load_cubical_set
from coherent.ho_equivalence import ho_nerve_iso_check
from enriched.category import CubicalCategory, sk0, suspension, verify_axioms
from enriched.cotensor import connection_homotopy_check, graph_cotensor_tower, verify_cotensor
from enriched.finite_category import arrow_category, cyclic_group, discrete_category, poset_category
from enriched.graph_category import graph_cubical_category
from enriched.homotopy import ho, is_homotopy_equivalence_enriched
from graphs.graph import (
    Graph, GraphMap, box_product, find_graph_isomorphism, graph_from_name, graph_to_json, load_graph,
)
from graphs.homotopy import graph_maps, hom_graph, homotopy_classes, is_homotopy_equivalence
from graphs.nerve import graph_nerve, nerve_kan_check
from harness.diagonal import diagonal_identity_check
from harness.resolution import check_resolution, condition_verdicts, constant_resolution, cotensor_resolution
from harness.shadow import graph_localization_shadow
from homology.chains import homology_groups
from models.constants import (
    DEBUG_LOG_LEVEL, DEFAULT_NERVE_LEVEL, DEFAULT_STABILIZATION_STEPS,
    EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE,
)
from models.errors import DomainError, ResourceError, TruncationError
from models.verdicts import Decision, Report
from products.simplicial import simplicial_to_json
from products.tensor import tensor
from products.triangulation import triangulate
from utils.colored_logging import get_component_logger, setup_root_logger
from pathlib import Path
from typing import List, NamedTuple, Optional
import argparse
import json
import logging
import re
import sys

# Configure logging
setup_root_logger(LOGGING_CONFIG['level'], LOGGING_CONFIG['format'])

VERDICT_CODES = {"pass": EXIT_OK, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}
ANSWER_CODES = {"yes": EXIT_OK, "no": EXIT_FAIL, "unknown": EXIT_INCONCLUSIVE}

_CELL = re.compile(r"^(cube|boundary)(\d+)$")
_BOX = re.compile(r"^box(\d+)_(\d+)_([01])$")
_SK0 = re.compile(r"^(poset|z|discrete)(\d+)$")


class Outcome(NamedTuple):
    text: str
    payload: dict
    code: int = EXIT_OK


class CubixArgumentParser(argparse.ArgumentParser):
    """Usage errors become DomainError so they share exit code 3."""

    def error(self, message):
        raise DomainError(message)


# --- inputs ---

def read_graph(spec: str) -> Graph:
    """A builder name (I<n>, C<n>, K<n>) or a path to a graph JSON file."""
    path = Path(spec)
    if path.is_file():
        return load_graph(path.read_text(), path.stem)
    return graph_from_name(spec)


def read_cubical_set(spec: str, max_dim: int) -> CubicalSet:
    """cube<n>, boundary<n>, box<n>_<i>_<eps>, point, nerve:<graph>, or a path to a cubical set JSON file."""
    spec = spec.strip()
    match = _CELL.match(spec)
    if match:
        return standard_cell(match.group(1), int(match.group(2)), max_dim)
    match = _BOX.match(spec)
    if match:
        n, i, eps = (int(g) for g in match.groups())
        return standard_cell("open_box", n, max_dim, i, eps)
    if spec == "point":
        return point(max_dim)
    if spec.startswith("nerve:"):
        return graph_nerve(read_graph(spec[len("nerve:"):]), DEFAULT_NERVE_LEVEL, max_dim)
    path = Path(spec)
    if not path.is_file():
        raise DomainError(f"unknown cubical set {spec!r}")
    return load_cubical_set(path.read_text(), path.stem)


def read_graph_map(X: Graph, Y: Graph, spec: Optional[str]) -> GraphMap:
    """Comma-separated images in the vertex order of X; omitted means constant at the first vertex of Y."""
    if spec is None:
        return GraphMap(X, Y, tuple(Y.vertices[0] for _ in X.vertices))
    by_label = {str(v): v for v in Y.vertices}
    tokens = [token.strip() for token in spec.split(",")]
    if len(tokens) != len(X.vertices) or any(token not in by_label for token in tokens):
        raise DomainError(f"map {spec!r} does not list one vertex of {Y} per vertex of {X}")
    f = GraphMap(X, Y, tuple(by_label[token] for token in tokens))
    if not f.is_valid():
        raise DomainError(f"{spec!r} is not a graph map {X} -> {Y}")
    return f


def read_category(spec: str, args: argparse.Namespace) -> CubicalCategory:
    """graph:<G>,<H>,...  sk0:poset<n>|z<n>|discrete<n>|arrow  sigma:<cubical set>"""
    kind, _, rest = spec.partition(":")
    if kind == "graph":
        return graph_cubical_category([read_graph(name) for name in rest.split(",")], args.m, args.max_dim)
    if kind == "sk0":
        if rest == "arrow":
            return sk0(arrow_category(), args.max_dim)
        match = _SK0.match(rest)
        if match is None:
            raise DomainError(f"unknown finite category {rest!r}")
        n = int(match.group(2))
        base = {"poset": poset_category, "z": cyclic_group,
                "discrete": lambda k: discrete_category(range(k))}[match.group(1)](n)
        return sk0(base, args.max_dim)
    if kind == "sigma":
        return suspension(read_cubical_set(rest, args.max_dim))
    raise DomainError(f"unknown category {spec!r}; use graph:, sk0: or sigma:")


# --- rendering ---

def _detail(detail: dict) -> str:
    return json.dumps(detail, default=repr, sort_keys=True) if detail else ""


def report_outcome(report: Report, extra: Optional[dict] = None) -> Outcome:
    lines = [f"{report.title}: {report.verdict}"]
    for result in report.results:
        lines.append(f"  [{result.verdict}] {result.name} {_detail(result.detail)}".rstrip())
    for note in report.notes:
        lines.append(f"  note: {note}")
    payload = report.as_dict()
    if extra:
        payload.update(extra)
        lines.extend(f"{key}: {value}" for key, value in extra.items())
    return Outcome("\n".join(lines), payload, VERDICT_CODES[report.verdict])


def decision_outcome(decision: Decision, subject: str) -> Outcome:
    lines = [f"{subject}: {decision.answer}"]
    witness = decision.witness.images if isinstance(decision.witness, GraphMap) else decision.witness
    if witness is not None:
        lines.append(f"  inverse: {witness!r}")
    if decision.reason:
        lines.append(f"  reason: {decision.reason}")
    if decision.certificate:
        lines.append(f"  certificate: {_detail(decision.certificate)}")
    payload = {"answer": decision.answer, "reason": decision.reason,
               "witness": repr(witness) if witness is not None else None,
               "certificate": decision.certificate}
    return Outcome("\n".join(lines), payload, ANSWER_CODES[decision.answer])


class CubixCommands:
    """One method per subcommand; each returns an Outcome."""

    def __init__(self, args: argparse.Namespace, logger: logging.Logger):
        self.args = args
        self.logger = logger

    # --- cube ---

    def cube_normal_form(self) -> Outcome:
        args = self.args
        if args.word is not None:
            f = normal_form(args.word, args.src)
        elif args.map is not None:
            table, src, dst = parse_vertex_map(args.map)
            f = normal_form(dict(zip(vertices(src), table)), src, dst)
        else:
            raise DomainError("give --map or --word")
        if isinstance(f, NotInBox):
            return Outcome(f"not in the cube category: {f.reason}",
                           {"src": f.src, "dst": f.dst, "reason": f.reason}, EXIT_FAIL)
        word = format_word(f.word)
        return Outcome(word, {"src": f.src, "dst": f.dst, "word": word, "table": [list(p) for p in f.table]})

    def cube_compose(self) -> Outcome:
        args = self.args
        f = from_word(parse_word(args.f, args.src), args.src)
        g = from_word(parse_word(args.g, f.dst), f.dst)
        h = compose(g, f)
        word = format_word(h.word)
        return Outcome(word, {"src": h.src, "dst": h.dst, "word": word})

    def cube_identities(self) -> Outcome:
        return report_outcome(check_table_identities(self.args.max_dim))

    # --- cset ---

    def _cset(self, spec: Optional[str] = None) -> CubicalSet:
        return read_cubical_set(spec or self.args.x, self.args.max_dim)

    def cset_cell(self) -> Outcome:
        X = self._cset()
        return Outcome(X.describe(), dict(cubical_set_to_json(X)))

    def cset_pi0(self) -> Outcome:
        comps = pi0(self._cset())
        return Outcome(f"components: {len(comps)}", {"components": len(comps)})

    def cset_maps(self) -> Outcome:
        maps = enumerate_maps(self._cset(), self._cset(self.args.y))
        return Outcome(f"maps: {len(maps)}", {"maps": len(maps)})

    def cset_kan(self) -> Outcome:
        return report_outcome(kan_box_check(self._cset(), self.args.d, custom_logger=self.logger))

    def cset_homology(self) -> Outcome:
        groups = homology_groups(self._cset(), self.args.degree, custom_logger=self.logger)
        return Outcome("\n".join(str(h) for h in groups), {"groups": [h.as_dict() for h in groups]})

    def cset_tensor(self) -> Outcome:
        XY = tensor(self._cset(), self._cset(self.args.y))
        return Outcome(XY.describe(), dict(cubical_set_to_json(XY)))

    def cset_triangulate(self) -> Outcome:
        TX = triangulate(self._cset(), custom_logger=self.logger)
        return Outcome(TX.describe(), simplicial_to_json(TX))

    # --- graph ---

    def graph_build(self) -> Outcome:
        X = read_graph(self.args.name)
        payload = dict(graph_to_json(X))
        return Outcome(f"{X}: {len(payload['vertices'])} vertices, {len(payload['edges'])} edges", payload)

    def graph_box(self) -> Outcome:
        XY = box_product(read_graph(self.args.x), read_graph(self.args.y))
        payload = dict(graph_to_json(XY))
        text = f"{XY}: {len(payload['vertices'])} vertices, {len(payload['edges'])} edges"
        if self.args.compare is None:
            return Outcome(text, payload)
        iso = find_graph_isomorphism(XY, read_graph(self.args.compare))
        payload["isomorphic"] = iso is not None
        return Outcome(f"{text}\nisomorphic to {self.args.compare}: {'yes' if iso else 'no'}", payload,
                       EXIT_OK if iso else EXIT_FAIL)

    def graph_hom(self) -> Outcome:
        H = hom_graph(read_graph(self.args.x), read_graph(self.args.y))
        payload = dict(graph_to_json(H))
        return Outcome(f"{H}: {len(payload['vertices'])} vertices, {len(payload['edges'])} edges", payload)

    def graph_htpy_classes(self) -> Outcome:
        classes = homotopy_classes(read_graph(self.args.x), read_graph(self.args.y))
        sizes = [len(block) for block in classes]
        return Outcome(f"classes: {len(classes)}", {"classes": len(classes), "sizes": sizes})

    def graph_htpy_equiv(self) -> Outcome:
        X, Y = read_graph(self.args.x), read_graph(self.args.y)
        f = read_graph_map(X, Y, self.args.map)
        decision = is_homotopy_equivalence(f, self.args.bound, custom_logger=self.logger)
        return decision_outcome(decision, f"{X} -> {Y} homotopy equivalence")

    # --- nerve ---

    def nerve_cubes(self) -> Outcome:
        N = graph_nerve(read_graph(self.args.graph), self.args.m, self.args.max_dim)
        return Outcome(N.describe(), {"counts": N.counts()})

    def nerve_h1(self) -> Outcome:
        degree = self.args.degree
        N = graph_nerve(read_graph(self.args.graph), self.args.m, max(self.args.max_dim, degree + 1))
        group = homology_groups(N, degree, custom_logger=self.logger)[degree]
        return Outcome(str(group), group.as_dict())

    def nerve_kan(self) -> Outcome:
        report = nerve_kan_check(read_graph(self.args.graph), self.args.m, self.args.max_dim, self.args.d,
                                 self.args.levels, custom_logger=self.logger)
        return report_outcome(report)

    # --- enriched ---

    def enriched_ho(self) -> Outcome:
        C = read_category(self.args.category, self.args)
        H = ho(C, custom_logger=self.logger)
        sizes = {f"{a}->{b}": len(H.hom(a, b)) for a in H.objects for b in H.objects}
        lines = [f"{H.name}: {H.size()} morphisms, groupoid: {'yes' if H.is_groupoid() else 'no'}"]
        lines.extend(f"  {pair}: {count}" for pair, count in sizes.items())
        payload = {"category": H.name, "morphisms": H.size(), "homs": sizes, "groupoid": H.is_groupoid()}
        if not self.args.nerve:
            return Outcome("\n".join(lines), payload)
        outcome = report_outcome(ho_nerve_iso_check(C, custom_logger=self.logger))
        payload["nerve"] = outcome.payload
        return Outcome("\n".join(lines) + "\n" + outcome.text, payload, outcome.code)

    def enriched_htpy_equiv(self) -> Outcome:
        X, Y = read_graph(self.args.x), read_graph(self.args.y)
        C = graph_cubical_category([X, Y], self.args.m, self.args.max_dim)
        f = C.vertex(read_graph_map(X, Y, self.args.map))
        decision = is_homotopy_equivalence_enriched(C, X, Y, f, self.args.bound, custom_logger=self.logger)
        return decision_outcome(decision, f"{X} -> {Y} in {C.name}")

    def enriched_cotensor(self) -> Outcome:
        Y = read_graph(self.args.graph)
        tests = [read_graph(name) for name in self.args.test]
        C = graph_cubical_category([Y] + tests, self.args.m, self.args.max_dim)
        tower = graph_cotensor_tower(C, Y, self.args.n)
        return report_outcome(verify_cotensor(tower[-1], tests, tower, custom_logger=self.logger))

    def enriched_connection(self) -> Outcome:
        Y = read_graph(self.args.graph)
        C = graph_cubical_category([Y], self.args.m, self.args.max_dim)
        tower = graph_cotensor_tower(C, Y, self.args.n)
        return report_outcome(connection_homotopy_check(tower, self.args.n, custom_logger=self.logger))

    def enriched_suspension(self) -> Outcome:
        S = suspension(self._cset())
        return report_outcome(verify_axioms(S, custom_logger=self.logger))

    # --- dmsl ---

    def dmsl_tower(self) -> Outcome:
        args = self.args
        Y = read_graph(args.graph)
        C = graph_cubical_category([Y], args.m, args.max_dim)
        tests = []
        for spec in args.test:
            source, _, target = spec.partition("->")
            Xp, X = read_graph(source), read_graph(target)
            maps = graph_maps(Xp, X)
            if not maps:
                raise DomainError(f"there is no graph map {Xp} -> {X}")
            tests.append((Xp, X, C.vertex(maps[0])))
        build = cotensor_resolution if args.kind == "cotensor" else constant_resolution
        r = build(C, Y, args.n, tests)
        report = check_resolution(r, args.bound, args.shadow_degree, custom_logger=self.logger)
        return report_outcome(report, {"conditions": condition_verdicts(report)})

    def dmsl_shadow(self) -> Outcome:
        report = graph_localization_shadow(read_graph(self.args.x), read_graph(self.args.y), self.args.m,
                                           custom_logger=self.logger)
        return report_outcome(report)

    def dmsl_diagonal(self) -> Outcome:
        return report_outcome(diagonal_identity_check(self._cset(), custom_logger=self.logger))


# --- parser ---

def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level on stderr")
    parser.add_argument("--max-dim", type=int, default=CUBIX_CONFIG.truncation, help="truncation D")
    parser.add_argument("--bound", type=int, default=CUBIX_CONFIG.htpy_bound, help="zig-zag search bound")
    parser.add_argument("--m", type=int, default=DEFAULT_NERVE_LEVEL, help="grid length of N^G_m")


def build_parser() -> argparse.ArgumentParser:
    parser = CubixArgumentParser(prog="cubix", description="Cubical sets, cubical categories and their checks.")
    verbs = parser.add_subparsers(dest="verb", required=True)

    def command(verb_parsers, verb: str, name: str, handler: str, help_text: str):
        sub = verb_parsers.add_parser(name, help=help_text)
        _common(sub)
        sub.set_defaults(handler=handler, component=verb)
        return sub

    cube = verbs.add_parser("cube", help="the cube category").add_subparsers(dest="command", required=True)
    sub = command(cube, "cube", "normal-form", "cube_normal_form", "canonical word of a vertex map or word")
    sub.add_argument("--map", help="max<n>, min<n>, id<n>, proj<n>_<i> or a table 00:0,01:1,...")
    sub.add_argument("--word", help="generator word such as g(1,0);s(2)")
    sub.add_argument("--src", type=int, help="source dimension of --word")
    sub = command(cube, "cube", "compose", "cube_compose", "g o f of two words")
    sub.add_argument("--g", required=True)
    sub.add_argument("--f", required=True)
    sub.add_argument("--src", type=int, required=True, help="source dimension of f")
    sub = command(cube, "cube", "identities", "cube_identities", "check the cubical identities")
    sub.set_defaults(max_dim=5)

    cset = verbs.add_parser("cset", help="cubical sets").add_subparsers(dest="command", required=True)
    for name, handler, help_text in (("cell", "cset_cell", "a standard cell or a cubical set file"),
                                     ("pi0", "cset_pi0", "path components"),
                                     ("maps", "cset_maps", "count maps X -> Y"),
                                     ("kan", "cset_kan", "open box fillers"),
                                     ("homology", "cset_homology", "integral homology of the triangulation"),
                                     ("tensor", "cset_tensor", "geometric product X (x) Y"),
                                     ("triangulate", "cset_triangulate", "the simplicial set T(X)")):
        sub = command(cset, "cset", name, handler, help_text)
        sub.add_argument("--x", required=True, help="cube<n>, boundary<n>, box<n>_<i>_<eps>, point, nerve:<graph> or a file")
        if name in ("maps", "tensor"):
            sub.add_argument("--y", required=True)
        if name == "kan":
            sub.add_argument("--d", type=int, default=1, help="largest box dimension")
        if name == "homology":
            sub.add_argument("--degree", type=int, default=1)

    graph = verbs.add_parser("graph", help="graphs and their homotopy").add_subparsers(dest="command", required=True)
    sub = command(graph, "graph", "build", "graph_build", "a named graph")
    sub.add_argument("--name", required=True, help="I<n>, C<n>, K<n> or a file")
    sub = command(graph, "graph", "box", "graph_box", "box product")
    sub.add_argument("--x", required=True)
    sub.add_argument("--y", required=True)
    sub.add_argument("--compare", help="graph to test for isomorphism with the product")
    for name, handler, help_text in (("hom", "graph_hom", "exponential graph"),
                                     ("htpy-classes", "graph_htpy_classes", "homotopy classes of maps"),
                                     ("htpy-equiv", "graph_htpy_equiv", "is a map a homotopy equivalence")):
        sub = command(graph, "graph", name, handler, help_text)
        sub.add_argument("--x", required=True)
        sub.add_argument("--y", required=True)
        if name == "htpy-equiv":
            sub.add_argument("--map", help="comma-separated images; constant by default")

    nerve = verbs.add_parser("nerve", help="cubical nerves of graphs").add_subparsers(dest="command", required=True)
    for name, handler, help_text in (("cubes", "nerve_cubes", "cube counts of N^G_m"),
                                     ("h1", "nerve_h1", "homology of N^G_m"),
                                     ("kan", "nerve_kan", "open box fillers with stabilization")):
        sub = command(nerve, "nerve", name, handler, help_text)
        sub.add_argument("--graph", required=True)
        if name == "h1":
            sub.add_argument("--degree", type=int, default=1)
        if name == "kan":
            sub.add_argument("--d", type=int, default=1)
            sub.add_argument("--levels", type=int, default=DEFAULT_STABILIZATION_STEPS)

    enriched = verbs.add_parser("enriched", help="cubical categories").add_subparsers(dest="command", required=True)
    sub = command(enriched, "enriched", "ho", "enriched_ho", "homotopy category")
    sub.add_argument("--category", required=True, help="graph:<G>,<H>  sk0:poset<n>|z<n>|discrete<n>|arrow  sigma:<cset>")
    sub.add_argument("--nerve", action="store_true", help="also compare with Ho of the coherent nerve")
    sub = command(enriched, "enriched", "htpy-equiv", "enriched_htpy_equiv", "homotopy equivalence in Graph^m")
    sub.add_argument("--x", required=True)
    sub.add_argument("--y", required=True)
    sub.add_argument("--map", help="comma-separated images; constant by default")
    for name, handler, help_text in (("cotensor", "enriched_cotensor", "verify the graph cotensor by a cube"),
                                     ("connection", "enriched_connection", "connection homotopy of the tower")):
        sub = command(enriched, "enriched", name, handler, help_text)
        sub.add_argument("--graph", required=True)
        sub.add_argument("--n", type=int, default=1)
        if name == "cotensor":
            sub.add_argument("--test", nargs="+", default=["I0"], help="test objects Z")
    sub = command(enriched, "enriched", "suspension", "enriched_suspension", "axioms of the suspension category")
    sub.add_argument("--x", required=True)

    dmsl = verbs.add_parser("dmsl", help="resolution and localization checks").add_subparsers(dest="command", required=True)
    sub = command(dmsl, "dmsl", "tower", "dmsl_tower", "resolution conditions of a tower")
    sub.add_argument("--graph", required=True)
    sub.add_argument("--n", type=int, default=2)
    sub.add_argument("--kind", choices=("cotensor", "constant"), default="cotensor")
    sub.add_argument("--test", nargs="*", default=[], help="weak equivalences as <source>-><target>")
    sub.add_argument("--shadow-degree", type=int, choices=(0, 1), default=0)
    sub = command(dmsl, "dmsl", "shadow", "dmsl_shadow", "pi0 shadow of graph localization")
    sub.add_argument("--x", required=True)
    sub.add_argument("--y", required=True)
    sub = command(dmsl, "dmsl", "diagonal", "dmsl_diagonal", "diagonal of the levelwise discrete bicubical set")
    sub.add_argument("--x", required=True)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse, execute and print; the return value is the exit code."""
    try:
        args = build_parser().parse_args(argv)
        logger = get_component_logger(args.component)
        logger.setLevel(DEBUG_LOG_LEVEL if args.verbose else LOGGING_CONFIG['checker_level'])
        outcome = getattr(CubixCommands(args, logger), args.handler)()
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceError, TruncationError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    if args.json:
        print(json.dumps(outcome.payload, default=repr, sort_keys=True, indent=2))
    else:
        print(outcome.text)
    return outcome.code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
