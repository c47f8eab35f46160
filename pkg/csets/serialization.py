import json
import re
from typing import Dict, Hashable

from csets.cubical_set import CubicalSet
from models.errors import DomainError
from models.json_types import CubicalSetDTO

_OPERATOR = re.compile(r"^([dsg])\((\d+)(?:,([01]))?\)$")


def cube_labels(X) -> Dict[Hashable, str]:
    """String identifiers: string keys are kept, other keys become c<dim>_<n>."""
    labels = {}
    taken = set()
    for k in range(X.max_dim + 1):
        for n, x in enumerate(X.cells(k)):
            label = x if isinstance(x, str) else f"c{k}_{n}"
            if label in taken:
                label = f"c{k}_{n}"
            taken.add(label)
            labels[x] = label
    return labels


def cubical_set_to_json(X: CubicalSet) -> CubicalSetDTO:
    labels = cube_labels(X)
    faces: Dict[str, Dict[str, str]] = {}
    degens: Dict[str, Dict[str, str]] = {}
    conns: Dict[str, Dict[str, str]] = {}
    for k in range(X.max_dim + 1):
        for x in X.cubes(k):
            for i in range(1, k + 1):
                for e in (0, 1):
                    faces.setdefault(f"d({i},{e})", {})[labels[x]] = labels[X.face(x, i, e)]
            if k < X.max_dim:
                for i in range(1, k + 2):
                    degens.setdefault(f"s({i})", {})[labels[x]] = labels[X.degen(x, i)]
                for i in range(1, k + 1):
                    for e in (0, 1):
                        conns.setdefault(f"g({i},{e})", {})[labels[x]] = labels[X.conn(x, i, e)]
    return {
        "max_dim": X.max_dim,
        "cubes": {str(k): [labels[x] for x in X.cubes(k)] for k in range(X.max_dim + 1)},
        "faces": faces,
        "degens": degens,
        "conns": conns,
    }


def _operator(notation: str):
    match = _OPERATOR.match(notation.replace(" ", ""))
    if match is None:
        raise DomainError(f"unknown operator {notation!r}")
    return match.group(1), int(match.group(2)), int(match.group(3) or 0)


def cubical_set_from_json(payload: dict, name: str = "") -> CubicalSet:
    try:
        max_dim = int(payload["max_dim"])
        cubes = {int(k): [str(x) for x in layer] for k, layer in payload["cubes"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed cubical set payload: {exc}")
    dims = {x: k for k, layer in cubes.items() for x in layer}
    tables = {"d": {}, "s": {}, "g": {}}
    for section, tag in (("faces", "d"), ("degens", "s"), ("conns", "g")):
        for notation, images in payload.get(section, {}).items():
            kind, i, e = _operator(notation)
            if kind != tag:
                raise DomainError(f"{notation!r} does not belong in {section}")
            for x, y in images.items():
                tables[tag][(x, i, e)] = y

    faces, degens, conns = {}, {}, {}
    try:
        for x, k in dims.items():
            faces[x] = tuple(tables["d"][(x, i, e)] for i in range(1, k + 1) for e in (0, 1))
            if k < max_dim:
                degens[x] = tuple(tables["s"][(x, i, 0)] for i in range(1, k + 2))
                conns[x] = tuple(tables["g"][(x, i, e)] for i in range(1, k + 1) for e in (0, 1))
    except KeyError as exc:
        raise DomainError(f"action table is missing an entry for {exc.args[0]}")
    return CubicalSet(max_dim, cubes, faces, degens, conns, name)


def load_cubical_set(text: str, name: str = "") -> CubicalSet:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    return cubical_set_from_json(payload, name)
