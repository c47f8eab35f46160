"""
The cubical identities as data.

Each identity relates two words (composition order) in dimension-free
generator specs. The same catalog checks vertex tables covariantly and the
action tables of a cubical set contravariantly.
"""

import itertools
import logging
from typing import Callable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from cube.box_morphism import from_word
from cube.generators import Generator, GeneratorSpec, format_word, realize
from models.verdicts import Report

logger = logging.getLogger(__name__)


def D(i: int, e: int) -> GeneratorSpec:
    return GeneratorSpec("face", i, e)


def S(i: int) -> GeneratorSpec:
    return GeneratorSpec("degeneracy", i)


def G(i: int, e: int) -> GeneratorSpec:
    return GeneratorSpec("connection", i, e)


Word = Tuple[GeneratorSpec, ...]


class CubicalIdentity(NamedTuple):
    name: str
    applies: Callable[[int, int, int, int], bool]
    lhs: Callable[[int, int, int, int], Word]
    rhs: Callable[[int, int, int, int], Word]


# Parameters are (i, j, e, e2); lhs and rhs are in composition order.
CATALOG: Tuple[CubicalIdentity, ...] = (
    CubicalIdentity("face-face", lambda i, j, e, e2: j <= i,
                    lambda i, j, e, e2: (D(j, e2), D(i, e)),
                    lambda i, j, e, e2: (D(i + 1, e), D(j, e2))),
    CubicalIdentity("degeneracy-face below", lambda i, j, e, e2: j < i,
                    lambda i, j, e, e2: (S(j), D(i, e)),
                    lambda i, j, e, e2: (D(i - 1, e), S(j))),
    CubicalIdentity("degeneracy-face cancel", lambda i, j, e, e2: j == i,
                    lambda i, j, e, e2: (S(j), D(i, e)),
                    lambda i, j, e, e2: ()),
    CubicalIdentity("degeneracy-face above", lambda i, j, e, e2: j > i,
                    lambda i, j, e, e2: (S(j), D(i, e)),
                    lambda i, j, e, e2: (D(i, e), S(j - 1))),
    CubicalIdentity("degeneracy-degeneracy", lambda i, j, e, e2: j <= i,
                    lambda i, j, e, e2: (S(i), S(j)),
                    lambda i, j, e, e2: (S(j), S(i + 1))),
    CubicalIdentity("connection-connection apart", lambda i, j, e, e2: j > i,
                    lambda i, j, e, e2: (G(j, e2), G(i, e)),
                    lambda i, j, e, e2: (G(i, e), G(j + 1, e2))),
    CubicalIdentity("connection-connection associative", lambda i, j, e, e2: j == i and e2 == e,
                    lambda i, j, e, e2: (G(i, e), G(i, e)),
                    lambda i, j, e, e2: (G(i, e), G(i + 1, e))),
    CubicalIdentity("connection-face below", lambda i, j, e, e2: j < i - 1,
                    lambda i, j, e, e2: (G(j, e2), D(i, e)),
                    lambda i, j, e, e2: (D(i - 1, e), G(j, e2))),
    CubicalIdentity("connection-face unit", lambda i, j, e, e2: j in (i - 1, i) and e2 == e,
                    lambda i, j, e, e2: (G(j, e2), D(i, e)),
                    lambda i, j, e, e2: ()),
    CubicalIdentity("connection-face absorb", lambda i, j, e, e2: j in (i - 1, i) and e2 == 1 - e,
                    lambda i, j, e, e2: (G(j, e2), D(i, e)),
                    lambda i, j, e, e2: (D(j, e), S(j))),
    CubicalIdentity("connection-face above", lambda i, j, e, e2: j > i,
                    lambda i, j, e, e2: (G(j, e2), D(i, e)),
                    lambda i, j, e, e2: (D(i, e), G(j - 1, e2))),
    CubicalIdentity("degeneracy-connection below", lambda i, j, e, e2: j < i,
                    lambda i, j, e, e2: (S(j), G(i, e)),
                    lambda i, j, e, e2: (G(i - 1, e), S(j))),
    CubicalIdentity("degeneracy-connection diagonal", lambda i, j, e, e2: j == i,
                    lambda i, j, e, e2: (S(j), G(i, e)),
                    lambda i, j, e, e2: (S(i), S(i))),
    CubicalIdentity("degeneracy-connection above", lambda i, j, e, e2: j > i,
                    lambda i, j, e, e2: (S(j), G(i, e)),
                    lambda i, j, e, e2: (G(i, e), S(j + 1))),
)


class IdentityInstance(NamedTuple):
    name: str
    src: int
    dst: int
    lhs: Tuple[Generator, ...]
    rhs: Tuple[Generator, ...]

    def describe(self) -> str:
        return f"{self.name}: {format_word(self.lhs)} = {format_word(self.rhs)} on [1]^{self.src}"


def _ambient(word: Sequence[Generator], src: int) -> int:
    return max([src] + [gen.ambient for gen in word])


def instances(max_dim: int) -> Iterator[IdentityInstance]:
    """Every valid instance whose intermediate dimensions stay within max_dim."""
    seen = set()
    for ident in CATALOG:
        for i, j in itertools.product(range(1, max_dim + 1), repeat=2):
            for e, e2 in itertools.product((0, 1), repeat=2):
                if not ident.applies(i, j, e, e2):
                    continue
                lhs_spec, rhs_spec = ident.lhs(i, j, e, e2), ident.rhs(i, j, e, e2)
                for src in range(max_dim + 1):
                    lhs = realize(lhs_spec, src)
                    rhs = realize(rhs_spec, src)
                    if lhs is None or rhs is None:
                        continue
                    dst = lhs[0].dst if lhs else src
                    if (rhs[0].dst if rhs else src) != dst:
                        continue
                    if max(_ambient(lhs, src), _ambient(rhs, src)) > max_dim:
                        continue
                    key = (ident.name, src, lhs, rhs)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield IdentityInstance(ident.name, src, dst, lhs, rhs)


def check_table_identities(max_dim: int = 5) -> Report:
    """Both sides of every identity instance must have the same vertex table."""
    report = Report(f"cubical identities on vertex tables, dimensions <= {max_dim}")
    count = 0
    for inst in instances(max_dim):
        count += 1
        if from_word(inst.lhs, inst.src) != from_word(inst.rhs, inst.src):
            report.add(inst.name, "fail", instance=inst.describe())
    report.add("instances checked", "pass", count=count)
    logger.info("checked %d identity instances, %d violations", count, len(report.failures))
    return report


def check_action_identities(act_word: Callable[[object, Tuple[Generator, ...]], Optional[object]],
                            cubes_of_dim: Callable[[int], Sequence[object]],
                            max_dim: int) -> List[str]:
    """
    Contravariant check: for each instance with source s and target t, every
    t-cube x must satisfy x.lhs = x.rhs. act_word applies a word on the right.
    """
    violations = []
    for inst in instances(max_dim):
        for x in cubes_of_dim(inst.dst):
            left, right = act_word(x, inst.lhs), act_word(x, inst.rhs)
            if left != right:
                violations.append(f"{inst.describe()} fails at {x!r}: {left!r} != {right!r}")
    return violations
