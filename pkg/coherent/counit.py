"""
The counit cN(C) -> C: a rigid tuple over the coherent nerve is evaluated
by composing the cubes its simplices pick out.
"""

import logging

from coherent.nerve import NerveSimplex
from coherent.rigidification import RigidTuple, RigidificationCategory
from enriched.category import CubicalCategory
from enriched.functors import CubicalFunctor, degenerate
from models.errors import DomainError

logger = logging.getLogger(__name__)


def _long_cube(s: NerveSimplex):
    """The cube of C(c_0, c_m) at the pair (0, m); pairs (0, 1), ..., (0, m) come first."""
    objs, cubes = s
    return cubes[len(objs) - 2]


def counit_eval(C: CubicalCategory, t: RigidTuple):
    """(s_r, f_r) o ... o (s_1, f_1) evaluated in C; the empty tuple is an identity."""
    (start,), _ = t.source
    if not t.pairs:
        return degenerate(C, start, start, C.identity(start), t.dim)
    result = None
    for s, f in t.pairs:
        objs, _ = s
        if len(objs) < 2:
            raise DomainError(f"{s!r} is not a simplex of positive dimension")
        piece = C.act_morphism(objs[0], objs[-1], _long_cube(s), f)
        result = piece if result is None else C.compose(start, objs[0], objs[-1], piece, result)
    return result


def counit_functor(C: CubicalCategory, R: RigidificationCategory) -> CubicalFunctor:
    """cN(C) -> C on the objects of R, which are vertices of a coherent nerve of C."""
    objects = {v: v[0][0] for v in R.objects}
    return CubicalFunctor(R, C, objects, lambda a, b, t: counit_eval(C, t), f"counit for {C.name}")

