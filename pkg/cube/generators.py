import re
from typing import Literal, NamedTuple, Optional, Sequence, Tuple

from models.constants import FACE_TAG, DEGENERACY_TAG, CONNECTION_TAG, WORD_SEPARATOR
from models.errors import DomainError

Kind = Literal["face", "degeneracy", "connection"]
Point = Tuple[int, ...]


class CubeObject(NamedTuple):
    """The poset [1]^dim."""
    dim: int


def cube_object(dim: int) -> CubeObject:
    if dim < 0:
        raise DomainError(f"cube dimension must be >= 0, got {dim}")
    return CubeObject(dim)


class Generator(NamedTuple):
    """
    A generating morphism of the cube category.

    ``ambient`` is the dimension of the larger end: the target of a face,
    the source of a degeneracy or connection.
    """
    kind: Kind
    ambient: int
    index: int
    eps: int = 0

    @property
    def src(self) -> int:
        return self.ambient - 1 if self.kind == "face" else self.ambient

    @property
    def dst(self) -> int:
        return self.ambient if self.kind == "face" else self.ambient - 1

    def apply(self, point: Point, top: int = 1) -> Point:
        """Image of a grid point; ``top`` is the largest coordinate value (1 on [1]^n, m on I_m grids)."""
        i = self.index - 1
        if self.kind == "face":
            return point[:i] + ((top if self.eps else 0),) + point[i:]
        if self.kind == "degeneracy":
            return point[:i] + point[i + 1:]
        merged = max(point[i], point[i + 1]) if self.eps == 0 else min(point[i], point[i + 1])
        return point[:i] + (merged,) + point[i + 2:]

    def notation(self) -> str:
        if self.kind == "face":
            return f"{FACE_TAG}({self.index},{self.eps})"
        if self.kind == "degeneracy":
            return f"{DEGENERACY_TAG}({self.index})"
        return f"{CONNECTION_TAG}({self.index},{self.eps})"


def face(ambient: int, index: int, eps: int) -> Generator:
    if not 1 <= index <= ambient or eps not in (0, 1):
        raise DomainError(f"invalid face d({index},{eps}) into [1]^{ambient}")
    return Generator("face", ambient, index, eps)


def degeneracy(ambient: int, index: int) -> Generator:
    if not 1 <= index <= ambient:
        raise DomainError(f"invalid degeneracy s({index}) out of [1]^{ambient}")
    return Generator("degeneracy", ambient, index, 0)


def connection(ambient: int, index: int, eps: int) -> Generator:
    if not 1 <= index <= ambient - 1 or eps not in (0, 1):
        raise DomainError(f"invalid connection g({index},{eps}) out of [1]^{ambient}")
    return Generator("connection", ambient, index, eps)


# --- dimension-free generator specs, used by identity catalogs and the parser ---
class GeneratorSpec(NamedTuple):
    kind: Kind
    index: int
    eps: int = 0


def realize(word: Sequence[GeneratorSpec], src_dim: int) -> Optional[Tuple[Generator, ...]]:
    """
    Attach ambient dimensions to a word given in composition order.

    Returns None when some index is out of range for the dimension it lands in.
    """
    current = src_dim
    realized = []
    for spec in reversed(word):
        try:
            if spec.kind == "face":
                gen = face(current + 1, spec.index, spec.eps)
            elif spec.kind == "degeneracy":
                gen = degeneracy(current, spec.index)
            else:
                gen = connection(current, spec.index, spec.eps)
        except DomainError:
            return None
        realized.append(gen)
        current = gen.dst
    return tuple(reversed(realized))


_TOKEN = re.compile(r"^\s*([dsg])\s*\(\s*(\d+)\s*(?:,\s*([01])\s*)?\)\s*$")


def parse_word(text: str, src_dim: int) -> Tuple[Generator, ...]:
    """Parse ``d(i,e);s(i);g(i,e)`` (composition order, rightmost applied first)."""
    text = text.strip()
    if not text or text in ("id", "1"):
        return ()
    specs = []
    for token in text.split(WORD_SEPARATOR):
        match = _TOKEN.match(token)
        if match is None:
            raise DomainError(f"cannot parse generator {token!r}")
        tag, index, eps = match.group(1), int(match.group(2)), match.group(3)
        if tag == DEGENERACY_TAG:
            if eps is not None:
                raise DomainError(f"degeneracy takes one index: {token!r}")
            specs.append(GeneratorSpec("degeneracy", index))
        else:
            if eps is None:
                raise DomainError(f"{token!r} needs an (index, eps) pair")
            kind = "face" if tag == FACE_TAG else "connection"
            specs.append(GeneratorSpec(kind, index, int(eps)))
    word = realize(specs, src_dim)
    if word is None:
        raise DomainError(f"word {text!r} does not typecheck from [1]^{src_dim}")
    return word


def format_word(word: Sequence[Generator]) -> str:
    if not word:
        return "id"
    return WORD_SEPARATOR.join(gen.notation() for gen in word)
