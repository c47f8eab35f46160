class CubixError(Exception):
    """Base class for errors raised by cubix operations."""


class DomainError(CubixError, ValueError):
    """Invalid input: bad index, dimension mismatch, non-monotone map, bad JSON."""


class ResourceError(CubixError):
    """An enumeration would exceed the configured cell budget."""

    def __init__(self, message: str, bound: int):
        super().__init__(f"{message} (budget {bound} cells)")
        self.bound = bound


class TruncationError(CubixError):
    """A statement needs cubes above the available truncation."""

    def __init__(self, message: str, needed_dim: int):
        super().__init__(f"{message} (needs dimension {needed_dim})")
        self.needed_dim = needed_dim
