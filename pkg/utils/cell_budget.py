import threading

from models.errors import ResourceError


class CellBudget:
    """Count enumerated cells and stop once a cap is exceeded."""
    def __init__(self, max_cells: int, label: str = "enumeration"):
        self.max_cells = int(max_cells)
        self.label = label
        self._lock = threading.Lock()
        self._used = 0

    @property
    def used(self) -> int:
        return self._used

    def charge(self, count: int = 1):
        with self._lock:
            self._used += count
            if self._used > self.max_cells:
                raise ResourceError(f"{self.label} produced more than {self.max_cells} cells", self.max_cells)

    def child(self, label: str) -> "CellBudget":
        """Fresh budget with the same cap for a nested enumeration."""
        return CellBudget(self.max_cells, label)


def default_budget(label: str = "enumeration") -> CellBudget:
    from config.cubix_config import CUBIX_CONFIG
    return CellBudget(CUBIX_CONFIG.max_cells, label)
