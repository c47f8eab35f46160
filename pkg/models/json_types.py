from typing import Dict, List, Literal, TypedDict

# --- CubicalSet payload ---
class CubicalSetDTO(TypedDict):
    max_dim: int
    cubes: Dict[str, List[str]]          # dimension -> identifiers
    faces: Dict[str, Dict[str, str]]     # "d(i,e)" -> {cube: face}
    degens: Dict[str, Dict[str, str]]    # "s(i)" -> {cube: degeneracy}
    conns: Dict[str, Dict[str, str]]     # "g(i,e)" -> {cube: connection}

# --- SimplicialSet payload ---
class SimplicialSetDTO(TypedDict):
    max_dim: int
    simplices: Dict[str, List[str]]
    faces: Dict[str, Dict[str, str]]     # "d(i)" -> {simplex: face}
    degens: Dict[str, Dict[str, str]]    # "s(i)" -> {simplex: degeneracy}

# --- Graph payload (loops omitted, undirected) ---
class GraphDTO(TypedDict):
    vertices: List[str]
    edges: List[List[str]]

# --- Homology payload ---
class HomologyGroupDTO(TypedDict):
    degree: int
    betti: int
    torsion: List[int]

# --- Report payload ---
class CheckResultDTO(TypedDict):
    name: str
    verdict: Literal["pass", "fail", "inconclusive"]
    detail: dict

class ReportDTO(TypedDict):
    title: str
    verdict: Literal["pass", "fail", "inconclusive"]
    results: List[CheckResultDTO]
    notes: List[str]

