from decimal import Decimal
from typing import List, Literal, Tuple

from pydantic import BaseModel

TheoremTag = Literal["odd_cycle", "face_width", "single_edge"]


class TransversalCertificate(BaseModel):
    vertex_set: Tuple[int, ...]
    induced_edge_count: int
    remainder_bipartite: bool
    size_bound: Decimal
    within_bound: bool
    theorem_tag: TheoremTag

    @property
    def size(self) -> int:
        return len(self.vertex_set)

    def to_text(self, induced_edges: List[Tuple[int, int]]) -> str:
        lines = [
            f"theorem: {self.theorem_tag}",
            f"vertices: {' '.join(str(v) for v in self.vertex_set)}",
            f"induced_edges: {' '.join(f'{u}-{v}' for u, v in induced_edges)}",
            f"size: {self.size}",
            f"bound: {self.size_bound}",
            f"within_bound: {str(self.within_bound).lower()}",
            f"remainder_bipartite: {str(self.remainder_bipartite).lower()}",
        ]
        return "\n".join(lines) + "\n"


class MinimizeReport(BaseModel):
    face_width: int
    start_edges: int
    terminal_edges: int
    expected_edges: int
    passed: bool
