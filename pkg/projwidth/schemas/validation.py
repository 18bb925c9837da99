from typing import List

from pydantic import BaseModel


class ValidationReport(BaseModel):
    n: int
    m: int
    face_count: int
    euler_characteristic: int
    orientable: bool
    is_quadrangulation: bool
    is_bipartite_graph: bool
    messages: List[str] = []

    @property
    def projective(self) -> bool:
        return self.euler_characteristic == 1
