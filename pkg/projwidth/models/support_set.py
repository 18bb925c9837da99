from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from projwidth.models.embedded_graph import EmbeddedGraph

PairKind = Literal["adjacent", "opposite"]


class SupportSet(BaseModel):
    """Circular vertex sequence whose consecutive vertices share a face.

    Pair i is (vertices[i], vertices[i + 1]) read circularly; it is witnessed
    by face `faces[i]` of the host and is adjacent along that face (through
    boundary edge `edges[i]`) or opposite on it.
    """

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...]
    faces: Tuple[int, ...]
    kinds: Tuple[PairKind, ...]
    edges: Tuple[Optional[int], ...]
    host: EmbeddedGraph = Field(repr=False)

    @model_validator(mode="after")
    def _check_pairs(self):
        size = len(self.vertices)
        if not (len(self.faces) == len(self.kinds) == len(self.edges) == size):
            raise ValueError("one face, kind and edge entry is needed per consecutive pair")
        for kind, edge in zip(self.kinds, self.edges):
            if (kind == "adjacent") != (edge is not None):
                raise ValueError("adjacent pairs carry their boundary edge, opposite pairs none")
        return self

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def order(self) -> int:
        return sum(1 for kind in self.kinds if kind == "adjacent")

    @property
    def parity(self) -> Literal["even", "odd"]:
        return "odd" if self.order % 2 else "even"

    def pair(self, i: int) -> Tuple[int, int]:
        return self.vertices[i], self.vertices[(i + 1) % self.size]

    def describe(self) -> str:
        parts = []
        for v, kind in zip(self.vertices, self.kinds):
            parts.append(f"{v} ({'adj' if kind == 'adjacent' else 'opp'})")
        return f"S: {' '.join(parts)} | order={self.order} size={self.size} parity={self.parity}"
