from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class ClosedWalk(BaseModel):
    """A closed walk: edge_ids[i] joins vertices[i] and vertices[i + 1] (cyclically)."""

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...]
    edge_ids: Tuple[int, ...]
    sign_product: Optional[Literal[1, -1]] = None

    @model_validator(mode="after")
    def _check_lengths(self):
        if len(self.vertices) != len(self.edge_ids):
            raise ValueError("a closed walk needs one edge per vertex")
        return self

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    @property
    def parity(self) -> Literal["even", "odd"]:
        return "odd" if self.length % 2 else "even"


class Cycle(ClosedWalk):
    contractible: Optional[bool] = None

    @model_validator(mode="after")
    def _check_distinct(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"cycle repeats a vertex: {self.vertices}")
        return self
