from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, model_validator


class Precoloring(BaseModel):
    assignments: Dict[int, Literal[1, 2, 3]]

    @model_validator(mode="after")
    def _check_size(self):
        if len(self.assignments) > 3:
            raise ValueError("a precoloring fixes at most three vertices")
        return self


class Obstruction(BaseModel):
    """Witnesses for the four conditions that block a precoloring extension."""

    triple: Tuple[int, int, int]
    side: Literal[0, 1]
    colors: Tuple[int, int, int]
    common_neighbors: Dict[str, int]


class ExtensionResult(BaseModel):
    coloring: Optional[Dict[int, int]] = None
    obstruction: Optional[Obstruction] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        if (self.coloring is None) == (self.obstruction is None):
            raise ValueError("exactly one of coloring and obstruction is returned")
        return self


class ChromaticResult(BaseModel):
    three_colorable: bool
    three_coloring: Optional[Dict[int, int]] = None
    four_coloring: Optional[Dict[int, int]] = None


class OctResult(BaseModel):
    status: Literal["ok", "cap", "bipartite"]
    vertices: Optional[List[int]] = None

    @property
    def size(self) -> Optional[int]:
        return None if self.vertices is None else len(self.vertices)
