from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


class FamilySpec(BaseModel):
    family: Literal["grid", "mycielski", "fuzz"]
    k: int
    embed: bool = False
    seed: int = 0
    steps: int = Field(default=0, ge=0)
    levels: Optional[int] = None
    base_cycle: Optional[int] = None

    @model_validator(mode="after")
    def _check_ranges(self):
        if self.family in ("grid", "fuzz") and self.k < 2:
            raise ValueError(f"{self.family} needs k >= 2, got {self.k}")
        if self.family == "mycielski":
            if self.k < 2:
                raise ValueError(f"mycielski needs k >= 2, got {self.k}")
            # k levels over the cycle of length 2k+1
            self.levels = self.k
            self.base_cycle = 2 * self.k + 1
        return self

    @property
    def label(self) -> str:
        if self.family == "fuzz":
            return f"fuzz k={self.k} steps={self.steps} seed={self.seed}"
        return f"{self.family} k={self.k}"
