from typing import Optional

from projwidth.core.config import get_settings
from projwidth.core.errors import CapExceeded


class StepBudget:
    """Cooperative cancellation for long searches.

    Searches call `tick()` once per elementary step; the budget raises
    `CapExceeded` instead of letting a search run unbounded.
    """

    def __init__(self, limit: Optional[int] = None, label: str = "search"):
        self.limit = limit if limit is not None else get_settings().step_budget
        self.label = label
        self.used = 0

    def tick(self, steps: int = 1):
        self.used += steps
        if self.used > self.limit:
            raise CapExceeded(f"{self.label}: step budget of {self.limit} exceeded")
