from typing import Dict, Optional

from pydantic import BaseModel

from projwidth.models import ClosedWalk, Cycle, SupportSet


class BipartiteCheck(BaseModel):
    bipartite: bool
    coloring: Optional[Dict[int, int]] = None
    odd_walk: Optional[ClosedWalk] = None


class WidthReport(BaseModel):
    """Edge-width, dual edge-width and face-width; None encodes an infinite width."""

    edge_width: Optional[int] = None
    witness: Optional[Cycle] = None
    dual_edge_width: Optional[int] = None
    face_width: Optional[int] = None
    fw_witness: Optional[SupportSet] = None
