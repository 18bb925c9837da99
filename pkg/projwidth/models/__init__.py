from projwidth.models.embedded_graph import Edge, EmbeddedGraph, Face, Graph
from projwidth.models.support_set import SupportSet
from projwidth.models.walk import ClosedWalk, Cycle

__all__ = ["Edge", "EmbeddedGraph", "Face", "Graph", "SupportSet", "ClosedWalk", "Cycle"]
