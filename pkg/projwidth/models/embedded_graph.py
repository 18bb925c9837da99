from functools import cached_property
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

Dart = Tuple[int, int]


class Edge(BaseModel):
    model_config = ConfigDict(frozen=True)

    eid: int
    u: int
    v: int
    sign: Literal[1, -1] = 1

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


class Face(BaseModel):
    """A face boundary as departing (vertex, edge-id) steps.

    Step i leaves `boundary[i][0]` along `boundary[i][1]` and arrives at
    `boundary[i + 1][0]`.  `flags` records the orientation flag of each
    departure, which is what the radial construction needs.
    """

    model_config = ConfigDict(frozen=True)

    boundary: Tuple[Tuple[int, int], ...]
    flags: Tuple[int, ...] = ()
    darts: Tuple[Dart, ...] = ()

    @property
    def length(self) -> int:
        return len(self.boundary)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(v for v, _ in self.boundary)

    @property
    def edge_ids(self) -> Tuple[int, ...]:
        return tuple(e for _, e in self.boundary)

    def edge_between(self, a: int, b: int) -> Optional[int]:
        """Edge id of a boundary step joining a and b, if any."""
        verts = self.vertices
        for i, (x, e) in enumerate(self.boundary):
            y = verts[(i + 1) % len(verts)]
            if {x, y} == {a, b}:
                return e
        return None


class Graph(BaseModel):
    """Abstract multigraph without an embedding."""

    model_config = ConfigDict(frozen=True)

    n: int
    edges: Tuple[Tuple[int, int], ...] = ()
    label: Optional[str] = None

    @model_validator(mode="after")
    def _check_endpoints(self):
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
        return self

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_pairs(self) -> List[Tuple[int, int]]:
        return list(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """Per vertex, the (neighbour, edge index) pairs; loops listed twice."""
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(sorted(a)) for a in adj)


class EmbeddedGraph(BaseModel):
    """A graph with a signed rotation system.

    Rotations list incident edge ids counterclockwise in the local
    orientation of each vertex; a loop appears twice in its vertex's
    rotation.  An edge of sign -1 joins two vertices whose local
    orientations disagree.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    edges: Tuple[Edge, ...] = ()
    rotations: Tuple[Tuple[int, ...], ...] = ()
    label: Optional[str] = None

    @model_validator(mode="after")
    def _check_scheme(self):
        if len(self.rotations) != self.n:
            raise ValueError(f"expected {self.n} rotations, got {len(self.rotations)}")
        seen: Dict[int, List[int]] = {}
        for i, edge in enumerate(self.edges):
            if edge.eid != i:
                raise ValueError(f"edge at position {i} has id {edge.eid}")
            if not (0 <= edge.u < self.n and 0 <= edge.v < self.n):
                raise ValueError(f"edge {i} has an endpoint outside 0..{self.n - 1}")
        for v, rot in enumerate(self.rotations):
            for e in rot:
                if not 0 <= e < len(self.edges):
                    raise ValueError(f"rotation of vertex {v} names unknown edge {e}")
                seen.setdefault(e, []).append(v)
        for edge in self.edges:
            ends = sorted(seen.get(edge.eid, []))
            if ends != sorted([edge.u, edge.v]):
                raise ValueError(
                    f"edge {edge.eid} appears at vertices {ends}, expected {sorted([edge.u, edge.v])}"
                )
        return self

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    @property
    def max_degree(self) -> int:
        return max((len(r) for r in self.rotations), default=0)

    def edge_pairs(self) -> List[Tuple[int, int]]:
        return [(e.u, e.v) for e in self.edges]

    def to_graph(self) -> Graph:
        return Graph(n=self.n, edges=tuple(self.edge_pairs()), label=self.label)

    @cached_property
    def dart_mate(self) -> Dict[Dart, Dart]:
        """The other end of every dart (vertex, position)."""
        occurrences: Dict[int, List[Dart]] = {}
        for v, rot in enumerate(self.rotations):
            for pos, e in enumerate(rot):
                occurrences.setdefault(e, []).append((v, pos))
        mate: Dict[Dart, Dart] = {}
        for first, second in occurrences.values():
            mate[first] = second
            mate[second] = first
        return mate

    @cached_property
    def adjacency(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """Per vertex, the (neighbour, edge id) pairs in id order; loops listed twice."""
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
        for e in self.edges:
            adj[e.u].append((e.v, e.eid))
            adj[e.v].append((e.u, e.eid))
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> List[int]:
        return sorted({w for w, _ in self.adjacency[v]})

    def edges_between(self, a: int, b: int) -> List[int]:
        return [e for w, e in self.adjacency[a] if w == b]

    def has_loops(self) -> bool:
        return any(e.is_loop for e in self.edges)
