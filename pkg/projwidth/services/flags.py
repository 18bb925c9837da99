"""Flag maps (generalised maps) for signed rotation systems.

A flag is a (vertex, edge, face) incidence.  Three fixed-point-free
involutions act on flags: `a0` changes the vertex, `a1` the edge and `a2`
the face.  Vertices are the orbits of <a1, a2>, edges of <a0, a2> and faces
of <a0, a1>, which makes the dual a matter of swapping `a0` and `a2`.

For a rotation system, flag 2*d + t sits on dart d (numbered vertex by
vertex) on side t: side 0 lies between d and its counterclockwise
successor, side 1 between d and its predecessor.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from projwidth.core.errors import EmbeddingError
from projwidth.models import Edge, EmbeddedGraph


class FlagMap:
    def __init__(self, a0: List[int], a1: List[int], a2: List[int]):
        self.a0 = a0
        self.a1 = a1
        self.a2 = a2

    def __len__(self) -> int:
        return len(self.a0)

    @classmethod
    def from_scheme(cls, g: EmbeddedGraph) -> "FlagMap":
        offsets = dart_offsets(g)
        size = 2 * sum(len(rot) for rot in g.rotations)
        a0, a1, a2 = [0] * size, [0] * size, [0] * size
        for v, rot in enumerate(g.rotations):
            deg = len(rot)
            for pos, e in enumerate(rot):
                d = offsets[v] + pos
                succ = offsets[v] + (pos + 1) % deg
                a2[2 * d] = 2 * d + 1
                a2[2 * d + 1] = 2 * d
                a1[2 * d] = 2 * succ + 1
                a1[2 * succ + 1] = 2 * d
                w, q = g.dart_mate[(v, pos)]
                mate = offsets[w] + q
                if g.edges[e].sign == 1:
                    a0[2 * d] = 2 * mate + 1
                    a0[2 * d + 1] = 2 * mate
                else:
                    a0[2 * d] = 2 * mate
                    a0[2 * d + 1] = 2 * mate + 1
        return cls(a0, a1, a2)

    def dual(self) -> "FlagMap":
        return FlagMap(self.a2, self.a1, self.a0)

    def orbit(self, start: int, generators: Sequence[List[int]]) -> List[int]:
        seen = {start}
        stack = [start]
        out = []
        while stack:
            x = stack.pop()
            out.append(x)
            for gen in generators:
                y = gen[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return out

    def to_scheme(
        self,
        vertex_reps: Sequence[int],
        edge_reps: Sequence[int],
        label: Optional[str] = None,
    ) -> EmbeddedGraph:
        """Read a signed rotation system off the flag map.

        `vertex_reps[i]` is a flag of new vertex i; its rotation starts there
        and advances by a2 . a1.  `edge_reps[j]` is a flag of new edge j, whose
        endpoints are the vertices of that flag and of its a0 image.
        """
        side: Dict[int, int] = {}
        vertex_of: Dict[int, int] = {}
        rot_flags: List[List[int]] = []
        for i, rep in enumerate(vertex_reps):
            x = rep
            ring = []
            while True:
                if x in side:
                    raise EmbeddingError(f"vertex orbit of flag {rep} overlaps an earlier vertex")
                side[x] = 0
                side[self.a2[x]] = 1
                vertex_of[x] = vertex_of[self.a2[x]] = i
                ring.append(x)
                x = self.a2[self.a1[x]]
                if x == rep:
                    break
            rot_flags.append(ring)
        if len(side) != len(self):
            raise EmbeddingError("some flags belong to no vertex")

        edge_of: Dict[int, int] = {}
        edges = []
        for j, rep in enumerate(edge_reps):
            mate = self.a0[rep]
            for x in (rep, self.a2[rep], mate, self.a2[mate]):
                if x in edge_of:
                    raise EmbeddingError(f"edge orbit of flag {rep} overlaps an earlier edge")
                edge_of[x] = j
            sign = 1 if side[rep] != side[mate] else -1
            edges.append(Edge(eid=j, u=vertex_of[rep], v=vertex_of[mate], sign=sign))
        if len(edge_of) != len(self):
            raise EmbeddingError("some flags belong to no edge")

        rotations = tuple(tuple(edge_of[x] for x in ring) for ring in rot_flags)
        return EmbeddedGraph(n=len(vertex_reps), edges=tuple(edges), rotations=rotations, label=label)


def dart_offsets(g: EmbeddedGraph) -> List[int]:
    offsets = []
    total = 0
    for rot in g.rotations:
        offsets.append(total)
        total += len(rot)
    return offsets


def departure_flag(offsets: List[int], dart: Tuple[int, int], flag: int) -> int:
    """The flag a face leaves from when it departs along `dart` with orientation `flag`."""
    v, pos = dart
    return 2 * (offsets[v] + pos) + (1 if flag == 1 else 0)


def first_darts(g: EmbeddedGraph) -> List[Tuple[int, int]]:
    first: Dict[int, Tuple[int, int]] = {}
    for v, rot in enumerate(g.rotations):
        for pos, e in enumerate(rot):
            first.setdefault(e, (v, pos))
    return [first[e] for e in range(g.m)]


def polygon_flag_map(faces: Sequence[Sequence[int]]) -> Tuple[FlagMap, List[int], Dict[Tuple[int, int], List[int]]]:
    """Glue polygons along equal vertex pairs.

    Returns the flag map, the vertex carried by each flag, and for every edge
    key (min, max) the flags at its first side's ends.
    """
    offsets = []
    total = 0
    for face in faces:
        if len(face) < 1:
            raise EmbeddingError("empty face boundary")
        offsets.append(total)
        total += len(face)
    size = 2 * total
    a0, a1, a2 = [0] * size, [-1] * size, [-1] * size
    vertex = [0] * size
    sides: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for f, face in enumerate(faces):
        length = len(face)
        for i in range(length):
            x, y = face[i], face[(i + 1) % length]
            if x == y:
                raise EmbeddingError(f"face {f} repeats vertex {x} on consecutive corners")
            s = offsets[f] + i
            nxt = offsets[f] + (i + 1) % length
            a0[2 * s] = 2 * s + 1
            a0[2 * s + 1] = 2 * s
            a1[2 * s + 1] = 2 * nxt
            a1[2 * nxt] = 2 * s + 1
            vertex[2 * s] = x
            vertex[2 * s + 1] = y
            sides.setdefault((min(x, y), max(x, y)), []).append((2 * s, 2 * s + 1))
    for key, pair in sides.items():
        if len(pair) != 2:
            raise EmbeddingError(f"edge {key} lies on {len(pair)} face sides, expected 2")
        (p0, p1), (q0, q1) = pair
        # glue the flags sitting at the same vertex
        if vertex[p0] == vertex[q0]:
            glue = ((p0, q0), (p1, q1))
        else:
            glue = ((p0, q1), (p1, q0))
        for x, y in glue:
            a2[x] = y
            a2[y] = x
    reps = {key: [pair[0][0], pair[0][1]] for key, pair in sides.items()}
    return FlagMap(a0, a1, a2), vertex, reps


def flags_by_vertex(vertex: Iterable[int]) -> Dict[int, List[int]]:
    out: Dict[int, List[int]] = {}
    for flag, v in enumerate(vertex):
        out.setdefault(v, []).append(flag)
    return out
