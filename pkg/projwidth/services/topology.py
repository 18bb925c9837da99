"""Parity and homotopy on projective-plane schemes.

A closed walk is contractible exactly when the product of its edge signs is
+1.  Shortest non-contractible cycles are found by breadth-first search in
the signed double cover: vertex v has copies (v, 0) and (v, 1), positive
edges stay inside a layer and negative edges cross.
"""

from collections import deque
from typing import Dict, Iterable, List, Optional, Tuple, Union

from projwidth.core.errors import EmbeddingError, InvalidParameterError, InvariantError
from projwidth.core.logging import get_logger
from projwidth.models import ClosedWalk, Cycle, EmbeddedGraph, Graph, SupportSet
from projwidth.schemas.topology import BipartiteCheck, WidthReport
from projwidth.services.embedding import (
    dual,
    euler_characteristic,
    is_connected,
    radial,
)

logger = get_logger(__name__)


def is_bipartite(g: Union[EmbeddedGraph, Graph], removed: Iterable[int] = ()) -> BipartiteCheck:
    """Two-colour g - removed, or return an odd closed walk of it."""
    gone = set(removed)
    color: Dict[int, int] = {}
    parent: Dict[int, Tuple[Optional[int], Optional[int]]] = {}
    for root in range(g.n):
        if root in gone or root in color:
            continue
        color[root] = 0
        parent[root] = (None, None)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, e in g.adjacency[x]:
                if y in gone:
                    continue
                if y not in color:
                    color[y] = 1 - color[x]
                    parent[y] = (x, e)
                    queue.append(y)
                elif color[y] == color[x]:
                    walk = _odd_walk(parent, x, y, e)
                    logger.debug(f"odd closed walk of length {walk.length} found")
                    return BipartiteCheck(bipartite=False, odd_walk=walk)
    return BipartiteCheck(bipartite=True, coloring=color)


def _tree_path(parent, v: int) -> Tuple[List[int], List[int]]:
    """Vertices and edges from the BFS root down to v."""
    vertices, edges = [v], []
    while parent[v][0] is not None:
        p, e = parent[v]
        vertices.append(p)
        edges.append(e)
        v = p
    return vertices[::-1], edges[::-1]


def _odd_walk(parent, x: int, y: int, e: int) -> ClosedWalk:
    if x == y:
        return ClosedWalk(vertices=(x,), edge_ids=(e,))
    vx, ex = _tree_path(parent, x)
    vy, ey = _tree_path(parent, y)
    # drop the shared prefix so the walk starts at the branching vertex
    common = 0
    while common + 1 < min(len(vx), len(vy)) and vx[common + 1] == vy[common + 1]:
        common += 1
    vx, ex = vx[common:], ex[common:]
    vy, ey = vy[common:], ey[common:]
    vertices = vx + vy[::-1][:-1]
    edges = ex + [e] + ey[::-1]
    return ClosedWalk(vertices=tuple(vertices), edge_ids=tuple(edges))


def walk_sign(g: EmbeddedGraph, w: ClosedWalk) -> int:
    """Sign product of a closed walk, after checking that it is a walk of g."""
    size = w.length
    product = 1
    for i, e in enumerate(w.edge_ids):
        if not 0 <= e < g.m:
            raise InvalidParameterError(f"walk uses unknown edge {e}")
        edge = g.edges[e]
        a, b = w.vertices[i], w.vertices[(i + 1) % size]
        if {a, b} != {edge.u, edge.v}:
            raise InvalidParameterError(f"edge {e} does not join {a} and {b}")
        product *= edge.sign
    return product


def is_contractible_walk(g: EmbeddedGraph, w: ClosedWalk) -> bool:
    return walk_sign(g, w) == 1


def _surface(g: EmbeddedGraph) -> str:
    if not is_connected(g) or g.n == 0:
        raise EmbeddingError("width computations need a connected scheme")
    chi = euler_characteristic(g)
    if chi == 2:
        return "planar"
    if chi != 1:
        raise EmbeddingError(f"scheme has Euler characteristic {chi}, not a projective-plane embedding")
    return "projective"


def _lifted_distances(g: EmbeddedGraph, source: Tuple[int, int], limit: Optional[int]) -> Dict[Tuple[int, int], int]:
    """BFS distances in the signed double cover, where a negative edge switches layers."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        state = queue.popleft()
        d = dist[state]
        if limit is not None and d + 1 >= limit:
            break
        x, layer = state
        for y, e in g.adjacency[x]:
            nxt = (y, layer if g.edges[e].sign == 1 else 1 - layer)
            if nxt not in dist:
                dist[nxt] = d + 1
                queue.append(nxt)
    return dist


def _shortest_negative_walk(g: EmbeddedGraph, start: int, limit: Optional[int]):
    """Shortest closed walk at `start` with sign product -1, if shorter than `limit`.

    Among equally short walks the lexicographically smallest vertex sequence
    wins, then the smallest edge ids.
    """
    source, target = (start, 0), (start, 1)
    forward = _lifted_distances(g, source, limit)
    if target not in forward:
        return None
    length = forward[target]
    backward = _lifted_distances(g, target, length + 1)
    vertices, edges = [start], []
    state = source
    for step in range(length):
        x, layer = state
        options = []
        for y, e in g.adjacency[x]:
            nxt = (y, layer if g.edges[e].sign == 1 else 1 - layer)
            if backward.get(nxt) == length - step - 1:
                options.append((y, e, nxt))
        y, e, state = min(options)
        vertices.append(y)
        edges.append(e)
    return vertices[:-1], edges


def edge_width(g: EmbeddedGraph) -> Tuple[Optional[int], Optional[Cycle]]:
    """Length and witness of a shortest non-contractible cycle; (None, None) if there is none."""
    if _surface(g) == "planar":
        return None, None
    best = None
    for s in range(g.n):
        found = _shortest_negative_walk(g, s, None if best is None else len(best[1]))
        if found is not None and (best is None or len(found[1]) < len(best[1])):
            best = found
    if best is None:
        return None, None
    vertices, edges = best
    cycle = Cycle(vertices=tuple(vertices), edge_ids=tuple(edges), sign_product=-1, contractible=False)
    logger.info(f"edge-width {cycle.length}, witness {list(cycle.vertices)}")
    return cycle.length, cycle


def dual_edge_width(g: EmbeddedGraph) -> Tuple[Optional[int], Optional[Cycle]]:
    """Edge-width of the dual; witness vertices are face indices, edge ids are primal ids."""
    if _surface(g) == "planar":
        return None, None
    return edge_width(dual(g))


def face_width(g: EmbeddedGraph) -> Tuple[Optional[int], Optional[SupportSet]]:
    """Half the edge-width of the radial graph, with the primal vertices of its witness."""
    if _surface(g) == "planar":
        return None, None
    r, origin = radial(g)
    length, cycle = edge_width(r)
    if length is None:
        return None, None
    if length % 2:
        raise InvariantError(f"radial witness has odd length {length}")
    vertices = list(cycle.vertices)
    if origin[vertices[0]][0] == "face":
        vertices = vertices[1:] + vertices[:1]
    primal = [origin[v][1] for v in vertices[0::2]]
    faces = [origin[v][1] for v in vertices[1::2]]

    from projwidth.services.support import make_support_set

    witness = make_support_set(g, primal, faces, collapse=False)
    logger.info(f"face-width {len(primal)}, witness {primal}")
    return len(primal), witness


def width_report(g: EmbeddedGraph) -> WidthReport:
    ew, witness = edge_width(g)
    dew, _ = dual_edge_width(g)
    fw, fw_witness = face_width(g)
    if ew is not None and dew is not None and ew * dew > g.m:
        raise InvariantError(f"edge-width {ew} times dual edge-width {dew} exceeds {g.m} edges")
    return WidthReport(edge_width=ew, witness=witness, dual_edge_width=dew, face_width=fw, fw_witness=fw_witness)
