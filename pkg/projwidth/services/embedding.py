from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from projwidth.core.errors import EmbeddingError
from projwidth.core.logging import get_logger
from projwidth.models import Edge, EmbeddedGraph, Face
from projwidth.schemas.validation import ValidationReport
from projwidth.services.flags import (
    FlagMap,
    dart_offsets,
    departure_flag,
    first_darts,
    flags_by_vertex,
    polygon_flag_map,
)

logger = get_logger(__name__)

RadialOrigin = Tuple[str, int]


def trace_faces(g: EmbeddedGraph) -> List[Face]:
    """Trace the faces of a signed rotation system.

    A state is (vertex, position, flag).  Leaving along the edge at the
    position, the flag is multiplied by the edge sign, and the walk continues
    with the successor (flag +1) or predecessor (flag -1) of the arrival
    position.  Each face is found once; the states of its reverse traversal
    are marked as it is traced.
    """
    mate = g.dart_mate
    signs = [e.sign for e in g.edges]
    visited = set()
    faces: List[Face] = []
    for v in range(g.n):
        deg = len(g.rotations[v])
        if deg == 0:
            faces.append(Face(boundary=()))
            continue
        for pos in range(deg):
            for s in (1, -1):
                start = (v, pos, s)
                if start in visited:
                    continue
                boundary, flags, darts = [], [], []
                state = start
                while True:
                    x, p, t = state
                    visited.add(state)
                    e = g.rotations[x][p]
                    w, q = mate[(x, p)]
                    t2 = t * signs[e]
                    visited.add((w, q, -t2))
                    boundary.append((x, e))
                    flags.append(t)
                    darts.append((x, p))
                    state = (w, (q + t2) % len(g.rotations[w]), t2)
                    if state == start:
                        break
                faces.append(Face(boundary=tuple(boundary), flags=tuple(flags), darts=tuple(darts)))
    return faces


def euler_characteristic(g: EmbeddedGraph, faces: Optional[List[Face]] = None) -> int:
    if faces is None:
        faces = trace_faces(g)
    return g.n - g.m + len(faces)


def components(g: EmbeddedGraph) -> List[List[int]]:
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, _ in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(comp)
    return out


def is_connected(g: EmbeddedGraph) -> bool:
    return len(components(g)) <= 1


def sign_product(g: EmbeddedGraph, edge_ids: Sequence[int]) -> int:
    product = 1
    for e in edge_ids:
        product *= g.edges[e].sign
    return product


def _local_flips(g: EmbeddedGraph) -> List[int]:
    """Orientation flips that make a spanning forest all-positive (BFS, ids ascending)."""
    flip = [0] * g.n
    for comp in components(g):
        root = comp[0]
        flip[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, e in g.adjacency[x]:
                if flip[y] == 0:
                    flip[y] = flip[x] * g.edges[e].sign
                    queue.append(y)
    return flip


def _apply_flips(g: EmbeddedGraph, flip: Sequence[int]) -> EmbeddedGraph:
    edges = tuple(
        Edge(eid=e.eid, u=e.u, v=e.v, sign=e.sign * flip[e.u] * flip[e.v]) for e in g.edges
    )
    rotations = tuple(rot if flip[v] == 1 else tuple(reversed(rot)) for v, rot in enumerate(g.rotations))
    return EmbeddedGraph(n=g.n, edges=edges, rotations=rotations, label=g.label)


def flip_vertex(g: EmbeddedGraph, v: int) -> EmbeddedGraph:
    """Reverse the local orientation at v; cycle sign products are unchanged."""
    flip = [1] * g.n
    flip[v] = -1
    return _apply_flips(g, flip)


def normalize_signature(g: EmbeddedGraph) -> EmbeddedGraph:
    if not is_connected(g):
        raise EmbeddingError("normalize_signature needs a connected graph")
    normalized = _apply_flips(g, _local_flips(g))
    logger.debug(f"normalized signature: {sum(1 for e in normalized.edges if e.sign < 0)} negative edges remain")
    return normalized


def is_orientable(g: EmbeddedGraph) -> bool:
    return all(e.sign == 1 for e in _apply_flips(g, _local_flips(g)).edges)


def validate(g: EmbeddedGraph) -> ValidationReport:
    from projwidth.services.topology import is_bipartite

    faces = trace_faces(g)
    chi = euler_characteristic(g, faces)
    messages = []
    connected = is_connected(g)
    if not connected:
        messages.append(f"graph has {len(components(g))} components")
    orientable = is_orientable(g)
    if chi == 2 and orientable:
        messages.append("Euler characteristic 2: planar scheme, no non-contractible cycle")
    elif chi != 1:
        messages.append(f"Euler characteristic {chi} is not that of the projective plane")
    long_faces = [i for i, face in enumerate(faces) if face.length != 4]
    for i in long_faces[:5]:
        messages.append(f"face {i} has length {faces[i].length}")
    is_quad = connected and chi == 1 and not long_faces and g.n > 0
    if is_quad and g.m != 2 * g.n - 2:
        messages.append(f"edge count {g.m} differs from 2n - 2 = {2 * g.n - 2}")
        is_quad = False
    return ValidationReport(
        n=g.n,
        m=g.m,
        face_count=len(faces),
        euler_characteristic=chi,
        orientable=orientable,
        is_quadrangulation=is_quad,
        is_bipartite_graph=is_bipartite(g).bipartite,
        messages=messages,
    )


def is_projective(g: EmbeddedGraph) -> bool:
    return g.n > 0 and is_connected(g) and euler_characteristic(g) == 1


def require_projective(g: EmbeddedGraph):
    if not is_connected(g):
        raise EmbeddingError("scheme is disconnected")
    chi = euler_characteristic(g)
    if chi != 1:
        raise EmbeddingError(f"scheme has Euler characteristic {chi}, not a projective-plane embedding")


def dual(g: EmbeddedGraph) -> EmbeddedGraph:
    """One vertex per face (in trace order), one edge per primal edge (same id)."""
    require_projective(g)
    faces = trace_faces(g)
    fm = FlagMap.from_scheme(g)
    offsets = dart_offsets(g)
    vertex_reps = [fm.a0[departure_flag(offsets, face.darts[0], face.flags[0])] for face in faces]
    edge_reps = [2 * (offsets[v] + pos) for v, pos in first_darts(g)]
    label = f"dual of {g.label}" if g.label else None
    d = fm.dual().to_scheme(vertex_reps, edge_reps, label=label)
    logger.debug(f"dual: {d.n} vertices, {d.m} edges")
    return d


def corner_faces(g: EmbeddedGraph, faces: Optional[List[Face]] = None) -> Dict[Tuple[int, int], Tuple[int, int]]:
    """Map corner (v, p), between positions p and p + 1 at v, to (face index, step index).

    The step index is where v appears on that face's boundary.
    """
    if faces is None:
        faces = trace_faces(g)
    out: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for i, face in enumerate(faces):
        for t, ((v, pos), s) in enumerate(zip(face.darts, face.flags)):
            deg = len(g.rotations[v])
            corner = (v, (pos - 1) % deg if s == 1 else pos)
            if corner in out:
                raise EmbeddingError(f"corner {corner} lies on two faces")
            out[corner] = (i, t)
    return out


def radial(g: EmbeddedGraph) -> Tuple[EmbeddedGraph, List[RadialOrigin]]:
    """Vertex-face incidence graph, one edge per corner.

    Radial vertex v < n is primal vertex v; radial vertex n + i is face i.
    The corner between positions p and p + 1 at v becomes radial edge
    offsets[v] + p.  Around a face the corners follow the boundary; a corner
    left with flag s gets sign -s.
    """
    require_projective(g)
    faces = trace_faces(g)
    offsets = dart_offsets(g)
    where = corner_faces(g, faces)
    if len(where) != sum(len(rot) for rot in g.rotations):
        raise EmbeddingError("some corners lie on no face")
    face_rotations = []
    for face in faces:
        ring = []
        for (v, pos), s in zip(face.darts, face.flags):
            deg = len(g.rotations[v])
            ring.append(offsets[v] + ((pos - 1) % deg if s == 1 else pos))
        face_rotations.append(tuple(ring))
    edges = []
    for v, rot in enumerate(g.rotations):
        for p in range(len(rot)):
            face_index, t = where[(v, p)]
            sign = -faces[face_index].flags[t]
            edges.append(Edge(eid=offsets[v] + p, u=v, v=g.n + face_index, sign=sign))
    rotations = tuple(tuple(offsets[v] + p for p in range(len(rot))) for v, rot in enumerate(g.rotations))
    origin: List[RadialOrigin] = [("vertex", v) for v in range(g.n)] + [("face", i) for i in range(len(faces))]
    r = EmbeddedGraph(
        n=g.n + len(faces),
        edges=tuple(edges),
        rotations=rotations + tuple(face_rotations),
        label=f"radial of {g.label}" if g.label else None,
    )
    return r, origin


def _renumber_edges(g: EmbeddedGraph, drop: int, edges: List[Edge], rotations: List[List[int]], n: int) -> EmbeddedGraph:
    remap = {}
    kept = []
    for e in edges:
        if e.eid == drop:
            continue
        remap[e.eid] = len(kept)
        kept.append(Edge(eid=len(kept), u=e.u, v=e.v, sign=e.sign))
    new_rotations = tuple(tuple(remap[e] for e in rot if e != drop) for rot in rotations)
    return EmbeddedGraph(n=n, edges=tuple(kept), rotations=new_rotations, label=g.label)


def _require_edge(g: EmbeddedGraph, e: int) -> Edge:
    if not 0 <= e < g.m:
        raise EmbeddingError(f"unknown edge id {e}")
    return g.edges[e]


def delete_edge(g: EmbeddedGraph, e: int) -> EmbeddedGraph:
    _require_edge(g, e)
    return _renumber_edges(g, e, list(g.edges), [list(rot) for rot in g.rotations], g.n)


def contract_edge(g: EmbeddedGraph, e: int) -> EmbeddedGraph:
    """Contract a non-loop edge; the merged vertex keeps the smaller id."""
    edge = _require_edge(g, e)
    if edge.is_loop:
        raise EmbeddingError(f"edge {e} is a loop and cannot be contracted")
    keep, absorb = min(edge.u, edge.v), max(edge.u, edge.v)
    if edge.sign == -1:
        g = flip_vertex(g, absorb)
    rot_keep = list(g.rotations[keep])
    rot_absorb = list(g.rotations[absorb])
    i = rot_keep.index(e)
    j = rot_absorb.index(e)
    merged = rot_keep[i + 1:] + rot_keep[:i] + rot_absorb[j + 1:] + rot_absorb[:j]

    def relabel(x: int) -> int:
        if x == absorb:
            x = keep
        return x - 1 if x > absorb else x

    edges = [Edge(eid=f.eid, u=relabel(f.u), v=relabel(f.v), sign=f.sign) for f in g.edges]
    rotations = []
    for v, rot in enumerate(g.rotations):
        if v == absorb:
            continue
        rotations.append(merged if v == keep else list(rot))
    return _renumber_edges(g, e, edges, rotations, g.n - 1)


def canonicalize(g: EmbeddedGraph) -> EmbeddedGraph:
    """Edge ids sorted by (min endpoint, max endpoint, old id); endpoints stored u <= v."""
    order = sorted(g.edges, key=lambda e: (min(e.u, e.v), max(e.u, e.v), e.eid))
    remap = {e.eid: i for i, e in enumerate(order)}
    edges = tuple(Edge(eid=i, u=min(e.u, e.v), v=max(e.u, e.v), sign=e.sign) for i, e in enumerate(order))
    rotations = tuple(tuple(remap[e] for e in rot) for rot in g.rotations)
    return EmbeddedGraph(n=g.n, edges=edges, rotations=rotations, label=g.label)


def canonical_code(g: EmbeddedGraph) -> Tuple[Tuple[int, int, int], ...]:
    """Smallest breadth-first code over all starting darts and orientations."""
    if not is_connected(g):
        raise EmbeddingError("canonical_code needs a connected graph")
    if g.m == 0:
        return ((-1, 0, 0),) * g.n
    mate = g.dart_mate
    best = None
    for v0, rot0 in enumerate(g.rotations):
        for pos0 in range(len(rot0)):
            for o0 in (1, -1):
                label = {v0: 0}
                start = {v0: pos0}
                orient = {v0: o0}
                order = [v0]
                code = []
                idx = 0
                while idx < len(order):
                    x = order[idx]
                    idx += 1
                    deg = len(g.rotations[x])
                    code.append((-1, deg, 0))
                    for k in range(deg):
                        p = (start[x] + orient[x] * k) % deg
                        e = g.rotations[x][p]
                        y, q = mate[(x, p)]
                        sign = g.edges[e].sign
                        if y not in label:
                            label[y] = len(order)
                            order.append(y)
                            start[y] = q
                            orient[y] = orient[x] * sign
                        rel = ((q - start[y]) * orient[y]) % len(g.rotations[y])
                        code.append((label[y], rel, orient[x] * orient[y] * sign))
                code = tuple(code)
                if best is None or code < best:
                    best = code
    return best


def is_isomorphic(g: EmbeddedGraph, h: EmbeddedGraph) -> bool:
    """Embedded isomorphism up to relabelling and local orientation flips."""
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_code(g) == canonical_code(h)


def from_faces(n: int, faces: Sequence[Sequence[int]], label: Optional[str] = None) -> EmbeddedGraph:
    """Build the signed rotation system of a simple graph given by its face boundaries."""
    fm, vertex, edge_keys = polygon_flag_map(faces)
    by_vertex = flags_by_vertex(vertex)
    vertex_reps = []
    for v in range(n):
        flags = by_vertex.get(v)
        if not flags:
            raise EmbeddingError(f"vertex {v} lies on no face")
        orbit = fm.orbit(flags[0], (fm.a1, fm.a2))
        if len(orbit) != len(flags):
            raise EmbeddingError(f"the faces around vertex {v} do not close up into a single disk")
        vertex_reps.append(flags[0])
    if set(by_vertex) - set(range(n)):
        raise EmbeddingError("faces mention vertices outside 0..n-1")
    keys = sorted(edge_keys)
    edge_reps = [edge_keys[key][0] for key in keys]
    return canonicalize(fm.to_scheme(vertex_reps, edge_reps, label=label))
