"""Support sets: circular vertex sequences whose consecutive vertices share a face.

A pair is adjacent when a boundary edge of its witnessing face joins the two
vertices and opposite when they are diagonal on that face.  Shifting an
opposite pair through a common neighbour on the face keeps the parity and
the homotopy class, so shifting every opposite pair yields a closed walk of
the same parity.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from projwidth.core.errors import InvalidParameterError, InvariantError, NotApplicableError
from projwidth.core.logging import get_logger
from projwidth.models import ClosedWalk, Cycle, EmbeddedGraph, Face, SupportSet
from projwidth.services.embedding import trace_faces
from projwidth.services.topology import walk_sign

logger = get_logger(__name__)


def make_support_set(
    g: EmbeddedGraph,
    vertices: Sequence[int],
    faces: Sequence[int],
    face_list: Optional[List[Face]] = None,
    collapse: bool = True,
) -> SupportSet:
    """Build a support set; pair i is (vertices[i], vertices[i + 1]) on face faces[i].

    With `collapse`, a pair of equal consecutive vertices is dropped together
    with the first of the two entries.
    """
    if len(vertices) != len(faces) or not vertices:
        raise InvalidParameterError("a support set needs one witnessing face per vertex")
    if face_list is None:
        face_list = trace_faces(g)
    verts, fs = list(vertices), list(faces)
    if collapse:
        i = 0
        while len(verts) > 1 and i < len(verts):
            if verts[i] == verts[(i + 1) % len(verts)]:
                del verts[i]
                del fs[i]
                i = max(i - 1, 0)
            else:
                i += 1
    kinds, edges = [], []
    size = len(verts)
    for i in range(size):
        a, b = verts[i], verts[(i + 1) % size]
        if not 0 <= fs[i] < len(face_list):
            raise InvalidParameterError(f"unknown face {fs[i]}")
        face = face_list[fs[i]]
        on_face = face.vertices
        if a not in on_face or b not in on_face:
            raise InvalidParameterError(f"vertices {a} and {b} do not share face {fs[i]}")
        e = face.edge_between(a, b)
        kinds.append("adjacent" if e is not None else "opposite")
        edges.append(e)
    return SupportSet(vertices=tuple(verts), faces=tuple(fs), kinds=tuple(kinds), edges=tuple(edges), host=g)


def support_from_cycle(g: EmbeddedGraph, cycle: ClosedWalk, face_list: Optional[List[Face]] = None) -> SupportSet:
    """Every pair adjacent through the cycle's own edge, witnessed by the first face carrying it."""
    if face_list is None:
        face_list = trace_faces(g)
    first_face: Dict[int, int] = {}
    for i, face in enumerate(face_list):
        for e in face.edge_ids:
            first_face.setdefault(e, i)
    faces = tuple(first_face[e] for e in cycle.edge_ids)
    return SupportSet(
        vertices=cycle.vertices,
        faces=faces,
        kinds=("adjacent",) * cycle.length,
        edges=tuple(cycle.edge_ids),
        host=g,
    )


def common_neighbor(face: Face, a: int, b: int) -> Tuple[int, int, int]:
    """Smallest vertex u of the face with boundary edges a-u and u-b."""
    options = []
    for u in set(face.vertices):
        if u in (a, b):
            continue
        e1 = face.edge_between(a, u)
        e2 = face.edge_between(u, b)
        if e1 is not None and e2 is not None:
            options.append((u, e1, e2))
    if not options:
        raise InvariantError(f"opposite pair ({a}, {b}) has no common neighbour on its face")
    return min(options)


def shift(g: EmbeddedGraph, s: SupportSet, i: int, face_list: Optional[List[Face]] = None) -> SupportSet:
    """Route opposite pair i through the smallest common neighbour on its face."""
    if not 0 <= i < s.size:
        raise InvalidParameterError(f"pair index {i} outside 0..{s.size - 1}")
    if s.kinds[i] != "opposite":
        raise InvalidParameterError(f"pair {i} is adjacent, only opposite pairs can be shifted")
    if face_list is None:
        face_list = trace_faces(g)
    a, b = s.pair(i)
    u, e1, e2 = common_neighbor(face_list[s.faces[i]], a, b)
    f = s.faces[i]
    return SupportSet(
        vertices=s.vertices[: i + 1] + (u,) + s.vertices[i + 1:],
        faces=s.faces[:i] + (f, f) + s.faces[i + 1:],
        kinds=s.kinds[:i] + ("adjacent", "adjacent") + s.kinds[i + 1:],
        edges=s.edges[:i] + (e1, e2) + s.edges[i + 1:],
        host=s.host,
    )


def to_closed_walk(g: EmbeddedGraph, s: SupportSet, face_list: Optional[List[Face]] = None) -> ClosedWalk:
    if face_list is None:
        face_list = trace_faces(g)
    while "opposite" in s.kinds:
        s = shift(g, s, s.kinds.index("opposite"), face_list)
    walk = ClosedWalk(vertices=s.vertices, edge_ids=tuple(s.edges))
    return ClosedWalk(vertices=walk.vertices, edge_ids=walk.edge_ids, sign_product=walk_sign(g, walk))


def is_odd(g: EmbeddedGraph, s: SupportSet, face_list: Optional[List[Face]] = None) -> bool:
    """Parity of s, checked against the homotopy class of its shifted walk.

    The host must be a non-bipartite quadrangulation, where a closed walk is
    odd exactly when it is non-contractible.
    """
    odd = s.order % 2 == 1
    walk = to_closed_walk(g, s, face_list)
    if walk.length % 2 != s.order % 2:
        raise InvariantError(f"shifted walk of length {walk.length} disagrees with order {s.order}")
    if odd != (walk.sign_product == -1):
        raise InvariantError(f"support set parity disagrees with its homotopy class: {s.describe()}")
    return odd


def _faces_by_vertex(face_list: List[Face]) -> Dict[int, List[int]]:
    out: Dict[int, List[int]] = {}
    for i, face in enumerate(face_list):
        for v in dict.fromkeys(face.vertices):
            out.setdefault(v, []).append(i)
    return out


def _chord_face(face_list: List[Face], by_vertex: Dict[int, List[int]], a: int, b: int) -> Optional[int]:
    """A face holding both a and b, preferring one where they are joined by a boundary edge."""
    shared = sorted(set(by_vertex.get(a, ())) & set(by_vertex.get(b, ())))
    for f in shared:
        if face_list[f].edge_between(a, b) is not None:
            return f
    return shared[0] if shared else None


def _split(entries: List[Tuple[int, int]], i: int, j: int, closing: Optional[int]):
    """Cut the circular sequence at positions i < j.

    With `closing` None, vertices i and j are equal and each part closes on
    its own; otherwise both parts close through face `closing`.
    """
    if closing is None:
        first = entries[i:j]
        second = entries[j:] + entries[:i]
    else:
        first = entries[i:j] + [(entries[j][0], closing)]
        second = entries[j:] + entries[:i] + [(entries[i][0], closing)]
    return first, second


def _odd_part(g, parts, face_list) -> SupportSet:
    for verts_faces in parts:
        candidate = make_support_set(g, [v for v, _ in verts_faces], [f for _, f in verts_faces], face_list, collapse=False)
        if candidate.order % 2 == 1:
            return candidate
    raise InvariantError("neither part of a split support set is odd")


def _find_repeat(vertices: Sequence[int]) -> Optional[Tuple[int, int]]:
    seen: Dict[int, int] = {}
    for j, v in enumerate(vertices):
        if v in seen:
            return seen[v], j
        seen[v] = j
    return None


def _find_chord(g: EmbeddedGraph, s: SupportSet, face_list, by_vertex) -> Optional[Tuple[int, int, int]]:
    size = s.size
    for i in range(size):
        for j in range(i + 1, size):
            consecutive = j == i + 1 or (i == 0 and j == size - 1)
            a, b = s.vertices[i], s.vertices[j]
            if consecutive:
                # diagonal on its witnessing face but joined by an edge elsewhere
                if size <= 2 or not g.edges_between(a, b):
                    continue
                pair = i if j == i + 1 else j
                if s.kinds[pair] != "opposite":
                    continue
            face = _chord_face(face_list, by_vertex, a, b)
            if face is not None:
                return i, j, face
    return None


def reduce_support(g: EmbeddedGraph, s: SupportSet, face_list: Optional[List[Face]] = None) -> SupportSet:
    """Shrink an odd support set until its vertices are distinct and only consecutive ones meet."""
    if s.order % 2 == 0:
        raise NotApplicableError(f"reduce_support needs an odd support set, got order {s.order}")
    if face_list is None:
        face_list = trace_faces(g)
    by_vertex = _faces_by_vertex(face_list)
    start_order = s.order
    while True:
        entries = list(zip(s.vertices, s.faces))
        repeat = _find_repeat(s.vertices)
        if repeat is not None:
            i, j = repeat
            s = _odd_part(g, _split(entries, i, j, None), face_list)
            continue
        chord = _find_chord(g, s, face_list, by_vertex)
        if chord is None:
            break
        i, j, face = chord
        s = _odd_part(g, _split(entries, i, j, face), face_list)
    if s.order > start_order:
        raise InvariantError(f"reduction raised the order from {start_order} to {s.order}")
    logger.debug(f"reduced support set: {s.describe()}")
    return s


def reduction_violations(g: EmbeddedGraph, s: SupportSet, face_list: Optional[List[Face]] = None) -> List[str]:
    """Structural conditions a reduced odd support set must meet; empty when all hold."""
    if face_list is None:
        face_list = trace_faces(g)
    by_vertex = _faces_by_vertex(face_list)
    problems = []
    if s.order % 2 == 0:
        problems.append("support set is even")
    if len(set(s.vertices)) != s.size:
        problems.append("vertices repeat")
    elif _find_chord(g, s, face_list, by_vertex) is not None:
        problems.append("two non-consecutive vertices share a face")
    return problems


def extract_odd_cycle(g: EmbeddedGraph, w: ClosedWalk) -> Cycle:
    """An odd cycle on a subset of the vertices of an odd closed walk."""
    if w.length % 2 == 0:
        raise NotApplicableError(f"extract_odd_cycle needs an odd closed walk, got length {w.length}")
    vertices, edges = list(w.vertices), list(w.edge_ids)
    while True:
        size = len(vertices)
        repeat = _find_repeat(vertices)
        if repeat is not None:
            i, j = repeat
            parts = [(vertices[i:j], edges[i:j]), (vertices[j:] + vertices[:i], edges[j:] + edges[:i])]
        else:
            parts = None
            for i in range(size):
                for j in range(i + 2, size):
                    if i == 0 and j == size - 1:
                        continue
                    chords = g.edges_between(vertices[i], vertices[j])
                    if chords:
                        c = min(chords)
                        parts = [
                            (vertices[i:j + 1], edges[i:j] + [c]),
                            (vertices[j:] + vertices[:i + 1], edges[j:] + edges[:i] + [c]),
                        ]
                        break
                if parts:
                    break
            if parts is None:
                break
        vertices, edges = next((v, e) for v, e in parts if len(e) % 2 == 1)
    walk = ClosedWalk(vertices=tuple(vertices), edge_ids=tuple(edges))
    sign = walk_sign(g, walk)
    return Cycle(vertices=walk.vertices, edge_ids=walk.edge_ids, sign_product=sign, contractible=sign == 1)
