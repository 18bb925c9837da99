"""Constructive odd cycle transversals of non-bipartite projective quadrangulations.

Every certificate returned here has had its remainder re-checked bipartite;
a failure raises InvariantError instead of producing a certificate.
"""

import random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from projwidth.core.errors import InvariantError, NotApplicableError
from projwidth.core.logging import get_logger
from projwidth.models import ClosedWalk, Cycle, EmbeddedGraph, Face, SupportSet
from projwidth.schemas.certificate import MinimizeReport, TheoremTag, TransversalCertificate
from projwidth.services import bounds
from projwidth.services.embedding import (
    contract_edge,
    corner_faces,
    delete_edge,
    euler_characteristic,
    is_connected,
    trace_faces,
    validate,
)
from projwidth.services.support import (
    common_neighbor,
    extract_odd_cycle,
    is_odd,
    make_support_set,
    reduce_support,
    support_from_cycle,
)
from projwidth.services.topology import (
    dual_edge_width,
    edge_width,
    face_width,
    is_bipartite,
    walk_sign,
)

logger = get_logger(__name__)


def require_odd_quadrangulation(g: EmbeddedGraph):
    report = validate(g)
    if not report.is_quadrangulation:
        detail = "; ".join(report.messages) or "faces are not all of length 4"
        raise NotApplicableError(f"not a projective quadrangulation: {detail}")
    if report.is_bipartite_graph:
        raise NotApplicableError("graph is bipartite, it has no odd cycle to hit")


def induced_edges(g: EmbeddedGraph, vertices: Iterable[int]) -> List[Tuple[int, int]]:
    inside = set(vertices)
    return [(e.u, e.v) for e in g.edges if e.u in inside and e.v in inside]


def _certify(
    g: EmbeddedGraph,
    vertices: Iterable[int],
    tag: TheoremTag,
    bound,
    within: bool,
) -> TransversalCertificate:
    chosen = tuple(sorted(set(vertices)))
    check = is_bipartite(g, removed=chosen)
    if not check.bipartite:
        raise InvariantError(f"{tag} transversal {list(chosen)} leaves an odd closed walk {list(check.odd_walk.vertices)}")
    cert = TransversalCertificate(
        vertex_set=chosen,
        induced_edge_count=len(induced_edges(g, chosen)),
        remainder_bipartite=True,
        size_bound=bound,
        within_bound=within,
        theorem_tag=tag,
    )
    if not within:
        logger.warning(f"{tag} transversal of size {cert.size} exceeds its bound {bound}")
    logger.info(f"{tag} transversal of size {cert.size} (bound {bound})")
    return cert


def _dual_witness(g: EmbeddedGraph) -> Tuple[List[int], List[int]]:
    """Faces f_0..f_{k-1} and edges e_0..e_{k-1} of a shortest non-contractible dual cycle; e_i lies on f_i and f_{i+1}."""
    length, cycle = dual_edge_width(g)
    if length is None:
        raise InvariantError("a non-bipartite projective quadrangulation must have a non-contractible dual cycle")
    return list(cycle.vertices), list(cycle.edge_ids)


def _dual_walk_cycle(g: EmbeddedGraph, face_list: List[Face], faces: List[int], edges: List[int]) -> Cycle:
    """Walk the faces of a non-contractible dual cycle, choosing one endpoint of each crossed edge."""
    k = len(faces)
    first = g.edges[edges[0]]
    walk_vertices = [min(first.u, first.v)]
    walk_edges: List[int] = []
    prev = walk_vertices[0]
    for i in range(1, k + 1):
        face = face_list[faces[i % k]]
        e = g.edges[edges[i % k]]
        if prev in (e.u, e.v):
            continue
        options = sorted((x, face.edge_between(prev, x)) for x in (e.u, e.v) if face.edge_between(prev, x) is not None)
        if not options:
            raise InvariantError(f"face {faces[i % k]} has no endpoint of edge {e.eid} next to {prev}")
        cur, step = options[0]
        walk_edges.append(step)
        walk_vertices.append(cur)
        prev = cur
    if len(walk_vertices) > 1 and walk_vertices[-1] == walk_vertices[0]:
        walk_vertices.pop()
    elif walk_vertices[-1] != walk_vertices[0]:
        walk_edges.append(edges[0])
    walk = ClosedWalk(vertices=tuple(walk_vertices), edge_ids=tuple(walk_edges))
    if walk_sign(g, walk) != -1:
        raise InvariantError(f"walk {walk_vertices} along the dual cycle is contractible")
    if walk.length > k + 1:
        raise InvariantError(f"walk of length {walk.length} is longer than dual edge-width {k} plus one")
    return extract_odd_cycle(g, walk)


def short_odd_cycle(g: EmbeddedGraph) -> Cycle:
    """An odd cycle of length at most (1 + sqrt(8n - 7)) / 2.

    The cycle read off a shortest dual cycle has length at most ell* + 1,
    which is within the bound only when ell* is small; the shortest odd
    cycle itself always is, since ell <= ell* + 1 <= 1 + (2n - 2) / ell.
    The dual-walk cycle is returned unless the shortest odd cycle is
    strictly shorter.
    """
    require_odd_quadrangulation(g)
    face_list = trace_faces(g)
    ell, witness = edge_width(g)
    faces, edges = _dual_witness(g)
    k = len(faces)
    if ell * k > g.m:
        raise InvariantError(f"dual edge-width {k} exceeds (2n - 2) / {ell}")

    cycle = _dual_walk_cycle(g, face_list, faces, edges)
    if witness.length < cycle.length:
        logger.debug(f"dual walk gave length {cycle.length}, shortest odd cycle has {witness.length}")
        cycle = witness
    if not bounds.ew_ok(g.n, cycle.length):
        raise InvariantError(f"odd cycle of length {cycle.length} exceeds {bounds.ew_bound(g.n)}")
    logger.info(f"short odd cycle of length {cycle.length} from dual edge-width {k}")
    return cycle


def odd_cycle_transversal(g: EmbeddedGraph) -> TransversalCertificate:
    cycle = short_odd_cycle(g)
    size = len(set(cycle.vertices))
    return _certify(g, cycle.vertices, "odd_cycle", bounds.ew_bound(g.n), bounds.ew_ok(g.n, size))


def facewidth_transversal(g: EmbeddedGraph) -> TransversalCertificate:
    """The vertices of a reduced face-width witness."""
    require_odd_quadrangulation(g)
    face_list = trace_faces(g)
    _, witness = face_width(g)
    if not is_odd(g, witness, face_list):
        raise InvariantError(f"face-width witness is even: {witness.describe()}")
    reduced = reduce_support(g, witness, face_list)
    size = len(set(reduced.vertices))
    return _certify(g, reduced.vertices, "face_width", bounds.fw_bound(g.n), bounds.fw_ok(g.n, size))


def _fan(g: EmbeddedGraph, corners, v: int, start: int, end: int) -> List[Tuple[int, int]]:
    """Neighbours of v from `start` up to (not including) `end` in rotation order, with the face of each corner."""
    rot = g.rotations[v]
    deg = len(rot)
    around = [g.edges[e].other(v) for e in rot]
    if start == end:
        return []
    if start not in around:
        raise InvariantError(f"{start} is not a neighbour of {v}")
    p = around.index(start)
    out = []
    for _ in range(deg):
        if around[p] == end:
            return out
        out.append((around[p], corners[(v, p)][0]))
        p = (p + 1) % deg
    raise InvariantError(f"{end} is not a neighbour of {v}")


def _merge_adjacent_pairs(g: EmbeddedGraph, s: SupportSet, face_list: List[Face], corners) -> SupportSet:
    """Replace the vertices strictly inside the first two adjacent pairs by fans of their neighbours."""
    adjacent = [i for i, kind in enumerate(s.kinds) if kind == "adjacent"]
    i, j = adjacent[0], adjacent[1]
    entries = list(zip(s.vertices, s.faces))
    entries = entries[i:] + entries[:i]
    j -= i
    vs = [v for v, _ in entries]
    fs = [f for _, f in entries]
    size = len(entries)
    meet = {t: common_neighbor(face_list[fs[t]], vs[t], vs[t + 1])[0] for t in range(1, j)}
    merged: List[Tuple[int, int]] = []
    for t in range(1, j + 1):
        start = vs[0] if t == 1 else meet[t - 1]
        end = vs[j + 1] if t == j else meet[t]
        merged.extend(_fan(g, corners, vs[t], start, end))
    merged.append(entries[j + 1])
    merged.extend(entries[j + 2:size])
    out = make_support_set(g, [v for v, _ in merged], [f for _, f in merged], face_list)
    if out.order != s.order - 2:
        raise InvariantError(f"fan replacement changed the order from {s.order} to {out.order}")
    return out


def _single_edge_certificate(g: EmbeddedGraph, s: SupportSet, face_list: List[Face]) -> TransversalCertificate:
    reduced = reduce_support(g, s, face_list)
    if reduced.order != 1:
        raise InvariantError(f"reduced support set has order {reduced.order}, expected 1")
    chosen = sorted(set(reduced.vertices))
    found = induced_edges(g, chosen)
    if len(found) != 1:
        raise InvariantError(f"transversal {chosen} induces {len(found)} edges, expected exactly one")
    bound = bounds.single_edge_bound(g.n, g.max_degree)
    return _certify(g, chosen, "single_edge", bound, bounds.single_edge_ok(g.n, g.max_degree, len(chosen)))


def single_edge_transversal_from_support(g: EmbeddedGraph, s: SupportSet) -> TransversalCertificate:
    """A transversal inside the closed neighbourhood of an odd support set that induces one edge."""
    face_list = trace_faces(g)
    if not is_odd(g, s, face_list):
        raise NotApplicableError(f"support set must be odd: {s.describe()}")
    corners = corner_faces(g, face_list)
    allowed = set(s.vertices)
    for v in s.vertices:
        allowed.update(g.neighbors(v))
    current = s
    while current.order > 1:
        current = _merge_adjacent_pairs(g, current, face_list, corners)
    cert = _single_edge_certificate(g, current, face_list)
    if not set(cert.vertex_set) <= allowed:
        raise InvariantError("single-edge transversal left the closed neighbourhood of the support set")
    return cert


def _opposite_support_set(g: EmbeddedGraph, face_list: List[Face]) -> SupportSet:
    """Along a shortest dual cycle, keep v_{i-1} when it lies on e_i and take its opposite vertex on f_i otherwise."""
    faces, edges = _dual_witness(g)
    k = len(faces)
    first = g.edges[edges[0]]
    chosen = [min(first.u, first.v)]
    for i in range(1, k):
        prev = chosen[-1]
        e = g.edges[edges[i]]
        if prev in (e.u, e.v):
            chosen.append(prev)
            continue
        ring = face_list[faces[i]].vertices
        opposite = ring[(ring.index(prev) + 2) % len(ring)]
        if opposite not in (e.u, e.v):
            raise InvariantError(f"vertex opposite {prev} on face {faces[i]} is not on edge {e.eid}")
        chosen.append(opposite)
    witness_faces = [faces[(i + 1) % k] for i in range(k)]
    s = make_support_set(g, chosen, witness_faces, face_list)
    if s.order % 2 == 0:
        raise InvariantError(f"support set along the dual cycle is even: {s.describe()}")
    return s


def single_edge_transversal(g: EmbeddedGraph) -> TransversalCertificate:
    """A transversal of size at most sqrt(2 * max_degree * n) inducing a single edge."""
    require_odd_quadrangulation(g)
    face_list = trace_faces(g)
    ell, cycle = edge_width(g)
    if bounds.short_cycle_branch(g.n, g.max_degree, ell):
        logger.info(f"single-edge transversal from the neighbourhood of a shortest odd cycle (length {ell})")
        return single_edge_transversal_from_support(g, support_from_cycle(g, cycle, face_list))
    logger.info(f"single-edge transversal from a shortest dual cycle (edge-width {ell})")
    return _single_edge_certificate(g, _opposite_support_set(g, face_list), face_list)


def _projective_face_width(h: EmbeddedGraph) -> Optional[int]:
    if h.n == 0 or not is_connected(h) or euler_characteristic(h) != 1:
        return None
    return face_width(h)[0]


def minimize_facewidth(g: EmbeddedGraph, order_seed: Optional[int] = None) -> EmbeddedGraph:
    """Delete or contract edges while the face-width stays put.

    Edits are tried per edge id, deletion before contraction, restarting after
    every accepted edit; `order_seed` shuffles that order.
    """
    k = _projective_face_width(g)
    if k is None:
        raise NotApplicableError("face-width 0: the scheme has no non-contractible curve")
    rng = random.Random(order_seed) if order_seed is not None else None
    current = g
    steps = 0
    while True:
        edits = [(e, op) for e in range(current.m) for op in ("delete", "contract")]
        if rng is not None:
            rng.shuffle(edits)
        for e, op in edits:
            if op == "contract" and current.edges[e].is_loop:
                continue
            candidate = delete_edge(current, e) if op == "delete" else contract_edge(current, e)
            if _projective_face_width(candidate) == k:
                logger.debug(f"{op} edge {e}: {candidate.m} edges remain at face-width {k}")
                current = candidate
                steps += 1
                break
        else:
            break
    logger.info(f"minimized to {current.m} edges at face-width {k} after {steps} edits")
    return current


def minimize_report(g: EmbeddedGraph, order_seed: Optional[int] = None) -> MinimizeReport:
    k = _projective_face_width(g)
    if k is None:
        raise NotApplicableError("face-width 0: the scheme has no non-contractible curve")
    h = minimize_facewidth(g, order_seed)
    expected = 2 * k * k - k
    return MinimizeReport(
        face_width=k,
        start_edges=g.m,
        terminal_edges=h.m,
        expected_edges=expected,
        passed=h.m == expected,
    )


def stable_set_from_transversal(g: EmbeddedGraph, transversal: Sequence[int]) -> List[int]:
    """The larger colour class of every component of g - transversal."""
    gone = set(transversal)
    check = is_bipartite(g, removed=gone)
    if not check.bipartite:
        raise NotApplicableError("the given set is not an odd cycle transversal")
    seen = set()
    stable: List[int] = []
    for root in range(g.n):
        if root in gone or root in seen:
            continue
        component = [root]
        seen.add(root)
        for x in component:
            for y, _ in g.adjacency[x]:
                if y not in gone and y not in seen:
                    seen.add(y)
                    component.append(y)
        sides: Dict[int, List[int]] = {0: [], 1: []}
        for v in component:
            sides[check.coloring[v]].append(v)
        stable.extend(max(sides[0], sides[1], key=len))
    return sorted(stable)


def singleton_four_coloring(g: EmbeddedGraph) -> Dict[int, int]:
    """Proper colouring with colours 1..4 where colour 4 is used once."""
    cert = single_edge_transversal(g)
    [(a, b)] = induced_edges(g, cert.vertex_set)
    check = is_bipartite(g, removed=cert.vertex_set)
    coloring = {v: c + 1 for v, c in check.coloring.items()}
    for v in cert.vertex_set:
        coloring[v] = 3
    coloring[max(a, b)] = 4
    for e in g.edges:
        if coloring[e.u] == coloring[e.v]:
            raise InvariantError(f"edge {e.eid} joins two vertices of colour {coloring[e.u]}")
    return coloring
