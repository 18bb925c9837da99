"""Instance families: grid quadrangulations, generalized Mycielski graphs, fuzzed quadrangulations."""

import random
from typing import Dict, List, Tuple, Union

from pydantic import ValidationError

from projwidth.core.errors import CapExceeded, EmbeddingError, InvalidParameterError, NotApplicableError
from projwidth.core.logging import get_logger
from projwidth.models import Edge, EmbeddedGraph, Graph
from projwidth.schemas.family import FamilySpec
from projwidth.services.embedding import canonicalize, corner_faces, from_faces, trace_faces, validate

logger = get_logger(__name__)

MAX_SPLIT_ATTEMPTS = 200


def grid_quadrangulation(k: int) -> EmbeddedGraph:
    """The k x k grid with antipodal boundary edges, embedded as a projective quadrangulation.

    Vertex (i, j) has id j * k + i.  Grid edges are positive; the antipodal
    edges (0, j)-(k-1, k-1-j) and (j, 0)-(k-1-j, k-1) are negative, and the two
    corner pairs produced by both rules are a single edge each.
    """
    if k < 2:
        raise InvalidParameterError(f"grid needs k >= 2, got {k}")

    def vid(i: int, j: int) -> int:
        return j * k + i

    edges: List[Edge] = []
    index: Dict[Tuple[int, int], int] = {}

    def edge(a: int, b: int, sign: int) -> int:
        key = (min(a, b), max(a, b))
        if key not in index:
            index[key] = len(edges)
            edges.append(Edge(eid=len(edges), u=key[0], v=key[1], sign=sign))
        return index[key]

    for j in range(k):
        for i in range(k):
            if i + 1 < k:
                edge(vid(i, j), vid(i + 1, j), 1)
            if j + 1 < k:
                edge(vid(i, j), vid(i, j + 1), 1)
    for j in range(k):
        edge(vid(0, j), vid(k - 1, k - 1 - j), -1)
        edge(vid(j, 0), vid(k - 1 - j, k - 1), -1)

    rotations = []
    for j in range(k):
        for i in range(k):
            v = vid(i, j)
            # right, up, left, down; a missing side becomes its antipodal edge
            slots = [
                edge(v, vid(i + 1, j), 1) if i + 1 < k else index[_key(v, vid(0, k - 1 - j))],
                edge(v, vid(i, j + 1), 1) if j + 1 < k else index[_key(v, vid(k - 1 - i, 0))],
                edge(v, vid(i - 1, j), 1) if i > 0 else index[_key(v, vid(k - 1, k - 1 - j))],
                edge(v, vid(i, j - 1), 1) if j > 0 else index[_key(v, vid(k - 1 - i, k - 1))],
            ]
            ring = []
            for e in slots:
                if not ring or ring[-1] != e:
                    ring.append(e)
            if len(ring) > 1 and ring[0] == ring[-1]:
                ring.pop()
            rotations.append(tuple(ring))
    g = EmbeddedGraph(n=k * k, edges=tuple(edges), rotations=tuple(rotations), label=f"grid k={k}")
    return canonicalize(g)


def _key(a: int, b: int) -> Tuple[int, int]:
    return min(a, b), max(a, b)


def _mycielski_edges(k: int) -> List[Tuple[int, int]]:
    width = 2 * k + 1

    def vid(i: int, j: int) -> int:
        return i * width + j % width

    apex = k * width
    pairs = [(vid(0, j), vid(0, j + 1)) for j in range(width)]
    for i in range(k - 1):
        for j in range(width):
            pairs.append((vid(i + 1, j), vid(i, j - 1)))
            pairs.append((vid(i + 1, j), vid(i, j + 1)))
    pairs.extend((vid(k - 1, j), apex) for j in range(width))
    return sorted(_key(a, b) for a, b in pairs)


def _mycielski_faces(k: int) -> List[List[int]]:
    width = 2 * k + 1

    def vid(i: int, j: int) -> int:
        return i * width + j % width

    apex = k * width
    faces = []
    for i in range(k - 2):
        for j in range(width):
            faces.append([vid(i, j), vid(i + 1, j + 1), vid(i + 2, j), vid(i + 1, j - 1)])
    for j in range(width):
        faces.append([apex, vid(k - 1, j - 1), vid(k - 2, j), vid(k - 1, j + 1)])
        faces.append([vid(0, j - 1), vid(0, j), vid(0, j + 1), vid(1, j)])
    return faces


def generalized_mycielski(k: int, embed: bool = False) -> Union[Graph, EmbeddedGraph]:
    """k levels over the cycle of length 2k + 1, plus an apex joined to the top level.

    Vertex (i, j) has id i * (2k + 1) + j; the apex is k * (2k + 1).  With
    `embed`, the quadrangular embedding is built from its faces and validated.
    """
    if k < 2:
        raise InvalidParameterError(f"mycielski needs k >= 2, got {k}")
    n = k * (2 * k + 1) + 1
    label = f"mycielski k={k}"
    if not embed:
        return Graph(n=n, edges=tuple(_mycielski_edges(k)), label=label)
    g = from_faces(n, _mycielski_faces(k), label=label)
    report = validate(g)
    if not report.is_quadrangulation:
        raise EmbeddingError(f"mycielski embedding failed validation: {report.messages}")
    return g


def _split_vertex(g: EmbeddedGraph, rng: random.Random) -> EmbeddedGraph:
    """Split a vertex of degree >= 4 along two non-consecutive darts and add the quadrilateral between the halves."""
    candidates = [v for v in range(g.n) if g.degree(v) >= 4]
    if not candidates:
        raise NotApplicableError("no vertex of degree >= 4 to split")
    faces = trace_faces(g)
    corners = corner_faces(g, faces)
    rings = [list(face.vertices) for face in faces]
    v = rng.choice(candidates)
    deg = g.degree(v)
    a = rng.randrange(deg)
    b = (a + rng.randint(2, deg - 2)) % deg
    around = [g.edges[e].other(v) for e in g.rotations[v]]
    new = g.n
    p = b
    while p != a:
        f, t = corners[(v, p)]
        rings[f][t] = new
        p = (p + 1) % deg
    rings.append([v, around[a], new, around[b]])
    return from_faces(g.n + 1, rings, label=g.label)


def fuzz_quadrangulation(base: EmbeddedGraph, steps: int, seed: int) -> EmbeddedGraph:
    """Apply `steps` random vertex splits; every intermediate graph is re-validated."""
    if steps < 0:
        raise InvalidParameterError(f"steps must be >= 0, got {steps}")
    rng = random.Random(seed)
    g = base
    for step in range(steps):
        for attempt in range(MAX_SPLIT_ATTEMPTS):
            try:
                candidate = _split_vertex(g, rng)
            except EmbeddingError as exc:
                logger.debug(f"split rejected at step {step}, attempt {attempt}: {exc}")
                continue
            report = validate(candidate)
            if report.is_quadrangulation and not report.is_bipartite_graph:
                g = candidate
                break
            logger.debug(f"split at step {step} broke the quadrangulation: {report.messages}")
        else:
            raise CapExceeded(f"no valid vertex split found in {MAX_SPLIT_ATTEMPTS} attempts")
    logger.info(f"fuzzed {base.n} -> {g.n} vertices with seed {seed}")
    return g


def family_instance(spec: FamilySpec) -> Union[Graph, EmbeddedGraph]:
    if spec.family == "grid":
        return grid_quadrangulation(spec.k)
    if spec.family == "mycielski":
        return generalized_mycielski(spec.k, embed=spec.embed)
    g = fuzz_quadrangulation(grid_quadrangulation(spec.k), spec.steps, spec.seed)
    return g.model_copy(update={"label": spec.label})


def make_spec(**fields) -> FamilySpec:
    try:
        return FamilySpec(**fields)
    except ValidationError as exc:
        raise InvalidParameterError(exc.errors()[0]["msg"])
