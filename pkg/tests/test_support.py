import random

import pytest

from projwidth.core.errors import InvalidParameterError, NotApplicableError
from projwidth.models import ClosedWalk
from projwidth.services.embedding import trace_faces
from projwidth.services.families import grid_quadrangulation
from projwidth.services.support import (
    extract_odd_cycle,
    is_odd,
    make_support_set,
    reduce_support,
    reduction_violations,
    shift,
    support_from_cycle,
    to_closed_walk,
)
from projwidth.services.topology import edge_width, face_width, is_bipartite, walk_sign

def test_support_from_shortest_cycle(grid3):
    _, cycle = edge_width(grid3)
    s = support_from_cycle(grid3, cycle)
    assert s.kinds == ("adjacent",) * cycle.length
    assert s.order == 3
    assert is_odd(grid3, s)
    walk = to_closed_walk(grid3, s)
    assert walk.edge_ids == cycle.edge_ids
    assert walk.sign_product == -1

def test_shift_keeps_parity(k4):
    _, witness = face_width(k4)
    i = witness.kinds.index("opposite")
    shifted = shift(k4, witness, i)
    assert shifted.size == witness.size + 1
    assert shifted.order == witness.order + 2
    assert "opposite" not in shifted.kinds
    assert is_odd(k4, shifted)

def test_shift_rejects_adjacent_pair(k4):
    _, witness = face_width(k4)
    with pytest.raises(InvalidParameterError):
        shift(k4, witness, witness.kinds.index("adjacent"))
    with pytest.raises(InvalidParameterError):
        shift(k4, witness, witness.size)

def test_to_closed_walk_matches_order(grid4):
    _, witness = face_width(grid4)
    walk = to_closed_walk(grid4, witness)
    assert walk.length % 2 == witness.order % 2
    assert walk.sign_product == -1

def test_vertices_must_share_the_face(grid3):
    face = trace_faces(grid3)[0]
    outside = next(v for v in range(grid3.n) if v not in face.vertices)
    with pytest.raises(InvalidParameterError):
        make_support_set(grid3, [face.vertices[0], outside], [0, 0])

def test_collapse_drops_repeated_vertex(grid3):
    face = trace_faces(grid3)[0]
    a, b = face.vertices[0], face.vertices[1]
    s = make_support_set(grid3, [a, a, b], [0, 0, 0])
    assert s.vertices == (a, b)

def test_reduce_rejects_even_support(grid3):
    face = trace_faces(grid3)[0]
    a, b = face.vertices[0], face.vertices[1]
    s = make_support_set(grid3, [a, b], [0, 0])
    assert s.order == 2
    with pytest.raises(NotApplicableError):
        reduce_support(grid3, s)

def test_reduced_witness_has_no_violations(grid4):
    _, witness = face_width(grid4)
    reduced = reduce_support(grid4, witness)
    assert reduced.order <= witness.order
    assert reduced.order % 2 == 1
    assert reduction_violations(grid4, reduced) == []

def test_reduce_a_shifted_witness(grid3):
    _, witness = face_width(grid3)
    s = witness
    while "opposite" in s.kinds:
        s = shift(grid3, s, s.kinds.index("opposite"))
    reduced = reduce_support(grid3, s)
    assert reduction_violations(grid3, reduced) == []
    assert is_odd(grid3, reduced)

def test_extract_odd_cycle_from_odd_walk(grid4):
    walk = is_bipartite(grid4).odd_walk
    cycle = extract_odd_cycle(grid4, walk)
    assert cycle.length % 2 == 1
    assert set(cycle.vertices) <= set(walk.vertices)
    assert walk_sign(grid4, cycle) == cycle.sign_product

def test_extract_odd_cycle_rejects_even_walk(k4):
    walk = ClosedWalk(vertices=(0, 1, 2, 3), edge_ids=(0, 3, 5, 2))
    with pytest.raises(NotApplicableError):
        extract_odd_cycle(k4, walk)

def random_support_set(g, face_list, rng, steps):
    """Random face-to-face walk closed along a shortest path of g."""
    by_vertex = {}
    for f, face in enumerate(face_list):
        for v in set(face.vertices):
            by_vertex.setdefault(v, []).append(f)
    start = rng.randrange(g.n)
    vertices, faces = [start], []
    v = start
    for _ in range(steps):
        f = rng.choice(by_vertex[v])
        v = rng.choice(sorted(set(face_list[f].vertices) - {v}))
        faces.append(f)
        vertices.append(v)
    parent = {v: None}
    frontier = [v]
    while start not in parent:
        nxt = []
        for x in frontier:
            for y in g.neighbors(x):
                if y not in parent:
                    parent[y] = x
                    nxt.append(y)
        frontier = nxt
    path = [start]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    for a, b in zip(path, path[1:]):
        faces.append(next(f for f in by_vertex[a] if face_list[f].edge_between(a, b) is not None))
        vertices.append(b)
    vertices.pop()
    return make_support_set(g, vertices, faces, face_list)

@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_random_support_sets(k):
    g = grid_quadrangulation(k)
    face_list = trace_faces(g)
    rng = random.Random(k)
    for _ in range(100):
        s = random_support_set(g, face_list, rng, rng.randint(2, 3 * k))
        if s.size < 2:
            continue
        odd = is_odd(g, s, face_list)
        sign = to_closed_walk(g, s, face_list).sign_product
        for i, kind in enumerate(s.kinds):
            if kind == "opposite":
                moved = shift(g, s, i, face_list)
                assert is_odd(g, moved, face_list) == odd
                assert to_closed_walk(g, moved, face_list).sign_product == sign
        if not odd:
            continue
        assert is_bipartite(g, removed=s.vertices).bipartite
        reduced = reduce_support(g, s, face_list)
        assert reduction_violations(g, reduced, face_list) == []
        assert is_odd(g, reduced, face_list)
        assert set(reduced.vertices) <= set(s.vertices)
        assert is_bipartite(g, removed=reduced.vertices).bipartite
