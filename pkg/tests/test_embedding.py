import pytest

from projwidth.core.errors import EmbeddingError
from projwidth.services.embedding import (
    canonicalize,
    contract_edge,
    corner_faces,
    delete_edge,
    dual,
    euler_characteristic,
    flip_vertex,
    from_faces,
    is_isomorphic,
    is_orientable,
    is_projective,
    normalize_signature,
    radial,
    require_projective,
    sign_product,
    trace_faces,
    validate,
)
from projwidth.services.families import grid_quadrangulation
from projwidth.services.pq1 import parse_pq1

def test_k4_faces(k4):
    faces = trace_faces(k4)
    assert len(faces) == 3
    assert all(face.length == 4 for face in faces)
    assert euler_characteristic(k4) == 1

def test_k4_first_face_boundary(k4):
    face = trace_faces(k4)[0]
    assert face.vertices == (0, 1, 2, 3)
    assert face.edge_ids == (0, 3, 5, 2)

def test_every_edge_lies_on_two_face_sides(grid4):
    counts = {}
    for face in trace_faces(grid4):
        for e in face.edge_ids:
            counts[e] = counts.get(e, 0) + 1
    assert set(counts) == set(range(grid4.m))
    assert set(counts.values()) == {2}

def test_validate_quadrangulation(grid3):
    report = validate(grid3)
    assert report.is_quadrangulation
    assert report.projective
    assert not report.orientable
    assert not report.is_bipartite_graph
    assert report.face_count == 8

def test_validate_planar_cycle(c4_planar):
    report = validate(c4_planar)
    assert report.euler_characteristic == 2
    assert report.orientable
    assert report.is_bipartite_graph
    assert not report.is_quadrangulation
    assert not is_projective(c4_planar)
    with pytest.raises(EmbeddingError):
        require_projective(c4_planar)

def test_flip_vertex_keeps_face_signs(grid3):
    flipped = flip_vertex(flip_vertex(grid3, 4), 0)
    for before, after in zip(trace_faces(grid3), trace_faces(flipped)):
        assert sign_product(grid3, before.edge_ids) == sign_product(flipped, after.edge_ids)
    assert euler_characteristic(flipped) == 1

def test_flip_vertex_twice_is_identity(grid3):
    twice = flip_vertex(flip_vertex(grid3, 5), 5)
    assert twice.rotations == grid3.rotations
    assert [e.sign for e in twice.edges] == [e.sign for e in grid3.edges]

def test_normalize_signature_tree_is_positive(grid4):
    normalized = normalize_signature(grid4)
    negative = sum(1 for e in normalized.edges if e.sign == -1)
    assert negative <= grid4.m - (grid4.n - 1)
    assert not is_orientable(normalized)
    assert is_isomorphic(normalized, grid4)

def test_dual_of_k4(k4):
    d = dual(k4)
    assert (d.n, d.m) == (3, 6)
    assert len(trace_faces(d)) == 4
    assert euler_characteristic(d) == 1

@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_dual_of_dual_is_isomorphic(k):
    g = grid_quadrangulation(k)
    assert is_isomorphic(dual(dual(g)), g)

def test_isomorphism_distinguishes_sizes(grid3, grid4):
    assert not is_isomorphic(grid3, grid4)

def test_radial_of_k4(k4):
    r, origin = radial(k4)
    assert (r.n, r.m) == (7, 12)
    faces = trace_faces(r)
    assert len(faces) == 6
    assert all(face.length == 4 for face in faces)
    assert origin[0] == ("vertex", 0)
    assert origin[4] == ("face", 0)

def test_corner_faces_cover_every_corner(grid3):
    corners = corner_faces(grid3)
    assert len(corners) == 2 * grid3.m

def test_delete_and_contract(k4):
    assert delete_edge(k4, 0).m == 5
    h = contract_edge(k4, 0)
    assert (h.n, h.m) == (3, 5)
    assert euler_characteristic(h) == 1

def test_contract_rejects_loop():
    g = parse_pq1("PQ1 1 1\nE 0 0 0 -\nR 0 2 0 0\n")
    with pytest.raises(EmbeddingError):
        contract_edge(g, 0)

def test_unknown_edge_id(k4):
    with pytest.raises(EmbeddingError):
        delete_edge(k4, 6)

def test_canonicalize_is_idempotent(grid4):
    once = canonicalize(grid4)
    twice = canonicalize(once)
    assert twice.edges == once.edges
    assert twice.rotations == once.rotations
    assert all(e.u <= e.v for e in once.edges)

def test_from_faces_rejects_pinched_vertex():
    faces = [[0, 1, 2, 3], [0, 3, 2, 1], [0, 4, 5, 6], [0, 6, 5, 4]]
    with pytest.raises(EmbeddingError):
        from_faces(7, faces)
