import pytest

from projwidth.core.errors import InvalidParameterError
from projwidth.models import ClosedWalk
from projwidth.services.families import grid_quadrangulation
from projwidth.services.support import is_odd
from projwidth.services.topology import (
    dual_edge_width,
    edge_width,
    face_width,
    is_bipartite,
    is_contractible_walk,
    walk_sign,
    width_report,
)

def test_bipartite_cycle(c4_planar):
    check = is_bipartite(c4_planar)
    assert check.bipartite
    for e in c4_planar.edges:
        assert check.coloring[e.u] != check.coloring[e.v]

def test_odd_walk_of_k4(k4):
    check = is_bipartite(k4)
    assert not check.bipartite
    assert check.odd_walk.length % 2 == 1
    assert walk_sign(k4, check.odd_walk) == -1

def test_removing_vertices(k4):
    assert is_bipartite(k4, removed=[0, 1]).bipartite
    assert not is_bipartite(k4, removed=[0]).bipartite

def test_triangle_is_one_sided(k4):
    walk = ClosedWalk(vertices=(0, 1, 2), edge_ids=(0, 3, 1))
    assert walk_sign(k4, walk) == -1
    assert not is_contractible_walk(k4, walk)

def test_face_boundary_is_contractible(k4):
    walk = ClosedWalk(vertices=(0, 1, 2, 3), edge_ids=(0, 3, 5, 2))
    assert is_contractible_walk(k4, walk)

def test_walk_with_wrong_edge(k4):
    with pytest.raises(InvalidParameterError):
        walk_sign(k4, ClosedWalk(vertices=(0, 1, 2), edge_ids=(0, 4, 1)))

def test_k4_widths(k4):
    ew, witness = edge_width(k4)
    assert ew == 3
    assert witness.sign_product == -1
    assert witness.contractible is False
    assert dual_edge_width(k4)[0] == 2
    assert face_width(k4)[0] == 2

def test_edge_width_witness_is_lexicographically_first(k4):
    # triangles 0-1-2 and 0-1-3 are both one-sided; the smaller sequence wins
    _, witness = edge_width(k4)
    assert witness.vertices == (0, 1, 2)
    assert witness.edge_ids == (0, 3, 1)

@pytest.mark.parametrize("k,ew,fw", [(3, 3, 3), (4, 5, 4)])
def test_grid_widths(k, ew, fw):
    g = grid_quadrangulation(k)
    assert edge_width(g)[0] == ew
    assert face_width(g)[0] == fw

def test_planar_widths_are_infinite(c4_planar):
    assert edge_width(c4_planar) == (None, None)
    assert dual_edge_width(c4_planar) == (None, None)
    assert face_width(c4_planar) == (None, None)

@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_edge_width_times_dual_edge_width(k):
    report = width_report(grid_quadrangulation(k))
    assert report.edge_width * report.dual_edge_width <= 2 * k * k - 2

def test_lins_equality_for_k4(k4):
    report = width_report(k4)
    assert report.edge_width * report.dual_edge_width == k4.m

def test_face_width_witness_is_odd(k4, grid4):
    for g in (k4, grid4):
        fw, witness = face_width(g)
        assert witness.size == fw
        assert is_odd(g, witness)

def test_k4_witness_uses_a_diagonal(k4):
    _, witness = face_width(k4)
    assert witness.kinds.count("opposite") == 1
    assert witness.order == 1
