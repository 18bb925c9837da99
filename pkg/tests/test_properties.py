import random
from collections import deque

from hypothesis import given, settings
import hypothesis.strategies as st

from projwidth.services import bounds
from projwidth.services.embedding import (
    euler_characteristic,
    flip_vertex,
    normalize_signature,
    sign_product,
    trace_faces,
    validate,
)
from projwidth.services.families import fuzz_quadrangulation, grid_quadrangulation
from projwidth.services.support import is_odd, reduce_support, reduction_violations, shift
from projwidth.services.topology import edge_width, face_width, is_bipartite, walk_sign
from projwidth.services.transversal import facewidth_transversal, induced_edges, short_odd_cycle, single_edge_transversal

GRIDS = {k: grid_quadrangulation(k) for k in range(2, 6)}

@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10**6), steps=st.integers(min_value=0, max_value=6))
def test_fuzzed_quadrangulations_keep_the_bounds(seed, steps):
    g = fuzz_quadrangulation(GRIDS[3], steps, seed)
    assert validate(g).is_quadrangulation
    ew, _ = edge_width(g)
    fw, _ = face_width(g)
    assert bounds.ew_ok(g.n, ew)
    assert bounds.fw_ok(g.n, fw)

    cycle = short_odd_cycle(g)
    assert cycle.length == ew
    assert walk_sign(g, cycle) == -1

    fw_cert = facewidth_transversal(g)
    assert fw_cert.size <= fw
    assert is_bipartite(g, removed=fw_cert.vertex_set).bipartite

    se_cert = single_edge_transversal(g)
    assert is_bipartite(g, removed=se_cert.vertex_set).bipartite
    assert len(induced_edges(g, se_cert.vertex_set)) == 1

@settings(max_examples=20, deadline=None)
@given(flips=st.lists(st.integers(min_value=0, max_value=8), max_size=6))
def test_vertex_flips_keep_the_topology(flips):
    g = GRIDS[3]
    h = g
    for v in flips:
        h = flip_vertex(h, v)
    assert euler_characteristic(h) == 1
    assert sorted(sign_product(g, f.edge_ids) for f in trace_faces(g)) == sorted(
        sign_product(h, f.edge_ids) for f in trace_faces(h)
    )
    assert edge_width(h)[0] == edge_width(g)[0]
    assert face_width(h)[0] == face_width(g)[0]
    assert edge_width(normalize_signature(h))[0] == edge_width(g)[0]

@settings(max_examples=20, deadline=None)
@given(k=st.integers(min_value=2, max_value=5), data=st.data())
def test_shifting_an_opposite_pair_keeps_parity(k, data):
    g = GRIDS[k]
    _, witness = face_width(g)
    opposite = [i for i, kind in enumerate(witness.kinds) if kind == "opposite"]
    if not opposite:
        return
    i = data.draw(st.sampled_from(opposite))
    shifted = shift(g, witness, i)
    assert shifted.size == witness.size + 1
    assert shifted.order == witness.order + 2
    assert is_odd(g, shifted)
    reduced = reduce_support(g, shifted)
    assert reduction_violations(g, reduced) == []
    assert is_odd(g, reduced)

def random_closed_walk(g, rng, steps):
    """Random walk of `steps` edges, closed along a shortest path; returns edge ids."""
    start = rng.randrange(g.n)
    v, edges = start, []
    for _ in range(steps):
        w, e = rng.choice(g.adjacency[v])
        edges.append(e)
        v = w
    parent = {v: None}
    queue = deque([v])
    while start not in parent:
        x = queue.popleft()
        for y, e in g.adjacency[x]:
            if y not in parent:
                parent[y] = (x, e)
                queue.append(y)
    back = []
    x = start
    while parent[x] is not None:
        x, e = parent[x]
        back.append(e)
    return edges + back[::-1]

@settings(max_examples=100, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10**6), steps=st.integers(min_value=1, max_value=30))
def test_normalizing_keeps_walk_signs(seed, steps):
    rng = random.Random(seed)
    g = fuzz_quadrangulation(GRIDS[3], seed % 4, seed)
    for v in rng.sample(range(g.n), 3):
        g = flip_vertex(g, v)
    h = normalize_signature(g)
    walk = random_closed_walk(g, rng, steps)
    assert sign_product(h, walk) == sign_product(g, walk)
