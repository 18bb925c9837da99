import itertools

import networkx as nx
import pytest

from projwidth.core.budget import StepBudget
from projwidth.core.errors import CapExceeded, InvalidParameterError, NotApplicableError
from projwidth.models import Graph
from projwidth.schemas.coloring import Precoloring
from projwidth.services.families import fuzz_quadrangulation, generalized_mycielski, grid_quadrangulation
from projwidth.services.oracle import (
    brute_min_oct,
    brute_shortest_odd_cycle,
    chromatic_check,
    has_two_disjoint_odd_cycles,
    independence_number,
    oracle_graph,
    precolor_extend,
)
from projwidth.services.topology import edge_width, face_width

C4 = Graph(n=4, edges=((0, 1), (1, 2), (2, 3), (0, 3)))
C5 = Graph(n=5, edges=((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)))
C6 = Graph(n=6, edges=tuple((i, (i + 1) % 6) for i in range(6)))
K23 = Graph(n=5, edges=((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)))
TWO_TRIANGLES = Graph(n=6, edges=((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))

def proper(g, coloring) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edge_pairs())

def test_oracle_graph_keeps_edge_ids(k4):
    h = oracle_graph(k4)
    assert h.number_of_nodes() == 4
    assert h.number_of_edges() == 6
    assert h.has_edge(0, 3, key=2)

def test_shortest_odd_cycle_small_graphs(k4, grotzsch):
    assert brute_shortest_odd_cycle(C5).length == 5
    assert brute_shortest_odd_cycle(k4).length == 3
    assert brute_shortest_odd_cycle(grotzsch).length == 5
    assert brute_shortest_odd_cycle(C4) is None

def test_shortest_odd_cycle_of_a_loop():
    cycle = brute_shortest_odd_cycle(Graph(n=2, edges=((0, 1), (1, 1))))
    assert cycle.vertices == (1,)

@pytest.mark.parametrize("k", [2, 3, 4])
def test_mycielski_odd_girth_is_tight(k):
    g = generalized_mycielski(k)
    length = brute_shortest_odd_cycle(g).length
    assert length == 2 * k + 1
    assert (2 * length - 1) ** 2 == 8 * g.n - 7

@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_odd_girth_agrees_with_edge_width(k):
    g = grid_quadrangulation(k)
    assert brute_shortest_odd_cycle(g).length == edge_width(g)[0]

def test_min_oct_small_graphs(k4):
    assert brute_min_oct(k4).size == 2
    assert brute_min_oct(C5).size == 1
    assert brute_min_oct(C4).status == "bipartite"

def test_min_oct_cap(k4):
    assert brute_min_oct(k4, cap=1).status == "cap"

@pytest.mark.parametrize("k", [2, 3, 4])
def test_min_oct_equals_face_width(k):
    g = grid_quadrangulation(k)
    result = brute_min_oct(g)
    assert result.status == "ok"
    assert result.size == k == face_width(g)[0]

@pytest.mark.slow
def test_min_oct_of_grid5():
    result = brute_min_oct(grid_quadrangulation(5))
    assert result.size == 5

def test_step_budget_stops_the_search(grid4):
    with pytest.raises(CapExceeded):
        brute_min_oct(grid4, budget=StepBudget(limit=5))

@pytest.mark.parametrize("k,alpha", [(2, 1), (3, 3), (4, 6), (5, 10)])
def test_independence_number_of_grids(k, alpha):
    assert independence_number(grid_quadrangulation(k)) == alpha

@pytest.mark.slow
def test_independence_number_of_grid6():
    assert independence_number(grid_quadrangulation(6)) == 15

def test_independence_number_small_graphs(grotzsch):
    assert independence_number(C5) == 2
    assert independence_number(grotzsch) == 5

def test_independence_number_cap(grid4):
    with pytest.raises(CapExceeded):
        independence_number(grid4, cap_n=10)

def test_chromatic_check(k4, grotzsch, grid3):
    bipartite = chromatic_check(C4)
    assert bipartite.three_colorable
    for g in (k4, grotzsch, grid3):
        result = chromatic_check(g)
        assert not result.three_colorable
        assert proper(g, result.four_coloring)
        assert set(result.four_coloring.values()) <= {1, 2, 3, 4}

def test_two_disjoint_odd_cycles(k4, grid3):
    assert has_two_disjoint_odd_cycles(TWO_TRIANGLES)
    assert not has_two_disjoint_odd_cycles(k4)
    assert not has_two_disjoint_odd_cycles(grid3)

def test_precolor_path():
    path = Graph(n=2, edges=((0, 1),))
    result = precolor_extend(path, Precoloring(assignments={0: 1}))
    assert result.coloring[0] == 1
    assert result.coloring[1] != 1

def test_precolor_k23_is_blocked():
    result = precolor_extend(K23, Precoloring(assignments={2: 1, 3: 2, 4: 3}))
    assert result.coloring is None
    ob = result.obstruction
    assert ob.triple == (2, 3, 4)
    assert ob.colors == (1, 2, 3)
    assert ob.common_neighbors == {"2-3": 0, "2-4": 0, "3-4": 0}

def test_precolor_c6_extends():
    result = precolor_extend(C6, Precoloring(assignments={0: 1, 2: 2, 4: 3}))
    assert result.obstruction is None
    assert proper(C6, result.coloring)
    assert [result.coloring[v] for v in (0, 2, 4)] == [1, 2, 3]

def test_precolor_pair_without_common_neighbour():
    # 0 and 4 share no neighbour on the path 0-1-2-3-4
    path = Graph(n=5, edges=((0, 1), (1, 2), (2, 3), (3, 4)))
    result = precolor_extend(path, Precoloring(assignments={0: 1, 2: 3, 4: 2}))
    assert proper(path, result.coloring)

def test_precolor_needs_bipartite(k4):
    with pytest.raises(NotApplicableError):
        precolor_extend(k4, Precoloring(assignments={0: 1}))

def test_precolor_must_be_proper():
    with pytest.raises(InvalidParameterError):
        precolor_extend(C4, Precoloring(assignments={0: 1, 1: 1}))

def quadrangulation(family, k, steps=0, seed=0):
    if family == "mycielski":
        return generalized_mycielski(k, embed=True)
    return fuzz_quadrangulation(grid_quadrangulation(k), steps, seed=seed)

COLOURING_CASES = (
    [("grid", k) for k in range(2, 8)]
    + [("mycielski", k) for k in (2, 3, 4)]
    + [("grid", 4, 10 * i, i) for i in range(1, 5)]
    + [("grid", 5, 35, 7)]
)

@pytest.mark.slow
@pytest.mark.parametrize("case", COLOURING_CASES, ids=str)
def test_quadrangulations_need_four_colours(case):
    g = quadrangulation(*case)
    assert g.n <= 60
    result = chromatic_check(g)
    assert not result.three_colorable
    assert proper(g, result.four_coloring)
    assert set(result.four_coloring.values()) <= {1, 2, 3, 4}

@pytest.mark.slow
def test_chromatic_check_at_sixty_vertices():
    g = fuzz_quadrangulation(grid_quadrangulation(5), 35, seed=3)
    assert g.n == 60
    result = chromatic_check(g)
    assert not result.three_colorable
    assert proper(g, result.four_coloring)

@pytest.mark.slow
@pytest.mark.parametrize(
    "case", [("grid", 2), ("grid", 3), ("mycielski", 2)] + [("grid", 3, steps, steps) for steps in range(1, 6)], ids=str
)
def test_quadrangulations_have_no_disjoint_odd_cycles(case):
    g = quadrangulation(*case)
    assert g.n <= 14
    assert not has_two_disjoint_odd_cycles(g)

def connected_bipartite_graphs():
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() and nx.is_connected(h) and nx.is_bipartite(h):
            yield h

def blocking_triple(h, side, fixed) -> bool:
    if len(fixed) != 3 or len(set(fixed.values())) != 3:
        return False
    if len({side[v] for v in fixed}) != 1:
        return False
    return all(set(h[a]) & set(h[b]) for a, b in itertools.combinations(fixed, 2))

@pytest.mark.slow
def test_precolor_every_small_bipartite_graph():
    blocked = 0
    for h in connected_bipartite_graphs():
        g = Graph(n=h.number_of_nodes(), edges=tuple(sorted(tuple(sorted(e)) for e in h.edges())))
        side = nx.bipartite.color(h)
        for size in (1, 2, 3):
            for chosen in itertools.combinations(range(g.n), size):
                for colors in itertools.product((1, 2, 3), repeat=size):
                    fixed = dict(zip(chosen, colors))
                    if any(fixed[a] == fixed[b] for a, b in itertools.combinations(chosen, 2) if h.has_edge(a, b)):
                        continue
                    result = precolor_extend(g, Precoloring(assignments=fixed))
                    if result.obstruction is None:
                        assert proper(g, result.coloring)
                        assert set(result.coloring.values()) <= {1, 2, 3}
                        assert all(result.coloring[v] == c for v, c in fixed.items())
                        continue
                    blocked += 1
                    assert blocking_triple(h, side, fixed)
                    ob = result.obstruction
                    assert ob.triple == chosen
                    assert ob.colors == colors
                    for key, w in ob.common_neighbors.items():
                        a, b = (int(x) for x in key.split("-"))
                        assert h.has_edge(a, w) and h.has_edge(b, w)
    assert blocked == 1524
