"""Brute-force ground truth.

Everything here works on a networkx copy of the graph built by `oracle_graph`
and shares no traversal code with the topology services, so agreement
between the two is evidence rather than tautology.  Long searches take a
`StepBudget` and raise CapExceeded when it runs out.
"""

import itertools
from collections import deque
from typing import Dict, List, Optional, Set, Tuple, Union

import networkx as nx

from projwidth.core.budget import StepBudget
from projwidth.core.config import get_settings
from projwidth.core.errors import CapExceeded, InvalidParameterError, InvariantError, NotApplicableError
from projwidth.core.logging import get_logger
from projwidth.models import Cycle, EmbeddedGraph, Graph
from projwidth.schemas.coloring import (
    ChromaticResult,
    ExtensionResult,
    Obstruction,
    OctResult,
    Precoloring,
)

logger = get_logger(__name__)

AnyGraph = Union[Graph, EmbeddedGraph]


def oracle_graph(g: AnyGraph) -> nx.MultiGraph:
    """Vertices 0..n-1; parallel edges and loops kept, keyed by edge id."""
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    for i, (u, v) in enumerate(g.edge_pairs()):
        h.add_edge(u, v, key=i)
    return h


def _simple_adjacency(h: nx.MultiGraph) -> Dict[int, Set[int]]:
    return {v: set(h.adj[v]) - {v} for v in h.nodes}


def _check_size(g: AnyGraph, cap_n: int, what: str):
    if g.n > cap_n:
        raise CapExceeded(f"{what}: {g.n} vertices exceed the cap of {cap_n}")


def brute_shortest_odd_cycle(g: AnyGraph, budget: Optional[StepBudget] = None) -> Optional[Cycle]:
    """Shortest odd cycle by parity-layered BFS from every vertex; None when g is bipartite.

    A shortest odd closed walk is always a cycle, so the minimum over all
    starts needs no post-processing.
    """
    budget = budget or StepBudget(label="shortest odd cycle")
    h = oracle_graph(g)
    best: Optional[Tuple[List[int], List[int]]] = None
    for s in h.nodes:
        back: Dict[Tuple[int, int], Tuple[Tuple[int, int], int]] = {}
        dist = {(s, 0): 0}
        queue = deque([(s, 0)])
        while queue and (s, 1) not in dist:
            x, parity = queue.popleft()
            if best is not None and dist[(x, parity)] + 1 >= len(best[1]):
                break
            for y, keyed in h.adj[x].items():
                for key in sorted(keyed):
                    budget.tick()
                    state = (y, 1 - parity)
                    if state in dist:
                        continue
                    dist[state] = dist[(x, parity)] + 1
                    back[state] = ((x, parity), key)
                    queue.append(state)
        if (s, 1) not in dist:
            continue
        vertices, edges = [], []
        cur = (s, 1)
        while cur != (s, 0):
            prev, key = back[cur]
            vertices.append(prev[0])
            edges.append(key)
            cur = prev
        if best is None or len(edges) < len(best[1]):
            best = (vertices[::-1], edges[::-1])
    if best is None:
        return None
    return Cycle(vertices=tuple(best[0]), edge_ids=tuple(best[1]))


def brute_min_oct(g: AnyGraph, cap: Optional[int] = None, budget: Optional[StepBudget] = None) -> OctResult:
    """Smallest vertex set whose removal leaves a bipartite graph, trying subsets by increasing size."""
    cap = get_settings().oct_cap if cap is None else cap
    budget = budget or StepBudget(label="minimum odd cycle transversal")
    h = oracle_graph(g)
    if nx.is_bipartite(h):
        return OctResult(status="bipartite", vertices=[])
    nodes = list(h.nodes)
    for size in range(1, min(cap, g.n) + 1):
        logger.debug(f"trying odd cycle transversals of size {size}")
        for chosen in itertools.combinations(nodes, size):
            budget.tick()
            rest = h.subgraph(set(nodes) - set(chosen))
            if nx.is_bipartite(rest):
                logger.info(f"minimum odd cycle transversal of size {size}: {list(chosen)}")
                return OctResult(status="ok", vertices=list(chosen))
    logger.warning(f"no odd cycle transversal of size <= {cap}")
    return OctResult(status="cap")


def independence_number(g: AnyGraph, cap_n: Optional[int] = None, budget: Optional[StepBudget] = None) -> int:
    """Exact independence number by branch and bound.

    A vertex of degree at most one is always taken; otherwise the search
    branches on a vertex of maximum degree, pruning when even taking every
    remaining candidate cannot beat the best set found.
    """
    _check_size(g, get_settings().alpha_cap_n if cap_n is None else cap_n, "independence number")
    budget = budget or StepBudget(label="independence number")
    h = oracle_graph(g)
    looped = {v for v, _ in nx.selfloop_edges(h)}
    adj = _simple_adjacency(h)
    best = 0

    def search(candidates: frozenset, size: int):
        nonlocal best
        budget.tick()
        if size + len(candidates) <= best:
            return
        if not candidates:
            best = size
            return
        degree = {v: len(adj[v] & candidates) for v in candidates}
        low = min(candidates, key=lambda v: (degree[v], v))
        if degree[low] <= 1:
            search(candidates - {low} - adj[low], size + 1)
            return
        high = max(candidates, key=lambda v: (degree[v], -v))
        search(candidates - {high} - adj[high], size + 1)
        search(candidates - {high}, size)

    search(frozenset(v for v in h.nodes if v not in looped), 0)
    logger.info(f"independence number {best} on {g.n} vertices")
    return best


def _search_order(adj: Dict[int, Set[int]]) -> List[int]:
    """Vertex order that keeps the frontier small.

    The frontier is the set of placed vertices with an unplaced neighbour.
    Each step places the vertex whose placement grows it least, preferring
    vertices with more placed neighbours.
    """
    order: List[int] = []
    placed: Set[int] = set()
    frontier: Set[int] = set()
    remaining = set(adj)

    def key(v):
        grows = 1 if any(u not in placed and u != v for u in adj[v]) else 0
        closes = sum(1 for u in adj[v] if u in frontier and all(w in placed or w == v for w in adj[u]))
        done = sum(1 for u in adj[v] if u in placed)
        return (grows - closes, -done, v)

    while remaining:
        v = min(remaining, key=key)
        order.append(v)
        placed.add(v)
        remaining.discard(v)
        frontier = {u for u in frontier | {v} if any(w not in placed for w in adj[u])}
    return order


def _backtrack_coloring(
    adj: Dict[int, Set[int]],
    colors: int,
    budget: StepBudget,
    fixed: Optional[Dict[int, int]] = None,
) -> Optional[Dict[int, int]]:
    """Proper colouring with colours 1..colors extending `fixed`.

    Backtracking along `_search_order` with forward checking: an assignment
    is undone as soon as an uncoloured neighbour has no colour left.  Whether
    the rest extends depends only on the colours of the frontier, so failed
    frontier colourings are remembered and never searched twice.
    """
    fixed = fixed or {}
    free = not fixed
    order = _search_order(adj)
    pos = {v: i for i, v in enumerate(order)}
    frontiers = [
        tuple(u for u in order[:t] if any(pos[w] >= t for w in adj[u]))
        for t in range(len(order) + 1)
    ]
    coloring: Dict[int, int] = {}
    failed: Set[Tuple[int, Tuple[int, ...]]] = set()

    def state(t: int) -> Tuple[int, Tuple[int, ...]]:
        seen = tuple(coloring[u] for u in frontiers[t])
        if not free:
            return t, seen
        # without precolouring only the pattern of equal colours matters
        relabel: Dict[int, int] = {}
        return t, tuple(relabel.setdefault(c, len(relabel) + 1) for c in seen)

    def options(w: int) -> List[int]:
        used = {coloring[u] for u in adj[w] if u in coloring}
        candidates = [fixed[w]] if w in fixed else range(1, colors + 1)
        return [c for c in candidates if c not in used]

    def go(t: int) -> bool:
        if t == len(order):
            return True
        key = state(t)
        if key in failed:
            return False
        budget.tick()
        v = order[t]
        # without precolouring, a fresh colour is only ever the next unused label
        top = max(coloring.values(), default=0) + 1 if free else colors
        for c in options(v):
            if c > top:
                break
            coloring[v] = c
            if all(options(w) for w in adj[v] if w not in coloring) and go(t + 1):
                return True
            del coloring[v]
        failed.add(key)
        return False

    return dict(coloring) if go(0) else None


def _is_proper(adj: Dict[int, Set[int]], coloring: Dict[int, int]) -> bool:
    return all(coloring[u] != coloring[v] for u in adj for v in adj[u])


def chromatic_check(g: AnyGraph, cap_n: Optional[int] = None, budget: Optional[StepBudget] = None) -> ChromaticResult:
    """Exact 3-colourability and a proper 4-colouring when one exists."""
    _check_size(g, get_settings().chromatic_cap_n if cap_n is None else cap_n, "chromatic check")
    budget = budget or StepBudget(label="chromatic check")
    h = oracle_graph(g)
    if nx.number_of_selfloops(h):
        return ChromaticResult(three_colorable=False)
    adj = _simple_adjacency(h)
    three = _backtrack_coloring(adj, 3, budget)
    if three is not None:
        return ChromaticResult(three_colorable=True, three_coloring=three, four_coloring=three)
    greedy = {v: c + 1 for v, c in nx.greedy_color(nx.Graph(h), strategy="DSATUR").items()}
    four = greedy if max(greedy.values(), default=0) <= 4 else _backtrack_coloring(adj, 4, budget)
    if four is not None and not _is_proper(adj, four):
        raise InvariantError("4-colouring is not proper")
    logger.info(f"not 3-colourable; 4-colouring {'found' if four else 'missing'}")
    return ChromaticResult(three_colorable=False, four_coloring=four)


def has_two_disjoint_odd_cycles(g: AnyGraph, cap_n: Optional[int] = None, budget: Optional[StepBudget] = None) -> bool:
    """Whether some odd cycle leaves a non-bipartite graph behind."""
    _check_size(g, get_settings().disjoint_cap_n if cap_n is None else cap_n, "disjoint odd cycles")
    budget = budget or StepBudget(label="disjoint odd cycles")
    h = oracle_graph(g)
    nodes = set(h.nodes)

    def rest_is_odd(cycle) -> bool:
        budget.tick()
        return not nx.is_bipartite(h.subgraph(nodes - set(cycle)))

    for v, _ in nx.selfloop_edges(h):
        if rest_is_odd([v]):
            return True
    simple = nx.Graph(h)
    simple.remove_edges_from(list(nx.selfloop_edges(simple)))
    for cycle in nx.simple_cycles(simple):
        if len(cycle) % 2 == 1 and rest_is_odd(cycle):
            logger.info(f"odd cycle {cycle} leaves an odd cycle behind")
            return True
    return False


def _sides(h: nx.MultiGraph) -> Dict[int, int]:
    try:
        return nx.bipartite.color(h)
    except nx.NetworkXError:
        raise NotApplicableError("precoloring extension needs a bipartite graph")


def _uniform_fill(adj, sides, fixed) -> Optional[Dict[int, int]]:
    """Every free vertex of side 0 gets one colour and every free vertex of side 1 another."""
    for a, b in itertools.permutations((1, 2, 3), 2):
        coloring = {v: fixed.get(v, a if sides[v] == 0 else b) for v in adj}
        if _is_proper(adj, coloring):
            return coloring
    return None


def _pair_recoloring(adj, sides, fixed) -> Optional[Dict[int, int]]:
    """For a same-side pair x, y without common neighbour, the rest of their side takes the third colour.

    A vertex of the other side sees at most one of x and y, so it takes the
    colour of whichever of the two it does not see.
    """
    for x, y in itertools.combinations(sorted(fixed), 2):
        if sides[x] != sides[y] or fixed[x] == fixed[y] or adj[x] & adj[y]:
            continue
        third = ({1, 2, 3} - {fixed[x], fixed[y]}).pop()
        coloring = {}
        for v in adj:
            if v in fixed:
                coloring[v] = fixed[v]
            elif sides[v] == sides[x]:
                coloring[v] = third
            else:
                coloring[v] = fixed[y] if x in adj[v] else fixed[x]
        if _is_proper(adj, coloring):
            return coloring
    return None


def precolor_extend(g: AnyGraph, p: Precoloring, budget: Optional[StepBudget] = None) -> ExtensionResult:
    """Extend a precolouring of at most three vertices of a bipartite graph to a proper 3-colouring.

    An Obstruction is returned only when no extension exists; it then
    certifies a rainbow triple on one side whose pairs all share a neighbour.
    """
    budget = budget or StepBudget(label="precoloring extension")
    h = oracle_graph(g)
    sides = _sides(h)
    adj = _simple_adjacency(h)
    fixed = dict(p.assignments)
    for v, c in fixed.items():
        if not 0 <= v < g.n:
            raise InvalidParameterError(f"precolored vertex {v} outside 0..{g.n - 1}")
        clash = [u for u in adj[v] if fixed.get(u) == c]
        if clash:
            raise InvalidParameterError(f"precoloring is improper: {v} and {clash[0]} both have colour {c}")

    coloring = _uniform_fill(adj, sides, fixed) or _pair_recoloring(adj, sides, fixed)
    if coloring is None:
        coloring = _backtrack_coloring(adj, 3, budget, fixed)
    if coloring is not None:
        if not _is_proper(adj, coloring):
            raise InvariantError("extension is not a proper colouring")
        return ExtensionResult(coloring=coloring)

    triple = tuple(sorted(fixed))
    if len(triple) != 3:
        raise InvariantError(f"a precoloring of {len(triple)} vertices failed to extend")
    colors = tuple(fixed[v] for v in triple)
    if len({sides[v] for v in triple}) != 1 or len(set(colors)) != 3:
        raise InvariantError(f"precoloring of {list(triple)} failed to extend without a rainbow same-side triple")
    witnesses = {}
    for a, b in itertools.combinations(triple, 2):
        shared = adj[a] & adj[b]
        if not shared:
            raise InvariantError(f"precoloring failed to extend although {a} and {b} have no common neighbour")
        witnesses[f"{a}-{b}"] = min(shared)
    obstruction = Obstruction(triple=triple, side=sides[triple[0]], colors=colors, common_neighbors=witnesses)
    logger.info(f"precoloring blocked by {obstruction}")
    return ExtensionResult(obstruction=obstruction)
