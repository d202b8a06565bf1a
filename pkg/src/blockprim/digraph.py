"""Finite directed graphs on vertex set 0..n-1.

Edges are ordered pairs with no loops and no duplicates; an undirected
graph is the special case where the edge set is symmetric.  Connectivity
always means connectivity of the undirected shadow: the block machinery
never cares about orientation when walking, only when comparing arcs.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from . import perm
from .errors import EqualPair, PointOutOfRange

Edge = Tuple[int, int]


@dataclass(frozen=True)
class DiGraph:
    vertex_count: int
    edges: Tuple[Edge, ...]
    _edge_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise PointOutOfRange(f"edge ({u}, {v}) leaves 0..{self.vertex_count - 1}")
            if u == v:
                raise ValueError(f"loop at {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        object.__setattr__(self, "_edge_set", frozenset(self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_set

    @property
    def edge_set(self) -> frozenset:
        return self._edge_set

    def successors(self, u: int) -> Tuple[int, ...]:
        return tuple(v for (x, v) in self.edges if x == u)

    def predecessors(self, v: int) -> Tuple[int, ...]:
        return tuple(x for (x, u) in self.edges if u == v)

    def out_degree(self, u: int) -> int:
        return len(self.successors(u))

    def in_degree(self, u: int) -> int:
        return len(self.predecessors(u))

    def is_symmetric(self) -> bool:
        return all((v, u) in self._edge_set for (u, v) in self.edges)


def make(vertex_count: int, edges: Iterable[Edge]) -> DiGraph:
    return DiGraph(vertex_count, tuple(edges))


def undirected_shadow(g: DiGraph) -> DiGraph:
    """The symmetric closure: every arc paired with its reverse."""
    sym = set()
    for u, v in g.edges:
        sym.add((u, v))
        sym.add((v, u))
    return DiGraph(g.vertex_count, tuple(sorted(sym)))


def shadow_adjacency(g: DiGraph) -> List[List[int]]:
    adj: List[List[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return [sorted(set(nbrs)) for nbrs in adj]


def connected_components(g: DiGraph) -> Tuple[Tuple[int, ...], ...]:
    """Components of the shadow, each sorted, ordered by least vertex."""
    adj = shadow_adjacency(g)
    seen = [False] * g.vertex_count
    comps = []
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        nxt.append(y)
            frontier = nxt
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def is_connected(g: DiGraph) -> bool:
    if g.vertex_count == 0:
        return False
    return len(connected_components(g)) == 1


def distance(g: DiGraph, u: int, v: int) -> Optional[int]:
    """Shadow distance from u to v; None when v is unreachable."""
    for p in (u, v):
        if not 0 <= p < g.vertex_count:
            raise PointOutOfRange(f"vertex {p} not in 0..{g.vertex_count - 1}")
    if u == v:
        return 0
    adj = shadow_adjacency(g)
    dist: Dict[int, int] = {u: 0}
    frontier = [u]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = d
                    if y == v:
                        return d
                    nxt.append(y)
        frontier = nxt
    return None


def orbital_graph(G: perm.GeneratedGroup, u: int, v: int) -> DiGraph:
    """The digraph whose arcs form the G-orbit of the ordered pair (u, v)."""
    if u == v:
        raise EqualPair(f"orbital graph needs distinct endpoints, got ({u}, {v})")
    arcs = perm.pair_orbit(G, u, v)
    return DiGraph(G.degree, tuple(arcs))


# Builders for the block graphs used throughout the tests and docs.

def directed_cycle(n: int) -> DiGraph:
    return make(n, [(i, (i + 1) % n) for i in range(n)])


def undirected_cycle(n: int) -> DiGraph:
    return undirected_shadow(directed_cycle(n))


def complete_graph(n: int) -> DiGraph:
    return make(n, [(i, j) for i in range(n) for j in range(n) if i != j])


def single_edge() -> DiGraph:
    """One undirected edge: the smallest admissible block."""
    return make(2, [(0, 1), (1, 0)])


def paley_tournament(q: int) -> DiGraph:
    """Arc i -> j when j - i is a nonzero square mod q (q = 3 mod 4)."""
    if q % 4 != 3:
        raise ValueError("Paley tournament needs a prime q = 3 mod 4")
    squares = {(x * x) % q for x in range(1, q)}
    return make(q, [(i, j) for i in range(q) for j in range(q) if (j - i) % q in squares])
