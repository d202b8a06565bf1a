"""Cut vertices, blocks, and the block-cut-vertex tree.

Blocks are the maximal pieces without a cut vertex of their own:
2-connected subgraphs together with bridge edges.  The tree alternates
cut-vertex nodes and block nodes; tagged pairs ('v', vertex) and
('b', block_index) keep the two kinds apart.

All of this reads the undirected shadow.  The lowpoint search is
iterative on purpose: amalgam balls run to a few thousand vertices and
would blow the recursion limit.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from .digraph import DiGraph, is_connected, shadow_adjacency
from .errors import NodeNotInTree, NotConnected

TreeNode = Tuple[str, int]  # ('v', vertex) or ('b', block index)


def _lowpoint_scan(n: int, adj: List[List[int]]):
    """One pass of Hopcroft-Tarjan; returns (cut vertex set, block list)."""
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    child_count = [0] * n
    has_cut_child = [False] * n
    blocks: List[Tuple[int, ...]] = []
    edge_stack: List[Tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        work = [(root, 0)]
        while work:
            u, i = work[-1]
            if i < len(adj[u]):
                work[-1] = (u, i + 1)
                v = adj[u][i]
                if disc[v] == -1:
                    parent[v] = u
                    child_count[u] += 1
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    work.append((v, 0))
                elif v != parent[u] and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            else:
                work.pop()
                if not work:
                    continue
                p = work[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if low[u] >= disc[p]:
                    # the edges stacked since (p, u) form one block
                    has_cut_child[p] = True
                    members: Set[int] = set()
                    while edge_stack:
                        a, b = edge_stack.pop()
                        members.add(a)
                        members.add(b)
                        if (a, b) == (p, u):
                            break
                    blocks.append(tuple(sorted(members)))
    cuts = {
        u
        for u in range(n)
        if (parent[u] == -1 and child_count[u] >= 2)
        or (parent[u] != -1 and has_cut_child[u])
    }
    blocks.sort()
    return cuts, tuple(blocks)


def _require_connected(g: DiGraph) -> None:
    if not is_connected(g):
        raise NotConnected("decomposition needs a connected graph")


def cut_vertices(g: DiGraph) -> Tuple[int, ...]:
    """Vertices whose removal disconnects g (g itself must be connected)."""
    _require_connected(g)
    if g.vertex_count == 1:
        return ()
    cuts, _ = _lowpoint_scan(g.vertex_count, shadow_adjacency(g))
    return tuple(sorted(cuts))


def blocks(g: DiGraph) -> Tuple[Tuple[int, ...], ...]:
    """All blocks as sorted vertex tuples, ordered by least vertex."""
    _require_connected(g)
    if g.vertex_count == 1:
        return ((0,),)
    _, found = _lowpoint_scan(g.vertex_count, shadow_adjacency(g))
    return found


@dataclass(frozen=True)
class BlockCutTree:
    cut_vertex_set: Tuple[int, ...]
    block_sets: Tuple[Tuple[int, ...], ...]
    adjacency: Tuple[Tuple[TreeNode, Tuple[TreeNode, ...]], ...]

    def nodes(self) -> Tuple[TreeNode, ...]:
        return tuple(node for node, _ in self.adjacency)

    def has_node(self, node: TreeNode) -> bool:
        return node in self._adj

    @property
    def _adj(self) -> Dict[TreeNode, Tuple[TreeNode, ...]]:
        return dict(self.adjacency)

    def neighbors(self, node: TreeNode) -> Tuple[TreeNode, ...]:
        adj = self._adj
        if node not in adj:
            raise NodeNotInTree(f"no tree node {node}")
        return adj[node]

    def blocks_through(self, v: int) -> Tuple[int, ...]:
        return tuple(i for i, blk in enumerate(self.block_sets) if v in blk)


def block_cut_tree(g: DiGraph) -> BlockCutTree:
    cuts = cut_vertices(g)
    blks = blocks(g)
    cut_set = set(cuts)
    adj: Dict[TreeNode, List[TreeNode]] = {("v", v): [] for v in cuts}
    for i, blk in enumerate(blks):
        node = ("b", i)
        adj[node] = []
        for v in blk:
            if v in cut_set:
                adj[node].append(("v", v))
                adj[("v", v)].append(node)
    packed = tuple((node, tuple(sorted(nbrs))) for node, nbrs in sorted(adj.items()))
    return BlockCutTree(cuts, blks, packed)


def tree_geodesic(
    t: BlockCutTree,
    a: TreeNode,
    b: TreeNode,
    include_start: bool = True,
    include_end: bool = True,
) -> Tuple[TreeNode, ...]:
    """The unique path from a to b, with optional open/half-open trims."""
    adj = t._adj
    for node in (a, b):
        if node not in adj:
            raise NodeNotInTree(f"no tree node {node}")
    prev: Dict[TreeNode, Optional[TreeNode]] = {a: None}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in prev:
                    prev[y] = x
                    nxt.append(y)
        frontier = nxt
    if b not in prev:
        raise NodeNotInTree(f"{a} and {b} lie in different trees")
    path = [b]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    path.reverse()
    lo = 0 if include_start else 1
    hi = len(path) if include_end else len(path) - 1
    return tuple(path[lo:hi]) if lo <= hi else ()


def tree_distance(t: BlockCutTree, a: TreeNode, b: TreeNode) -> int:
    return len(tree_geodesic(t, a, b)) - 1
