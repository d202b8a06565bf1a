"""Automorphisms of small digraphs by exhaustive backtracking.

The search assigns images in vertex order, prunes on (in, out) degree
profiles and on adjacency against everything already placed, and visits
candidates in ascending order.  That ordering is what makes
``aligned_isomorphism`` canonical: the first complete assignment found
is the lexicographically least image sequence.

Instances are capped at 12 vertices; this is a block-analysis tool, not
a general graph-isomorphism package.
"""

from typing import Dict, Iterator, List, Optional, Tuple

from . import perm
from .digraph import DiGraph
from .errors import GraphTooLarge, GroupTooLarge, PointOutOfRange

VERTEX_LIMIT = 12
AUT_CAP = perm.DEFAULT_ELEMENT_CAP


def _degree_profile(g: DiGraph) -> List[Tuple[int, int]]:
    ins = [0] * g.vertex_count
    outs = [0] * g.vertex_count
    for u, v in g.edges:
        outs[u] += 1
        ins[v] += 1
    return list(zip(ins, outs))


def _isomorphism_search(
    g1: DiGraph, g2: DiGraph, forced: Dict[int, int]
) -> Iterator[Tuple[int, ...]]:
    """Yield all isomorphisms g1 -> g2 honoring ``forced``, in lex order."""
    n = g1.vertex_count
    if n != g2.vertex_count or len(g1.edges) != len(g2.edges):
        return
    prof1 = _degree_profile(g1)
    prof2 = _degree_profile(g2)
    if sorted(prof1) != sorted(prof2):
        return
    images: List[Optional[int]] = [None] * n
    used = [False] * n

    def candidates(u: int) -> Iterator[int]:
        if u in forced:
            yield forced[u]
            return
        for w in range(n):
            if not used[w] and prof2[w] == prof1[u]:
                yield w

    def consistent(u: int, w: int) -> bool:
        for x in range(n):
            y = images[x]
            if y is None:
                continue
            if g1.has_edge(u, x) != g2.has_edge(w, y):
                return False
            if g1.has_edge(x, u) != g2.has_edge(y, w):
                return False
        return True

    # explicit stack of candidate iterators, one per assigned vertex
    stack: List[Iterator[int]] = [candidates(0)] if n else []
    if n == 0:
        yield ()
        return
    depth = 0
    while stack:
        chosen = None
        for w in stack[-1]:
            if not used[w] and consistent(depth, w):
                chosen = w
                break
        if chosen is None:
            stack.pop()
            depth -= 1
            if depth >= 0 and images[depth] is not None:
                used[images[depth]] = False
                images[depth] = None
            continue
        images[depth] = chosen
        used[chosen] = True
        if depth == n - 1:
            yield tuple(images)  # type: ignore[arg-type]
            used[chosen] = False
            images[depth] = None
            continue
        depth += 1
        stack.append(candidates(depth))


def automorphism_group(g: DiGraph, limit: int = VERTEX_LIMIT) -> perm.GeneratedGroup:
    """Every automorphism of g, found exhaustively.

    Raises GraphTooLarge beyond ``limit`` vertices and GroupTooLarge if
    the group itself would not fit the element cap.
    """
    if g.vertex_count > limit:
        raise GraphTooLarge(f"{g.vertex_count} vertices exceeds limit {limit}")
    found = []
    for images in _isomorphism_search(g, g, {}):
        found.append(perm.Permutation(images))
        if len(found) > AUT_CAP:
            raise GroupTooLarge(f"automorphism count exceeds cap {AUT_CAP}")
    return perm.GeneratedGroup(g.vertex_count, tuple(found))


def aligned_isomorphism(
    g1: DiGraph, a1: int, g2: DiGraph, a2: int
) -> Optional[perm.Permutation]:
    """The least isomorphism g1 -> g2 sending a1 to a2, or None.

    "Least" compares image sequences lexicographically, so any two calls
    with the same arguments agree; the amalgam machinery leans on that
    to keep its block gluings reproducible.
    """
    for g, a in ((g1, a1), (g2, a2)):
        if not 0 <= a < g.vertex_count:
            raise PointOutOfRange(f"vertex {a} not in 0..{g.vertex_count - 1}")
    for images in _isomorphism_search(g1, g2, {a1: a2}):
        return perm.Permutation(images)
    return None


def is_vertex_transitive(g: DiGraph) -> bool:
    if g.vertex_count == 0:
        return False
    G = automorphism_group(g)
    return perm.is_transitive(G)


def is_edge_transitive(g: DiGraph) -> bool:
    """One automorphism orbit on arcs (vacuously true without arcs)."""
    if not g.edges:
        return True
    G = automorphism_group(g)
    u, v = g.edges[0]
    return set(perm.pair_orbit(G, u, v)) == set(g.edges)
