"""Primitivity of finite permutation groups, three ways.

A transitive group is primitive when the only partitions it preserves
are the discrete one and the one-class one.  The three tests here are
deliberately independent of each other:

  * orbital connectivity: every orbit digraph of an ordered pair is
    connected (Higman's criterion),
  * congruence closure: no seed pair generates a proper invariant
    partition,
  * subgroup maximality: adding any outside element to a point
    stabilizer already generates the whole group.

They must agree, and the test suite holds them to that.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import _kernel, digraph, perm
from .autgrp import automorphism_group
from .digraph import DiGraph
from .errors import GroupTooLarge, NotTransitive, PointOutOfRange

MAXIMALITY_ORDER_CAP = 500


@dataclass(frozen=True)
class Partition:
    """A partition of 0..degree-1 in canonical form.

    class_ids assigns each point the index of its class, indices issued
    in order of first appearance, so equal partitions compare equal.
    """

    degree: int
    class_ids: Tuple[int, ...]

    @staticmethod
    def from_assignment(labels: Sequence[int]) -> "Partition":
        relabel: Dict[int, int] = {}
        ids = []
        for x in labels:
            if x not in relabel:
                relabel[x] = len(relabel)
            ids.append(relabel[x])
        return Partition(len(ids), tuple(ids))

    def classes(self) -> Tuple[Tuple[int, ...], ...]:
        out: List[List[int]] = [[] for _ in range(max(self.class_ids, default=-1) + 1)]
        for point, cid in enumerate(self.class_ids):
            out[cid].append(point)
        return tuple(tuple(c) for c in out)

    def class_count(self) -> int:
        return len(set(self.class_ids))

    def is_discrete(self) -> bool:
        return self.class_count() == self.degree

    def is_universal(self) -> bool:
        return self.class_count() == 1

    def same_class(self, a: int, b: int) -> bool:
        return self.class_ids[a] == self.class_ids[b]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def partition(self) -> Partition:
        return Partition.from_assignment([self.find(x) for x in range(len(self.parent))])


def _require_transitive(G: perm.GeneratedGroup) -> None:
    if not perm.is_transitive(G):
        raise NotTransitive("primitivity is only defined for transitive groups here")


def is_primitive_higman(
    G: perm.GeneratedGroup,
) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Orbital-connectivity test.

    Returns (True, None) or (False, witness) where the witness is the
    first pair (0, b) whose orbital digraph is disconnected.
    """
    _require_transitive(G)
    for b in range(1, G.degree):
        og = digraph.orbital_graph(G, 0, b)
        if not digraph.is_connected(og):
            return False, (0, b)
    return True, None


def congruence_closure_multi(
    G: perm.GeneratedGroup, seeds: Sequence[Tuple[int, int]]
) -> Partition:
    """Finest G-invariant partition gluing every seed pair."""
    for a, b in seeds:
        for p in (a, b):
            if not 0 <= p < G.degree:
                raise PointOutOfRange(f"point {p} not in 0..{G.degree - 1}")
    uf = _UnionFind(G.degree)
    gens = [g.images for g in G.generators]
    queue = list(seeds)
    while queue:
        a, b = queue.pop()
        if not uf.union(a, b):
            continue
        for g in gens:
            queue.append((g[a], g[b]))
    return uf.partition()


def congruence_closure(G: perm.GeneratedGroup, a: int, b: int) -> Partition:
    return congruence_closure_multi(G, [(a, b)])


def is_primitive_congruence(G: perm.GeneratedGroup) -> bool:
    """No seed pair closes into a proper invariant partition."""
    _require_transitive(G)
    for b in range(1, G.degree):
        if not congruence_closure(G, 0, b).is_universal():
            return False
    return True


def is_maximal_stabilizer(
    G: perm.GeneratedGroup, point: int = 0, cap: int = MAXIMALITY_ORDER_CAP
) -> bool:
    """Whether the stabilizer of ``point`` is a maximal subgroup.

    Exhaustive: every element outside the stabilizer is adjoined and the
    closure compared against the whole group, so the group order is
    capped (GroupTooLarge beyond ``cap``).
    """
    _require_transitive(G)
    if not 0 <= point < G.degree:
        raise PointOutOfRange(f"point {point} not in 0..{G.degree - 1}")
    elements = perm.enumerate_elements(G)
    if len(elements) > cap:
        raise GroupTooLarge(f"order {len(elements)} exceeds maximality cap {cap}")
    stab = [g for g in elements if g.images[point] == point]
    outside = [g for g in elements if g.images[point] != point]
    stab_images = [g.images for g in stab]
    for x in outside:
        widened = _kernel.closure(G.degree, stab_images + [x.images], len(elements) + 1)
        if widened is not None and len(widened) < len(elements):
            return False
    return True


@dataclass(frozen=True)
class BlockReport:
    """What the block graph contributes to the amalgam verdict."""

    size_ok: bool
    vertex_transitive: bool
    primitive: bool
    regular: bool
    aut_order: int


def classify_block(g: DiGraph) -> BlockReport:
    """Automorphism facts of a candidate block graph.

    Downgrades gracefully: with an intransitive automorphism group the
    primitive and regular fields are simply False, no error.
    """
    aut = automorphism_group(g)
    n = g.vertex_count
    aut_order = perm.order(aut)
    vt = perm.is_transitive(aut)
    if vt:
        primitive, _ = is_primitive_higman(aut)
        regular = aut_order == n
    else:
        primitive = False
        regular = False
    return BlockReport(
        size_ok=n >= 3,
        vertex_transitive=vt,
        primitive=primitive,
        regular=regular,
        aut_order=aut_order,
    )
