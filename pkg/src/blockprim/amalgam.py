"""Finite balls of the tree-like amalgam of a block digraph.

The infinite object copies a fixed block digraph so that every vertex
lies in exactly ``multiplicity`` copies and distinct copies meet in at
most one vertex; its cut structure is then a regular tree alternating
vertices and block copies.  ``build_ball`` materializes the portion
within ``radius`` gluing generations of a chosen root copy.

Conventions that everything downstream relies on:

  * Vertices are numbered generation by generation, root copy first, so
    the ball of radius k is an index prefix of the ball of radius k+1.
  * Block copies are registered in creation order; copy 0 is the root.
    Every copy stores the ball vertex carrying each block label, so a
    block label and a copy index pin down a vertex.
  * A vertex is interior when all of its block copies are present,
    i.e. its generation is below the radius.  Boundary vertices exist
    in the ball but their remaining copies do not.

Automorphisms of the infinite amalgam restrict to maps that need not be
total on a finite ball: swapping two copies hanging at different tree
depths pushes part of the ball past the boundary.  BallAutomorphism
therefore carries an explicit partial domain, and every constructor
(lifts, slot swaps, extensions) grows its map through one deterministic
engine that stops precisely at the boundary.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import autgrp, decomp, perm
from .digraph import DiGraph, is_connected
from .errors import (
    BadMultiplicity,
    BallTooLarge,
    BlockHasCutVertex,
    BlockNotVertexTransitive,
    InvalidAutomorphism,
    NodeNotInTree,
    NotConnected,
    PointOutOfRange,
    RadiusMismatch,
    VertexNotInterior,
)

MAX_BALL_VERTICES = 5000

TreeNode = Tuple[str, int]  # ('v', vertex) or ('b', block copy index)


@dataclass(frozen=True)
class VertexAddress:
    """Path from the root copy: (0, label) then (outer_slot, label) steps.

    The first step names a vertex of the root copy, every later step
    descends into one of the ``multiplicity - 1`` outer copies sprouting
    at the current vertex and names a nonzero label inside it (label 0
    is always the vertex the copy is glued at).
    """

    path: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if not self.path or self.path[0][0] != 0:
            raise ValueError(f"address must start with a (0, label) root step: {self.path}")
        for slot, label in self.path[1:]:
            if label == 0:
                raise ValueError("descent steps must name a nonzero label")

    @property
    def generation(self) -> int:
        return len(self.path) - 1


@dataclass(frozen=True)
class BlockCopy:
    index: int
    level: int
    attach: Optional[int]  # ball vertex shared with the previous level
    vertex_by_label: Tuple[int, ...]

    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vertex_by_label))

    def label_of(self, v: int) -> int:
        return self.vertex_by_label.index(v)


def closed_form_ball_size(n: int, m: int, radius: int) -> int:
    """Vertex count of the radius-k ball over an n-vertex block, m copies per vertex."""
    branch = (m - 1) * (n - 1)
    return n + n * (m - 1) * (n - 1) * sum(branch**j for j in range(radius))


class AmalgamBall:
    """See the module docstring for the numbering conventions."""

    def __init__(
        self,
        block_graph: DiGraph,
        multiplicity: int,
        radius: int,
        graph: DiGraph,
        registry: Tuple[BlockCopy, ...],
        addresses: Tuple[VertexAddress, ...],
        generation: Tuple[int, ...],
        block_aut: perm.GeneratedGroup,
    ):
        self.block_graph = block_graph
        self.multiplicity = multiplicity
        self.radius = radius
        self.graph = graph
        self.registry = registry
        self.addresses = addresses
        self.generation = generation
        self.block_aut = block_aut
        self._blocks_at: List[List[int]] = [[] for _ in range(graph.vertex_count)]
        for copy in registry:
            for v in copy.vertex_by_label:
                self._blocks_at[v].append(copy.index)
        self.interior = frozenset(
            v for v in range(graph.vertex_count) if generation[v] < radius
        )
        self._address_index = {addr: v for v, addr in enumerate(addresses)}
        self._aligned: Dict[Tuple[int, int], perm.Permutation] = {}
        self._tree: Optional["BallTree"] = None
        self._structural: Optional[Tuple["BallAutomorphism", ...]] = None
        self._stab_cache: Dict[int, Tuple["BallAutomorphism", ...]] = {}

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def boundary(self) -> frozenset:
        return frozenset(range(self.vertex_count)) - self.interior

    def blocks_at(self, v: int) -> Tuple[int, ...]:
        if not 0 <= v < self.vertex_count:
            raise PointOutOfRange(f"vertex {v} not in 0..{self.vertex_count - 1}")
        return tuple(self._blocks_at[v])

    def address_of(self, v: int) -> VertexAddress:
        return self.addresses[v]

    def vertex_at(self, address: VertexAddress) -> int:
        if address not in self._address_index:
            raise PointOutOfRange(f"no vertex at {address}")
        return self._address_index[address]

    def aligned_block_map(self, l1: int, l2: int) -> perm.Permutation:
        """Least block automorphism taking label l1 to label l2, cached."""
        key = (l1, l2)
        if key not in self._aligned:
            tau = autgrp.aligned_isomorphism(self.block_graph, l1, self.block_graph, l2)
            if tau is None:  # vertex transitivity rules this out
                raise BlockNotVertexTransitive(f"no block map sends {l1} to {l2}")
            self._aligned[key] = tau
        return self._aligned[key]


def build_ball(
    block: DiGraph,
    multiplicity: int,
    radius: int,
    max_vertices: int = MAX_BALL_VERTICES,
) -> AmalgamBall:
    """Construct the radius-k ball; validates the block before gluing."""
    if not is_connected(block):
        raise NotConnected("amalgam blocks must be connected")
    if block.vertex_count < 2:
        raise ValueError("amalgam blocks need at least 2 vertices")
    if decomp.cut_vertices(block):
        raise BlockHasCutVertex("amalgam blocks may not have cut vertices of their own")
    block_aut = autgrp.automorphism_group(block)
    if not perm.is_transitive(block_aut):
        raise BlockNotVertexTransitive("amalgam blocks must be vertex-transitive")
    if multiplicity < 2:
        raise BadMultiplicity(f"need at least 2 copies per vertex, got {multiplicity}")
    if radius < 0:
        raise ValueError(f"radius must be nonnegative, got {radius}")
    n = block.vertex_count
    total = closed_form_ball_size(n, multiplicity, radius)
    if total > max_vertices:
        raise BallTooLarge(f"ball would have {total} vertices, budget is {max_vertices}")

    registry: List[BlockCopy] = [BlockCopy(0, 0, None, tuple(range(n)))]
    addresses: List[VertexAddress] = [VertexAddress(((0, l),)) for l in range(n)]
    generation: List[int] = [0] * n
    edges: List[Tuple[int, int]] = list(block.edges)
    frontier = list(range(n))
    next_vertex = n
    for j in range(radius):
        new_frontier: List[int] = []
        for v in frontier:
            for slot in range(multiplicity - 1):
                vbl = [0] * n
                vbl[0] = v
                for label in range(1, n):
                    vbl[label] = next_vertex
                    addresses.append(
                        VertexAddress(addresses[v].path + ((slot, label),))
                    )
                    generation.append(j + 1)
                    new_frontier.append(next_vertex)
                    next_vertex += 1
                registry.append(BlockCopy(len(registry), j + 1, v, tuple(vbl)))
                for x, y in block.edges:
                    edges.append((vbl[x], vbl[y]))
        frontier = new_frontier
    assert next_vertex == total
    graph = DiGraph(total, tuple(edges))
    return AmalgamBall(
        block,
        multiplicity,
        radius,
        graph,
        tuple(registry),
        tuple(addresses),
        tuple(generation),
        block_aut,
    )


class BallTree:
    """The vertex/copy tree of a ball, with distance and side queries.

    Every ball vertex is a node here, boundary vertices as leaves; this
    matches the cut structure of the infinite amalgam, where every
    vertex is a cut vertex.  The block-cut tree of the finite ball
    graph is the same tree minus those boundary leaves.
    """

    def __init__(self, ball: AmalgamBall):
        self.ball = ball
        self.root: TreeNode = ("b", 0)
        self.parent: Dict[TreeNode, Optional[TreeNode]] = {("b", 0): None}
        self.depth: Dict[TreeNode, int] = {("b", 0): 0}
        inner: Dict[int, int] = {}
        for copy in ball.registry:
            for v in copy.vertex_by_label:
                if v not in inner or copy.level < ball.registry[inner[v]].level:
                    inner[v] = copy.index
        for v in range(ball.vertex_count):
            self.parent[("v", v)] = ("b", inner[v])
            self.depth[("v", v)] = 2 * ball.generation[v] + 1
        for copy in ball.registry[1:]:
            self.parent[("b", copy.index)] = ("v", copy.attach)
            self.depth[("b", copy.index)] = 2 * copy.level

    def has_node(self, node: TreeNode) -> bool:
        return node in self.parent

    def _check(self, node: TreeNode) -> None:
        if node not in self.parent:
            raise NodeNotInTree(f"no tree node {node}")

    def geodesic(self, a: TreeNode, b: TreeNode) -> Tuple[TreeNode, ...]:
        self._check(a)
        self._check(b)
        up_a: List[TreeNode] = [a]
        up_b: List[TreeNode] = [b]
        x, y = a, b
        while self.depth[x] > self.depth[y]:
            x = self.parent[x]
            up_a.append(x)
        while self.depth[y] > self.depth[x]:
            y = self.parent[y]
            up_b.append(y)
        while x != y:
            x = self.parent[x]
            y = self.parent[y]
            up_a.append(x)
            up_b.append(y)
        up_b.pop()  # shared ancestor listed once
        return tuple(up_a + up_b[::-1])

    def distance(self, a: TreeNode, b: TreeNode) -> int:
        return len(self.geodesic(a, b)) - 1

    def on_geodesic(self, y: TreeNode, a: TreeNode, b: TreeNode) -> bool:
        return y in self.geodesic(a, b)

    def same_side(self, y: TreeNode, a: TreeNode, b: TreeNode) -> bool:
        """Whether a and b stay connected when y is removed from the tree."""
        for node in (a, b):
            if node == y:
                return False
        return not self.on_geodesic(y, a, b)

    def vertex_node(self, v: int) -> TreeNode:
        self._check(("v", v))
        return ("v", v)

    def block_node(self, index: int) -> TreeNode:
        self._check(("b", index))
        return ("b", index)


def ball_block_cut_tree(ball: AmalgamBall) -> BallTree:
    if ball._tree is None:
        ball._tree = BallTree(ball)
    return ball._tree


class BallAutomorphism:
    """A partial automorphism of a ball, restriction of an infinite one.

    vertex_map and block_map record where everything the map can still
    see lands; anything whose image would leave the ball is absent from
    the domain.  Applying to an undefined vertex returns None, and
    "fixes" is deliberately strict: an undefined image counts as moved.
    """

    def __init__(
        self,
        ball: AmalgamBall,
        vertex_map: Dict[int, int],
        block_map: Dict[int, int],
        provenance: str,
    ):
        self.ball = ball
        self.vertex_map = dict(vertex_map)
        self.block_map = dict(block_map)
        self.provenance = provenance

    def apply(self, v: int) -> Optional[int]:
        return self.vertex_map.get(v)

    def apply_block(self, index: int) -> Optional[int]:
        return self.block_map.get(index)

    def apply_node(self, node: TreeNode) -> Optional[TreeNode]:
        tag, idx = node
        image = self.apply(idx) if tag == "v" else self.apply_block(idx)
        return None if image is None else (tag, image)

    @property
    def domain(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vertex_map))

    def is_total(self) -> bool:
        return len(self.vertex_map) == self.ball.vertex_count

    def fixes_vertex(self, v: int) -> bool:
        return self.vertex_map.get(v) == v

    def fixes_node(self, node: TreeNode) -> bool:
        return self.apply_node(node) == node

    def compose(self, other: "BallAutomorphism") -> "BallAutomorphism":
        """self then other, matching the right-action convention."""
        vm = {}
        for v, w in self.vertex_map.items():
            z = other.vertex_map.get(w)
            if z is not None:
                vm[v] = z
        bm = {}
        for b, c in self.block_map.items():
            d = other.block_map.get(c)
            if d is not None:
                bm[b] = d
        return BallAutomorphism(self.ball, vm, bm, "composite")

    def inverse(self) -> "BallAutomorphism":
        vm = {w: v for v, w in self.vertex_map.items()}
        bm = {c: b for b, c in self.block_map.items()}
        return BallAutomorphism(self.ball, vm, bm, self.provenance)

    def same_map(self, other: "BallAutomorphism") -> bool:
        return self.vertex_map == other.vertex_map

    def _key(self):
        return tuple(sorted(self.vertex_map.items()))

    def verify(self) -> bool:
        """Injectivity, arc preservation both ways, block coherence."""
        values = list(self.vertex_map.values())
        if len(set(values)) != len(values):
            return False
        for mapping in (self.vertex_map, {w: v for v, w in self.vertex_map.items()}):
            for u, w in self.ball.graph.edges:
                iu, iw = mapping.get(u), mapping.get(w)
                if iu is not None and iw is not None:
                    if not self.ball.graph.has_edge(iu, iw):
                        return False
        for b, c in self.block_map.items():
            src = self.ball.registry[b].vertex_by_label
            dst = set(self.ball.registry[c].vertex_by_label)
            for v in src:
                img = self.vertex_map.get(v)
                if img is not None and img not in dst:
                    return False
        return True


def _grow_map(
    ball: AmalgamBall,
    seeds: Dict[int, Tuple[int, Dict[int, int]]],
    provenance: str,
) -> BallAutomorphism:
    """Extend block-to-block seed isomorphisms across the whole ball.

    Each seed maps one block copy onto another by an explicit vertex
    map.  From there the engine walks the copy tree: at every mapped
    vertex whose image is interior, the not-yet-matched copies on both
    sides are paired in registry order and carried across by the least
    aligned block automorphism.  Growth stops exactly where the image
    side leaves the ball, which is what makes the result the honest
    restriction of an infinite automorphism.
    """
    vertex_map: Dict[int, int] = {}
    block_map: Dict[int, int] = {}
    used_targets = set()
    used_images = set()

    def install(src: int, dst: int, vmap: Dict[int, int]) -> None:
        block_map[src] = dst
        used_targets.add(dst)
        for v, w in vmap.items():
            if v in vertex_map:
                assert vertex_map[v] == w, "inconsistent seed overlap"
            else:
                assert w not in used_images, "image collision while growing"
                vertex_map[v] = w
                used_images.add(w)

    queue: List[int] = []
    for src in sorted(seeds):
        dst, vmap = seeds[src]
        install(src, dst, vmap)
        queue.append(src)
    head = 0
    while head < len(queue):
        b = queue[head]
        head += 1
        for v in ball.registry[b].vertex_by_label:
            w = vertex_map[v]
            if v not in ball.interior or w not in ball.interior:
                continue
            src_rest = [c for c in ball.blocks_at(v) if c not in block_map]
            dst_rest = [c for c in ball.blocks_at(w) if c not in used_targets]
            assert len(src_rest) == len(dst_rest), "copy counts diverge at an interior vertex"
            for c, d in zip(src_rest, dst_rest):
                lc = ball.registry[c].label_of(v)
                ld = ball.registry[d].label_of(w)
                tau = ball.aligned_block_map(lc, ld)
                src_vbl = ball.registry[c].vertex_by_label
                dst_vbl = ball.registry[d].vertex_by_label
                vmap = {src_vbl[l]: dst_vbl[tau.images[l]] for l in range(len(src_vbl))}
                install(c, d, vmap)
                queue.append(c)
    return BallAutomorphism(ball, vertex_map, block_map, provenance)


def identity_map(ball: AmalgamBall) -> BallAutomorphism:
    vm = {v: v for v in range(ball.vertex_count)}
    bm = {b.index: b.index for b in ball.registry}
    return BallAutomorphism(ball, vm, bm, "identity")


def block_lift(ball: AmalgamBall, tau: perm.Permutation) -> BallAutomorphism:
    """The canonical total extension of a root-copy automorphism."""
    if tau.degree != ball.block_graph.vertex_count:
        raise InvalidAutomorphism(
            f"degree {tau.degree} does not match the block graph"
        )
    if not perm.contains(ball.block_aut, tau):
        raise InvalidAutomorphism("not an automorphism of the block graph")
    seed = {0: (0, {l: tau.images[l] for l in range(tau.degree)})}
    out = _grow_map(ball, seed, "block-lift")
    assert out.is_total()
    return out


def block_anchored_map(
    ball: AmalgamBall, index: int, tau: perm.Permutation
) -> BallAutomorphism:
    """Apply a block automorphism inside one copy and grow outward."""
    if not 0 <= index < len(ball.registry):
        raise PointOutOfRange(f"no block copy {index}")
    if not perm.contains(ball.block_aut, tau):
        raise InvalidAutomorphism("not an automorphism of the block graph")
    vbl = ball.registry[index].vertex_by_label
    seed = {index: (index, {vbl[l]: vbl[tau.images[l]] for l in range(len(vbl))})}
    return _grow_map(ball, seed, "block-lift")


def slot_swap(ball: AmalgamBall, v: int, slot_a: int, slot_b: int) -> BallAutomorphism:
    """Exchange two of the block copies through an interior vertex."""
    if v not in ball.interior:
        raise VertexNotInterior(f"vertex {v} is not interior")
    copies = ball.blocks_at(v)
    for s in (slot_a, slot_b):
        if not 0 <= s < len(copies):
            raise PointOutOfRange(f"slot {s} not in 0..{len(copies) - 1}")
    if slot_a == slot_b:
        raise ValueError("slot swap needs two distinct slots")
    ca, cb = copies[slot_a], copies[slot_b]
    la = ball.registry[ca].label_of(v)
    lb = ball.registry[cb].label_of(v)
    tau_ab = ball.aligned_block_map(la, lb)
    tau_ba = ball.aligned_block_map(lb, la)
    vbl_a = ball.registry[ca].vertex_by_label
    vbl_b = ball.registry[cb].vertex_by_label
    n = len(vbl_a)
    seeds = {
        ca: (cb, {vbl_a[l]: vbl_b[tau_ab.images[l]] for l in range(n)}),
        cb: (ca, {vbl_b[l]: vbl_a[tau_ba.images[l]] for l in range(n)}),
    }
    out = _grow_map(ball, seeds, "slot-swap")
    assert out.fixes_vertex(v)
    return out


def extend_automorphism(
    small: AmalgamBall, sigma: BallAutomorphism, big: AmalgamBall
) -> BallAutomorphism:
    """Extend a total automorphism of a ball to the next larger ball.

    The extension pairs the fresh copies at each outermost vertex in
    registry order, so it is canonical: extending the identity yields
    the identity, and iterating from the root copy reproduces
    ``block_lift`` on any radius.
    """
    if big.block_graph != small.block_graph or big.multiplicity != small.multiplicity:
        raise RadiusMismatch("balls are over different amalgams")
    if big.radius != small.radius + 1:
        raise RadiusMismatch(
            f"need radius {small.radius + 1}, got {big.radius}"
        )
    if sigma.ball is not small:
        raise InvalidAutomorphism("map does not belong to the smaller ball")
    if not sigma.is_total() or not sigma.verify():
        raise InvalidAutomorphism("map is not a total automorphism of its ball")
    # smaller ball is an index prefix of the bigger one
    for copy in small.registry:
        twin = big.registry[copy.index]
        assert copy.vertex_by_label == twin.vertex_by_label
    seeds = {}
    for copy in small.registry:
        target = sigma.block_map[copy.index]
        vmap = {v: sigma.vertex_map[v] for v in copy.vertex_by_label}
        seeds[copy.index] = (target, vmap)
    out = _grow_map(big, seeds, "extension")
    assert out.is_total()
    return out


def stabilizer_generators_on_ball(
    ball: AmalgamBall, v: int
) -> Tuple[BallAutomorphism, ...]:
    """Generators of the vertex stabilizer visible on this ball.

    Two families: block automorphisms fixing v applied inside each copy
    through v, and the swaps of any two copies through v.  Every map
    returned fixes v; maps that would need room beyond the boundary are
    partial there.
    """
    if v not in ball.interior:
        raise VertexNotInterior(f"vertex {v} is not interior")
    if v in ball._stab_cache:
        return ball._stab_cache[v]
    out: List[BallAutomorphism] = []
    elements = perm.enumerate_elements(ball.block_aut)
    for index in ball.blocks_at(v):
        label = ball.registry[index].label_of(v)
        for tau in elements:
            if tau.is_identity() or tau.images[label] != label:
                continue
            out.append(block_anchored_map(ball, index, tau))
    copies = ball.blocks_at(v)
    for i in range(len(copies)):
        for j in range(i + 1, len(copies)):
            out.append(slot_swap(ball, v, i, j))
    for g in out:
        assert g.fixes_vertex(v)
    ball._stab_cache[v] = tuple(out)
    return ball._stab_cache[v]


def structural_generators(ball: AmalgamBall) -> Tuple[BallAutomorphism, ...]:
    """Root lifts plus all interior stabilizer families, with inverses.

    This is the working generator pool for orbit closures on a ball;
    deduplicated by vertex action, cached on the ball.
    """
    if ball._structural is not None:
        return ball._structural
    pool: List[BallAutomorphism] = []
    for tau in perm.enumerate_elements(ball.block_aut):
        if not tau.is_identity():
            pool.append(block_lift(ball, tau))
    for v in sorted(ball.interior):
        pool.extend(stabilizer_generators_on_ball(ball, v))
    pool.extend([g.inverse() for g in pool])
    seen = set()
    unique: List[BallAutomorphism] = []
    for g in pool:
        key = g._key()
        if key not in seen:
            seen.add(key)
            unique.append(g)
    ball._structural = tuple(unique)
    return ball._structural
