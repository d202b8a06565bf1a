"""The primitivity verdict and its machine-checkable witnesses.

A connectivity-one vertex-transitive digraph glued from copies of one
finite block is primitive exactly when the block has at least 3
vertices and its automorphism group is vertex-transitive, primitive,
and not regular.  ``decide`` evaluates those conditions; the verdict
depends only on the block, never on how many copies share a vertex.

A verdict alone is cheap to claim, so the rest of this module produces
evidence that can be replayed on finite balls:

  * ``orbital_disconnection_witness`` exhibits an invariant splitting
    when the block action is imprimitive,
  * ``bounded_word_orbit_check`` exhausts short stabilizer words in the
    regular-block case and confirms none drags one vertex onto another,
  * ``congruence_propagation`` shows any glued pair collapsing the
    whole interior when the block is primitive and not regular,
  * ``normal_form_rewrite`` reshapes stabilizer words into the
    alternating form those arguments rely on.

Everything acts on the right and all maps are BallAutomorphism values,
so being partial (running off the ball) is an expected outcome, not an
error; the checks count what they could not see instead of guessing.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import digraph, perm, primtest
from .amalgam import (
    AmalgamBall,
    BallAutomorphism,
    BallTree,
    TreeNode,
    ball_block_cut_tree,
    block_anchored_map,
    identity_map,
    stabilizer_generators_on_ball,
    structural_generators,
)
from .digraph import DiGraph
from .errors import (
    BadMultiplicity,
    BallTooSmall,
    BlockNotInterior,
    EqualPair,
    HypothesisFailed,
    NodeNotInTree,
    NotConnected,
    PointOutOfRange,
    PreconditionFailed,
    PreconditionNotImprimitive,
    VertexNotInterior,
    WordNotEvaluable,
)

PRIMITIVE = "Primitive"
NOT_PRIMITIVE = "NotPrimitive"
OUT_OF_SCOPE = "OutOfScope"

REASON_SIZE = "size<3"
REASON_IMPRIMITIVE = "block-imprimitive"
REASON_REGULAR = "block-regular"
REASON_NOT_VT = "not-vertex-transitive"


@dataclass(frozen=True)
class Decision:
    verdict: str
    reasons: Tuple[str, ...]
    report: primtest.BlockReport


def decide(block: DiGraph, multiplicity: int = 2) -> Decision:
    """Primitivity verdict for the amalgam over ``block``.

    ``multiplicity`` is validated because it is part of the amalgam
    description, but the verdict provably does not depend on it.
    """
    if multiplicity < 2:
        raise BadMultiplicity(f"need at least 2 copies per vertex, got {multiplicity}")
    if not digraph.is_connected(block):
        raise NotConnected("the block must be connected")
    if block.vertex_count < 2:
        raise ValueError("the block needs at least 2 vertices")
    report = primtest.classify_block(block)
    if not report.vertex_transitive:
        return Decision(OUT_OF_SCOPE, (REASON_NOT_VT,), report)
    reasons: List[str] = []
    if not report.size_ok:
        reasons.append(REASON_SIZE)
    if not report.primitive:
        reasons.append(REASON_IMPRIMITIVE)
    if report.regular:
        reasons.append(REASON_REGULAR)
    if reasons:
        return Decision(NOT_PRIMITIVE, tuple(reasons), report)
    return Decision(PRIMITIVE, (), report)


def undirected_primitive(block: DiGraph) -> bool:
    """The undirected-case criterion, kept independent of ``decide``.

    For a symmetric block the amalgam is primitive exactly when the
    block action is primitive and the block has at least 3 vertices;
    regularity plays no role.  Primitivity here goes through the
    congruence route so agreement with ``decide`` is a real check.
    """
    if not block.is_symmetric():
        raise PreconditionFailed("this criterion is for symmetric blocks")
    from .autgrp import automorphism_group

    aut = automorphism_group(block)
    if not perm.is_transitive(aut):
        raise PreconditionFailed("this criterion needs a vertex-transitive block")
    return block.vertex_count >= 3 and primtest.is_primitive_congruence(aut)


# ---------------------------------------------------------------------------
# stabilizer pairs and the generator-level hypothesis


@dataclass(frozen=True)
class Letter:
    """One stabilizer generator in a word: family side, index, and sign."""

    side: str  # "a" for the first vertex's family, "b" for the second
    index: int
    power: int = 1

    def __post_init__(self):
        if self.side not in ("a", "b"):
            raise ValueError(f"letter side must be 'a' or 'b', got {self.side!r}")
        if self.power not in (1, -1):
            raise ValueError(f"letter power must be +-1, got {self.power}")


@dataclass(frozen=True)
class GroupWord:
    letters: Tuple[Letter, ...]


class _PairContext:
    """Families at two interior vertices plus the separating tree node."""

    def __init__(self, ball: AmalgamBall, alpha: int, beta: int, y: Optional[TreeNode]):
        if alpha == beta:
            raise EqualPair("need two distinct vertices")
        for v in (alpha, beta):
            if v not in ball.interior:
                raise VertexNotInterior(f"vertex {v} is not interior")
        tree = ball_block_cut_tree(ball)
        an, bn = ("v", alpha), ("v", beta)
        between = tree.geodesic(an, bn)[1:-1]
        if y is None:
            if not between:
                raise NodeNotInTree("the two vertices have no separating node")
            y = between[len(between) // 2]
        if y not in between:
            raise NodeNotInTree(f"{y} does not separate the pair")
        self.ball = ball
        self.tree = tree
        self.alpha = alpha
        self.beta = beta
        self.y = y
        self.fam_a = stabilizer_generators_on_ball(ball, alpha)
        self.fam_b = stabilizer_generators_on_ball(ball, beta)

    def check_hypothesis(self) -> None:
        """Generator-level test that the two (vertex, y) stabilizers agree.

        Each family generator fixing the separating node must fix the
        other vertex too.  A generator that fixes y but whose image of
        the far vertex fell off the ball cannot be checked at all, and
        that is a radius problem, not a verdict.
        """
        for g in self.fam_a:
            if g.fixes_node(self.y):
                image = g.apply(self.beta)
                if image is None:
                    raise BallTooSmall(
                        "cannot check the stabilizer hypothesis at this radius"
                    )
                if image != self.beta:
                    raise HypothesisFailed(
                        f"a stabilizer of {self.alpha} fixing {self.y} moves {self.beta}"
                    )
        for h in self.fam_b:
            if h.fixes_node(self.y):
                image = h.apply(self.alpha)
                if image is None:
                    raise BallTooSmall(
                        "cannot check the stabilizer hypothesis at this radius"
                    )
                if image != self.alpha:
                    raise HypothesisFailed(
                        f"a stabilizer of {self.beta} fixing {self.y} moves {self.alpha}"
                    )

    def letter_map(self, letter: Letter) -> BallAutomorphism:
        fam = self.fam_a if letter.side == "a" else self.fam_b
        if not 0 <= letter.index < len(fam):
            raise PointOutOfRange(
                f"letter index {letter.index} not in 0..{len(fam) - 1}"
            )
        g = fam[letter.index]
        return g.inverse() if letter.power == -1 else g


# ---------------------------------------------------------------------------
# normal form rewriting


@dataclass
class RewriteResult:
    """Alternating runs equivalent to the input word up to dropped fixers.

    ``runs`` multiply out (left to right) to the same partial map as the
    input word with the ``dropped`` prefix elements removed; each
    dropped element fixes both the first vertex and the separating
    node, so the action agrees on every vertex those elements fix.
    """

    ball: AmalgamBall
    alpha: int
    beta: int
    y: TreeNode
    runs: Tuple[Tuple[str, BallAutomorphism], ...]
    dropped: Tuple[BallAutomorphism, ...]
    original: BallAutomorphism

    def rewritten(self) -> BallAutomorphism:
        acc = identity_map(self.ball)
        for _, g in self.runs:
            acc = acc.compose(g)
        return acc

    def qualifying_vertices(self) -> Tuple[int, ...]:
        """Interior vertices on which original and rewritten must agree."""
        out = []
        for v in sorted(self.ball.interior):
            if all(d.fixes_vertex(v) for d in self.dropped):
                out.append(v)
        return tuple(out)

    def shape_ok(self) -> bool:
        sides = [side for side, _ in self.runs]
        if any(s1 == s2 for s1, s2 in zip(sides, sides[1:])):
            return False
        for pos, (side, g) in enumerate(self.runs):
            anchor = self.alpha if side == "a" else self.beta
            if not g.fixes_vertex(anchor):
                return False
            trailing = pos == len(self.runs) - 1
            if side == "a" and g.fixes_node(self.y):
                return False
            if side == "b" and not trailing and g.fixes_node(self.y):
                return False
        return True


def _certify_far_fix(g: BallAutomorphism, far: int) -> None:
    image = g.apply(far)
    if image is None:
        raise WordNotEvaluable(
            "an absorbed element ran off the ball before it could be checked"
        )
    if image != far:
        raise HypothesisFailed(
            "an element fixing the separating node moves the far vertex"
        )


def normal_form_rewrite(
    ball: AmalgamBall,
    alpha: int,
    beta: int,
    word: GroupWord,
    y: Optional[TreeNode] = None,
) -> RewriteResult:
    """Rewrite a two-family stabilizer word into alternating normal form.

    Runs fixing the separating node are folded into a neighboring run of
    the other side (legitimate exactly because the two two-point
    stabilizers coincide, which is certified as it happens) and a
    leading run that fixes both its own vertex and the node is dropped
    with a record.  Absorptions never change the composite map; drops
    change it only off the vertices the dropped elements fix.
    """
    ctx = _PairContext(ball, alpha, beta, y)
    ctx.check_hypothesis()
    original = identity_map(ball)
    runs: List[Tuple[str, BallAutomorphism]] = []
    for letter in word.letters:
        g = ctx.letter_map(letter)
        original = original.compose(g)
        if runs and runs[-1][0] == letter.side:
            runs[-1] = (letter.side, runs[-1][1].compose(g))
        else:
            runs.append((letter.side, g))
    dropped: List[BallAutomorphism] = []
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(runs):  # re-merge neighbors exposed by an absorption
            if runs[i][0] == runs[i + 1][0]:
                runs[i] = (runs[i][0], runs[i][1].compose(runs[i + 1][1]))
                del runs[i + 1]
                changed = True
            else:
                i += 1
        for i, (side, g) in enumerate(runs):
            if not g.fixes_node(ctx.y):
                continue
            if side == "a":
                if i == 0:
                    if not g.same_map(identity_map(ball)):
                        dropped.append(g)
                    del runs[0]
                else:
                    _certify_far_fix(g, ctx.beta)
                    runs[i - 1] = ("b", runs[i - 1][1].compose(g))
                    del runs[i]
                changed = True
                break
            if side == "b" and i + 1 < len(runs):
                _certify_far_fix(g, ctx.alpha)
                runs[i + 1] = ("a", g.compose(runs[i + 1][1]))
                del runs[i]
                changed = True
                break
            if side == "b" and i + 1 == len(runs) and g.same_map(identity_map(ball)):
                del runs[i]
                changed = True
                break
    return RewriteResult(
        ball, alpha, beta, ctx.y, tuple(runs), tuple(dropped), original
    )


# ---------------------------------------------------------------------------
# exhaustive bounded word check


@dataclass(frozen=True)
class WordCheckReport:
    alphabet: int
    max_letters: int
    total_words: int
    evaluated: int
    skipped: int
    informative_evaluated: int
    alpha_hits: int
    distance_violations: int
    component_violations: int
    max_tree_distance: int

    @property
    def clean(self) -> bool:
        return (
            self.alpha_hits == 0
            and self.distance_violations == 0
            and self.component_violations == 0
        )


def bounded_word_orbit_check(
    ball: AmalgamBall,
    alpha: int,
    beta: int,
    y: Optional[TreeNode] = None,
    max_len: int = 6,
    word_budget: int = 2_000_000,
) -> WordCheckReport:
    """Apply every short stabilizer word to the second vertex and watch it.

    Enumerates all words of at most ``2 * max_len`` letters over both
    families (so up to ``max_len`` alternation pairs of single
    generators), follows the image of the second vertex through the
    ball, and verifies the tree facts the primitivity argument
    predicts: fixing the separating node preserves its distance, and a
    step across it pushes the image strictly further while keeping it
    out of the far side.  The first vertex must never be reached.

    Words whose image leaves the ball are counted as skipped, extensions
    included.  If no evaluable word touches the first family at all the
    ball was too small to say anything and BallTooSmall is raised.
    """
    ctx = _PairContext(ball, alpha, beta, y)
    ctx.check_hypothesis()
    tree = ctx.tree
    y_node = ctx.y
    a_node = ("v", alpha)
    b_node = ("v", beta)

    dist_y = [tree.distance(y_node, ("v", v)) for v in range(ball.vertex_count)]
    dist_a = [tree.distance(a_node, ("v", v)) for v in range(ball.vertex_count)]
    dist_b = [tree.distance(b_node, ("v", v)) for v in range(ball.vertex_count)]
    d_ya = tree.distance(y_node, a_node)
    d_yb = tree.distance(y_node, b_node)

    def in_side(v: int, side: str) -> bool:
        # v lies in the component of the far vertex once y is removed
        if ("v", v) == y_node:
            return False
        if side == "a":
            return dist_y[v] + d_ya > dist_a[v]
        return dist_y[v] + d_yb > dist_b[v]

    alphabet: List[Tuple[str, BallAutomorphism]] = []
    seen_keys = set()
    for side, fam in (("a", ctx.fam_a), ("b", ctx.fam_b)):
        for g in fam:
            for h in (g, g.inverse()):
                key = (side, h._key())
                if key not in seen_keys:
                    seen_keys.add(key)
                    alphabet.append((side, h))

    A = len(alphabet)
    L = 2 * max_len
    total_words = sum(A**l for l in range(L + 1))
    if total_words > word_budget:
        raise ValueError(
            f"{total_words} words over a {A}-letter alphabet exceeds the budget; "
            "lower max_len"
        )
    stats = {
        "evaluated": 0,
        "skipped": 0,
        "informative": 0,
        "alpha_hits": 0,
        "dist_viol": 0,
        "comp_viol": 0,
        "max_dist": 0,
    }

    def subtree_count(remaining: int) -> int:
        return sum(A**l for l in range(remaining + 1))

    def walk(delta: int, depth: int, informative: bool) -> None:
        stats["evaluated"] += 1
        if informative:
            stats["informative"] += 1
        if stats["max_dist"] < dist_y[delta]:
            stats["max_dist"] = dist_y[delta]
        if depth == L:
            return
        for side, g in alphabet:
            nxt = g.apply(delta)
            if nxt is None:
                stats["skipped"] += subtree_count(L - depth - 1)
                continue
            if ("v", delta) != y_node and ("v", nxt) != y_node:
                if g.fixes_node(y_node):
                    if dist_y[nxt] != dist_y[delta]:
                        stats["dist_viol"] += 1
                else:
                    far = "b" if side == "a" else "a"
                    if not in_side(delta, side):
                        if in_side(nxt, far):
                            stats["comp_viol"] += 1
                        if dist_y[nxt] <= dist_y[delta]:
                            stats["dist_viol"] += 1
            if nxt == alpha:
                stats["alpha_hits"] += 1
            walk(nxt, depth + 1, informative or side == "a")

    walk(beta, 0, False)
    assert stats["evaluated"] + stats["skipped"] == total_words
    if stats["informative"] == 0:
        raise BallTooSmall("no word reaching into the first family fit the ball")
    return WordCheckReport(
        alphabet=A,
        max_letters=L,
        total_words=total_words,
        evaluated=stats["evaluated"],
        skipped=stats["skipped"],
        informative_evaluated=stats["informative"],
        alpha_hits=stats["alpha_hits"],
        distance_violations=stats["dist_viol"],
        component_violations=stats["comp_viol"],
        max_tree_distance=stats["max_dist"],
    )


# ---------------------------------------------------------------------------
# orbit disconnection witness


@dataclass(frozen=True)
class OrbitalWitnessReport:
    seed: Tuple[int, int]
    base_copy: int
    label_components: Tuple[Tuple[int, ...], ...]
    arcs: Tuple[Tuple[int, int], ...]
    touched: int
    components: Tuple[Tuple[int, ...], ...]
    separated: bool
    is_witness: bool
    interior_connected: bool

    @property
    def arc_count(self) -> int:
        return len(self.arcs)


def orbital_disconnection_witness(
    ball: AmalgamBall, alpha: int, gamma: int, max_words: int = 6
) -> OrbitalWitnessReport:
    """Trace the orbit of an ordered pair and exhibit the split it respects.

    Requires an imprimitive block action (with a primitive block there
    is nothing to exhibit and PreconditionNotImprimitive says so).  The
    pair must share a block copy; the copy's vertices sort the rest of
    the ball into sides, grouped by the components of the pair's orbit
    inside the copy.  The report shows the bounded orbit closure of the
    pair under the structural generator pool, its components, and
    whether any arc ever crosses between different sides.
    """
    if alpha == gamma:
        raise EqualPair("need two distinct vertices")
    for v in (alpha, gamma):
        if v not in ball.interior:
            raise VertexNotInterior(f"vertex {v} is not interior")
    report = primtest.classify_block(ball.block_graph)
    if report.primitive:
        raise PreconditionNotImprimitive(
            "the block action is primitive, no invariant split to exhibit"
        )
    common = [b for b in ball.blocks_at(alpha) if b in set(ball.blocks_at(gamma))]
    if not common:
        raise PreconditionFailed("the two vertices share no block copy")
    base = common[0]
    copy = ball.registry[base]
    la, lg = copy.label_of(alpha), copy.label_of(gamma)
    label_orbit = perm.pair_orbit(ball.block_aut, la, lg)
    label_graph = digraph.make(ball.block_graph.vertex_count, label_orbit)
    label_components = digraph.connected_components(label_graph)

    side_of_label = {}
    for ci, comp in enumerate(label_components):
        for l in comp:
            side_of_label[l] = ci
    tree = ball_block_cut_tree(ball)
    x_node = ("b", base)

    def entry_label(v: int) -> int:
        # the copy vertex through which v hangs off the base copy
        best_label, best_dist = -1, None
        for l, u in enumerate(copy.vertex_by_label):
            d = tree.distance(("v", v), ("v", u))
            if best_dist is None or d < best_dist:
                best_label, best_dist = l, d
        return best_label

    gens = structural_generators(ball)
    start = (alpha, gamma)
    arcs = {start}
    frontier = [start]
    for _ in range(max_words):
        nxt = []
        for u, v in frontier:
            for g in gens:
                iu, iv = g.apply(u), g.apply(v)
                if iu is None or iv is None:
                    continue
                if (iu, iv) not in arcs:
                    arcs.add((iu, iv))
                    nxt.append((iu, iv))
        if not nxt:
            break
        frontier = nxt

    touched = sorted({v for arc in arcs for v in arc})
    index = {v: i for i, v in enumerate(touched)}
    uf = primtest._UnionFind(len(touched))
    for u, v in arcs:
        uf.union(index[u], index[v])
    comp_map: Dict[int, List[int]] = {}
    for v in touched:
        comp_map.setdefault(uf.find(index[v]), []).append(v)
    components = tuple(tuple(sorted(c)) for c in sorted(comp_map.values()))

    sides = {v: side_of_label[entry_label(v)] for v in touched}
    separated = all(sides[u] == sides[v] for u, v in arcs)
    interior_comps = {
        uf.find(index[v]) for v in touched if v in ball.interior
    }
    return OrbitalWitnessReport(
        seed=start,
        base_copy=base,
        label_components=label_components,
        arcs=tuple(sorted(arcs)),
        touched=len(touched),
        components=components,
        separated=separated,
        is_witness=separated and len(components) > 1,
        interior_connected=len(interior_comps) <= 1,
    )


# ---------------------------------------------------------------------------
# congruence propagation


@dataclass(frozen=True)
class PropagationReport:
    classes: Tuple[Tuple[int, ...], ...]
    interior_classes: Tuple[Tuple[int, ...], ...]

    @property
    def collapsed(self) -> bool:
        return len(self.interior_classes) == 1


def congruence_propagation(
    ball: AmalgamBall, a: int, b: int
) -> PropagationReport:
    """Close a glued pair under generators and whole-copy collapse.

    Models the congruence argument on a finite ball: any invariant
    equivalence gluing two vertices spreads through the structural
    generator pool, and once two vertices of one block copy agree the
    copy's primitivity forces the entire copy into one class; that step
    is exactly why the block must be primitive and not regular, which is
    checked up front (PreconditionFailed otherwise).
    """
    report = primtest.classify_block(ball.block_graph)
    if not (report.primitive and not report.regular):
        raise PreconditionFailed(
            "copy collapse needs a primitive, non-regular block action"
        )
    if a == b:
        raise EqualPair("need two distinct vertices")
    for v in (a, b):
        if v not in ball.interior:
            raise VertexNotInterior(f"vertex {v} is not interior")
    gens = structural_generators(ball)
    uf = primtest._UnionFind(ball.vertex_count)
    pending: List[Tuple[int, int]] = [(a, b)]
    while True:
        while pending:
            x, z = pending.pop()
            if not uf.union(x, z):
                continue
            for g in gens:
                ix, iz = g.apply(x), g.apply(z)
                if ix is not None and iz is not None:
                    pending.append((ix, iz))
        swept = False
        for copy in ball.registry:
            verts = copy.vertex_by_label
            roots: Dict[int, int] = {}
            fused = False
            for v in verts:
                r = uf.find(v)
                if r in roots:
                    fused = True
                    break
                roots[r] = v
            if fused and len({uf.find(v) for v in verts}) > 1:
                for v in verts[1:]:
                    pending.append((verts[0], v))
                swept = True
        if not swept and not pending:
            break
    classes_map: Dict[int, List[int]] = {}
    for v in range(ball.vertex_count):
        classes_map.setdefault(uf.find(v), []).append(v)
    classes = tuple(tuple(sorted(c)) for c in sorted(classes_map.values()))
    interior = []
    for c in classes:
        inside = tuple(v for v in c if v in ball.interior)
        if inside:
            interior.append(inside)
    return PropagationReport(classes, tuple(sorted(interior)))


# ---------------------------------------------------------------------------
# the induced action on a block copy


def block_stabilizer_induced_group(
    ball: AmalgamBall, index: int = 0
) -> perm.GeneratedGroup:
    """The label action induced by ball maps fixing one copy setwise.

    Every block automorphism extends around the ball anchored at the
    copy, so the induced action is the full block automorphism group;
    the maps are built and verified rather than assumed.  Structural
    generators that happen to stabilize the copy are folded in as a
    cross-check, and each of them must induce a block automorphism.
    """
    if not 0 <= index < len(ball.registry):
        raise PointOutOfRange(f"no block copy {index}")
    copy = ball.registry[index]
    if any(v not in ball.interior for v in copy.vertex_by_label):
        raise BlockNotInterior(f"copy {index} touches the boundary")
    label_of = {v: l for l, v in enumerate(copy.vertex_by_label)}
    induced = set()
    for tau in perm.enumerate_elements(ball.block_aut):
        anchored = block_anchored_map(ball, index, tau)
        assert anchored.verify()
        assert anchored.apply_block(index) == index
        induced.add(tau)
    for g in structural_generators(ball):
        if g.apply_block(index) != index:
            continue
        images = [0] * len(copy.vertex_by_label)
        for v in copy.vertex_by_label:
            w = g.apply(v)
            assert w is not None
            images[label_of[v]] = label_of[w]
        p = perm.Permutation(tuple(images))
        assert perm.contains(ball.block_aut, p)
        induced.add(p)
    return perm.GeneratedGroup(
        ball.block_graph.vertex_count, tuple(sorted(induced))
    )
