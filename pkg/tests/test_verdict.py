"""End verdicts, witnesses, word checks, and the rewriting engine."""

import random

import pytest

from blockprim import amalgam, corpus, digraph, verdict
from blockprim.errors import (
    EqualPair,
    PreconditionFailed,
    PreconditionNotImprimitive,
    VertexNotInterior,
)

# verdict and reason set per corpus block
EXPECTED = {
    "triangle": (verdict.PRIMITIVE, ()),
    "square": (verdict.NOT_PRIMITIVE, (verdict.REASON_IMPRIMITIVE,)),
    "pentagon": (verdict.PRIMITIVE, ()),
    "hexagon": (verdict.NOT_PRIMITIVE, (verdict.REASON_IMPRIMITIVE,)),
    "tetrahedron": (verdict.PRIMITIVE, ()),
    "directed-triangle": (verdict.NOT_PRIMITIVE, (verdict.REASON_REGULAR,)),
    "directed-pentagon": (verdict.NOT_PRIMITIVE, (verdict.REASON_REGULAR,)),
    "paley-7": (verdict.PRIMITIVE, ()),
    "single-edge": (verdict.NOT_PRIMITIVE,
                    (verdict.REASON_SIZE, verdict.REASON_REGULAR)),
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_decide_frozen(name):
    want_verdict, want_reasons = EXPECTED[name]
    d = verdict.decide(corpus.block_by_name(name), 2)
    assert d.verdict == want_verdict
    assert d.reasons == want_reasons


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_verdict_ignores_multiplicity(name):
    block = corpus.block_by_name(name)
    base = verdict.decide(block, 2)
    for m in (3, 4):
        again = verdict.decide(block, m)
        assert again.verdict == base.verdict
        assert again.reasons == base.reasons


def test_non_transitive_block_is_out_of_scope():
    diamond_edges = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    arcs = diamond_edges + [(v, u) for u, v in diamond_edges]
    d = verdict.decide(digraph.make(4, arcs), 2)
    assert d.verdict == verdict.OUT_OF_SCOPE
    assert d.reasons == (verdict.REASON_NOT_VT,)


def test_undirected_route_agrees():
    for name, block in corpus.standard_blocks():
        if not block.is_symmetric():
            continue
        direct = verdict.undirected_primitive(block)
        assert direct == (verdict.decide(block, 2).verdict == verdict.PRIMITIVE), name


def test_undirected_route_rejects_directed_input():
    with pytest.raises(PreconditionFailed):
        verdict.undirected_primitive(corpus.block_by_name("directed-triangle"))


# ---------------------------------------------------------------- witnesses

def square_ball(radius=2):
    return amalgam.build_ball(corpus.block_by_name("square"), 2, radius)


def test_orbital_witness_on_square():
    rep = verdict.orbital_disconnection_witness(square_ball(), 0, 2)
    assert rep.label_components == ((0, 2), (1, 3))
    assert rep.separated
    assert rep.is_witness
    assert len(rep.components) > 1
    assert rep.arc_count == len(rep.arcs) > 0


def test_orbital_adjacent_pair_not_a_witness():
    rep = verdict.orbital_disconnection_witness(square_ball(), 0, 1)
    assert not rep.is_witness
    assert rep.interior_connected


def test_orbital_requires_imprimitive_block():
    tri_ball = amalgam.build_ball(corpus.block_by_name("triangle"), 2, 2)
    with pytest.raises(PreconditionNotImprimitive):
        verdict.orbital_disconnection_witness(tri_ball, 0, 1)


def test_orbital_pair_validation():
    ball = square_ball()
    with pytest.raises(EqualPair):
        verdict.orbital_disconnection_witness(ball, 1, 1)
    boundary_vertex = sorted(ball.boundary)[0]
    with pytest.raises(VertexNotInterior):
        verdict.orbital_disconnection_witness(ball, 0, boundary_vertex)


def test_propagation_collapses_triangle():
    ball = amalgam.build_ball(corpus.block_by_name("triangle"), 2, 3)
    for seed in [(0, 1), (0, 3), (3, 9)]:
        rep = verdict.congruence_propagation(ball, *seed)
        assert rep.collapsed
        assert len(rep.interior_classes) == 1


def test_propagation_preconditions():
    with pytest.raises(PreconditionFailed):
        verdict.congruence_propagation(square_ball(), 0, 1)
    dt = amalgam.build_ball(corpus.block_by_name("directed-triangle"), 2, 2)
    with pytest.raises(PreconditionFailed):
        verdict.congruence_propagation(dt, 0, 1)


# ---------------------------------------------------------------- words

def dt_ball(radius=4):
    return amalgam.build_ball(corpus.block_by_name("directed-triangle"), 2, radius)


def test_word_check_clean_on_regular_block():
    rep = verdict.bounded_word_orbit_check(dt_ball(), 0, 1, max_len=4)
    assert rep.informative_evaluated > 0
    assert rep.alpha_hits == 0
    assert rep.distance_violations == 0
    assert rep.component_violations == 0
    assert rep.clean
    assert rep.evaluated + rep.skipped == rep.total_words


def test_word_check_budget():
    with pytest.raises(ValueError):
        verdict.bounded_word_orbit_check(dt_ball(2), 0, 1, max_len=6,
                                         word_budget=100)


def test_induced_group_is_block_group():
    from blockprim import perm
    for name in ("triangle", "square"):
        ball = amalgam.build_ball(corpus.block_by_name(name), 2, 2)
        induced = verdict.block_stabilizer_induced_group(ball, 0)
        assert set(perm.enumerate_elements(induced)) == \
            set(perm.enumerate_elements(ball.block_aut))


def test_rewrite_empty_word():
    res = verdict.normal_form_rewrite(dt_ball(), 0, 1, verdict.GroupWord(()))
    assert res.runs == ()
    assert res.shape_ok()


def test_rewrite_random_words():
    ball = dt_ball()
    ctx_y = None
    rng = random.Random(7)
    fams = {
        "a": verdict.stabilizer_generators_on_ball(ball, 0),
        "b": verdict.stabilizer_generators_on_ball(ball, 1),
    }
    rewritten = 0
    for _ in range(40):
        letters = tuple(
            verdict.Letter(side, rng.randrange(len(fams[side])),
                           rng.choice((1, -1)))
            for side in (rng.choice("ab") for _ in range(rng.randint(1, 6)))
        )
        word = verdict.GroupWord(letters)
        try:
            res = verdict.normal_form_rewrite(ball, 0, 1, word, y=ctx_y)
        except verdict.WordNotEvaluable:
            continue
        rewritten += 1
        assert res.shape_ok()
        # original and rewritten act identically on vertices fixed by drops
        out = res.rewritten()
        for v in res.qualifying_vertices():
            a = res.original.apply(v)
            b = out.apply(v)
            if a is not None and b is not None:
                assert a == b
    assert rewritten >= 20
