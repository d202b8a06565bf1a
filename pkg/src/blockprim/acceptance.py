"""End-to-end acceptance checks, runnable from tests or ``selftest``.

Each criterion exercises a documented behavior of the package at fixed
inputs with a time budget.  Failures carry the failing detail; nothing
here is statistical except the seeded word sampling in the rewriting
check.
"""

import random
import time
from dataclasses import dataclass
from typing import Callable, List, Tuple

from . import amalgam, corpus, decomp, perm, primtest, verdict
from .amalgam import build_ball, closed_form_ball_size
from .errors import WordNotEvaluable


@dataclass(frozen=True)
class CriterionResult:
    name: str
    passed: bool
    elapsed: float
    limit: float
    detail: str


def _c01_primitivity_oracles() -> str:
    groups = corpus.standard_transitive_groups()
    assert len(groups) >= 10, f"corpus has only {len(groups)} groups"
    imprimitive = 0
    for name, G in groups:
        assert G.degree <= 8, f"{name} exceeds degree 8"
        assert perm.is_transitive(G), f"{name} is not transitive"
        h, _ = primtest.is_primitive_higman(G)
        c = primtest.is_primitive_congruence(G)
        m = primtest.is_maximal_stabilizer(G)
        assert h == c == m, f"{name}: orbital={h} congruence={c} maximality={m}"
        if not h:
            imprimitive += 1
    assert imprimitive >= 2, "corpus needs imprimitive examples"
    return f"{len(groups)} groups agree on all three tests ({imprimitive} imprimitive)"


def _c02_decide_verdicts() -> str:
    expected = {
        "triangle": (verdict.PRIMITIVE, set()),
        "paley-7": (verdict.PRIMITIVE, set()),
        "directed-triangle": (verdict.NOT_PRIMITIVE, {verdict.REASON_REGULAR}),
        "directed-pentagon": (verdict.NOT_PRIMITIVE, {verdict.REASON_REGULAR}),
        "square": (verdict.NOT_PRIMITIVE, {verdict.REASON_IMPRIMITIVE}),
        "single-edge": (verdict.NOT_PRIMITIVE, {verdict.REASON_SIZE}),
    }
    for name, (want, reasons) in expected.items():
        decision = verdict.decide(corpus.block_by_name(name))
        assert decision.verdict == want, f"{name}: got {decision.verdict}"
        missing = reasons - set(decision.reasons)
        assert not missing, f"{name}: reasons {decision.reasons} miss {missing}"
    return f"{len(expected)} fixed verdicts reproduced"


def _c03_undirected_agreement() -> str:
    checked = 0
    for name, block in corpus.standard_blocks():
        if not block.is_symmetric():
            continue
        separate = verdict.undirected_primitive(block)
        combined = verdict.decide(block).verdict == verdict.PRIMITIVE
        assert separate == combined, f"{name}: split criteria disagree"
        checked += 1
    assert checked >= 4, "too few symmetric blocks"
    return f"{checked} symmetric blocks agree with the undirected criterion"


def _c04_ball_counts() -> str:
    blocks = [corpus.block_by_name(n) for n in ("triangle", "square", "paley-7")]
    built = 0
    for block in blocks:
        for m in (2, 3):
            for k in (0, 1, 2):
                ball = build_ball(block, m, k)
                n = block.vertex_count
                want = closed_form_ball_size(n, m, k)
                assert ball.vertex_count == want, (
                    f"n={n} m={m} k={k}: {ball.vertex_count} != {want}"
                )
                found = {frozenset(b) for b in decomp.blocks(ball.graph)}
                registered = {
                    frozenset(c.vertex_by_label) for c in ball.registry
                }
                assert found == registered, f"n={n} m={m} k={k}: copy sets diverge"
                cuts = decomp.cut_vertices(ball.graph)
                assert cuts == tuple(sorted(ball.interior)), (
                    f"n={n} m={m} k={k}: cut vertices are not the interior"
                )
                built += 1
    return f"{built} balls match the closed form and decompose back"


def _c05_extension_and_induced() -> str:
    taus_checked = 0
    for name in ("triangle", "square", "directed-triangle"):
        block = corpus.block_by_name(name)
        b0 = build_ball(block, 2, 0)
        b1 = build_ball(block, 2, 1)
        b2 = build_ball(block, 2, 2)
        for tau in perm.enumerate_elements(b0.block_aut):
            s0 = amalgam.block_lift(b0, tau)
            s1 = amalgam.extend_automorphism(b0, s0, b1)
            s2 = amalgam.extend_automorphism(b1, s1, b2)
            assert s2.is_total() and s2.verify(), f"{name}: extension broke"
            for v in range(b1.vertex_count):
                assert s2.apply(v) == s1.apply(v), f"{name}: extension moved old vertices"
            direct = amalgam.block_lift(b2, tau)
            assert s2.same_map(direct), f"{name}: iterated extension is not the lift"
            taus_checked += 1
        induced = verdict.block_stabilizer_induced_group(b2, 0)
        want = set(perm.enumerate_elements(b2.block_aut))
        got = set(perm.enumerate_elements(induced))
        assert got == want, f"{name}: induced group differs from the block group"
    return f"{taus_checked} automorphisms extended twice; induced groups match"


def _c06_regular_word_check() -> str:
    ball = build_ball(corpus.block_by_name("directed-triangle"), 2, 4)
    report = verdict.bounded_word_orbit_check(ball, 0, 1, y=("b", 0), max_len=6)
    assert report.informative_evaluated > 0, "no informative words evaluated"
    assert report.alpha_hits == 0, f"{report.alpha_hits} words reached the first vertex"
    assert report.distance_violations == 0, "tree distance failed to grow"
    assert report.component_violations == 0, "an image crossed to the far side"
    return (
        f"{report.evaluated} of {report.total_words} words evaluated, "
        f"max tree distance {report.max_tree_distance}, zero violations"
    )


def _c07_imprimitive_orbit_split() -> str:
    ball = build_ball(corpus.block_by_name("square"), 2, 2)
    report = verdict.orbital_disconnection_witness(ball, 0, 2)
    assert report.label_components == ((0, 2), (1, 3)), (
        f"label split came out as {report.label_components}"
    )
    assert report.separated, "an orbit arc crossed between sides"
    assert report.is_witness, "orbit closure did not disconnect"

    def component_of(v: int):
        for comp in report.components:
            if v in comp:
                return comp
        return None

    assert component_of(0) is component_of(2), "0 and 2 split apart"
    assert component_of(1) is not None, "the rotated pair never appeared"
    assert component_of(0) is not component_of(1), "0 and 1 ended up together"
    return (
        f"{report.arc_count} arcs over {report.touched} vertices in "
        f"{len(report.components)} separated components"
    )


def _c08_congruence_collapse() -> str:
    ball = build_ball(corpus.block_by_name("triangle"), 2, 3)
    seeds = [(0, 1), (0, 3), (3, 9), (4, 7)]
    for a, b in seeds:
        report = verdict.congruence_propagation(ball, a, b)
        assert report.collapsed, f"seed ({a}, {b}) left {len(report.interior_classes)} classes"
    return f"{len(seeds)} seed pairs each collapse all {len(ball.interior)} interior vertices"


def _c09_word_rewriting() -> str:
    ball = build_ball(corpus.block_by_name("directed-triangle"), 2, 4)
    alpha, beta, y = 0, 1, ("b", 0)
    fam_a = amalgam.stabilizer_generators_on_ball(ball, alpha)
    fam_b = amalgam.stabilizer_generators_on_ball(ball, beta)
    rng = random.Random(20250816)
    successes = 0
    skipped = 0
    compared = 0
    attempts = 0
    while successes < 100 and attempts < 2000:
        attempts += 1
        length = rng.randint(1, 8)
        letters = []
        for _ in range(length):
            side = rng.choice(("a", "b"))
            fam = fam_a if side == "a" else fam_b
            letters.append(
                verdict.Letter(side, rng.randrange(len(fam)), rng.choice((1, -1)))
            )
        word = verdict.GroupWord(tuple(letters))
        try:
            result = verdict.normal_form_rewrite(ball, alpha, beta, word, y=y)
        except WordNotEvaluable:
            skipped += 1
            continue
        assert result.shape_ok(), f"word {letters} lost the alternating shape"
        rewritten = result.rewritten()
        for v in result.qualifying_vertices():
            a_img = result.original.apply(v)
            b_img = rewritten.apply(v)
            if a_img is not None and b_img is not None:
                assert a_img == b_img, f"actions differ at {v}"
                compared += 1
        successes += 1
    assert successes >= 100, f"only {successes} rewrites succeeded"
    assert compared > 0, "no comparable vertices at all"
    return (
        f"{successes} random words rewritten ({skipped} not evaluable), "
        f"{compared} vertex actions compared"
    )


def _c10_multiplicity_free() -> str:
    checked = 0
    for name, block in corpus.standard_blocks():
        d2 = verdict.decide(block, 2)
        d3 = verdict.decide(block, 3)
        assert d2.verdict == d3.verdict, f"{name}: verdict depends on multiplicity"
        assert d2.reasons == d3.reasons, f"{name}: reasons depend on multiplicity"
        checked += 1
    return f"{checked} blocks decide identically at multiplicities 2 and 3"


CRITERIA: Tuple[Tuple[str, float, Callable[[], str]], ...] = (
    ("C01-primitivity-oracles", 5.0, _c01_primitivity_oracles),
    ("C02-decide-verdicts", 10.0, _c02_decide_verdicts),
    ("C03-undirected-agreement", 10.0, _c03_undirected_agreement),
    ("C04-ball-counts", 10.0, _c04_ball_counts),
    ("C05-extension-and-induced", 20.0, _c05_extension_and_induced),
    ("C06-regular-word-check", 60.0, _c06_regular_word_check),
    ("C07-imprimitive-orbit-split", 10.0, _c07_imprimitive_orbit_split),
    ("C08-congruence-collapse", 30.0, _c08_congruence_collapse),
    ("C09-word-rewriting", 30.0, _c09_word_rewriting),
    ("C10-multiplicity-free", 10.0, _c10_multiplicity_free),
)


def run_one(name: str, limit: float, fn: Callable[[], str]) -> CriterionResult:
    start = time.perf_counter()
    try:
        detail = fn()
        passed = True
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        passed = False
    except Exception as exc:  # surface the failure, never hide it
        detail = f"{exc.__class__.__name__}: {exc}"
        passed = False
    elapsed = time.perf_counter() - start
    if passed and elapsed > limit:
        passed = False
        detail += f" (took {elapsed:.2f}s, limit {limit:.0f}s)"
    return CriterionResult(name, passed, elapsed, limit, detail)


def run_all() -> List[CriterionResult]:
    return [run_one(name, limit, fn) for name, limit, fn in CRITERIA]
