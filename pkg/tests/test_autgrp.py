import pytest
from hypothesis import given, settings, strategies as st

import frozen
import oracles
from blockprim import autgrp, corpus, digraph, perm
from blockprim.errors import GraphTooLarge


@pytest.mark.parametrize("name", sorted(frozen.BLOCK_FACTS))
def test_block_aut_orders_frozen(name):
    order, vt, _, _ = frozen.BLOCK_FACTS[name]
    g = corpus.block_by_name(name)
    G = autgrp.automorphism_group(g)
    assert perm.order(G) == order
    assert autgrp.is_vertex_transitive(g) == vt


def test_full_element_sets_match_oracle():
    # whole groups, not just orders, for every block small enough
    for name, g in corpus.standard_blocks():
        if g.vertex_count > 6:
            continue
        G = autgrp.automorphism_group(g)
        ours = sorted(p.images for p in perm.enumerate_elements(G))
        ref = sorted(oracles.automorphisms_by_filter(g.vertex_count, list(g.edges)))
        assert ours == ref, name


def test_aligned_isomorphism_forces_anchor():
    g = corpus.block_by_name("triangle")
    iso = autgrp.aligned_isomorphism(g, 0, g, 2)
    assert iso is not None and iso.apply(0) == 2
    # images preserve arcs
    for u, v in g.edges:
        assert (iso.apply(u), iso.apply(v)) in set(g.edges)


def test_aligned_isomorphism_none_when_impossible():
    tri = corpus.block_by_name("triangle")
    sq = corpus.block_by_name("square")
    assert autgrp.aligned_isomorphism(tri, 0, sq, 0) is None


def test_aligned_isomorphism_is_least():
    # repeated calls yield the same lexicographically minimal map
    g = corpus.block_by_name("square")
    a = autgrp.aligned_isomorphism(g, 0, g, 0)
    b = autgrp.aligned_isomorphism(g, 0, g, 0)
    assert a == b
    for p in perm.enumerate_elements(autgrp.automorphism_group(g)):
        if p.apply(0) == 0:
            assert a.images <= p.images


def test_not_vertex_transitive():
    path = digraph.make(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
    assert not autgrp.is_vertex_transitive(path)


def test_edge_transitivity():
    assert autgrp.is_edge_transitive(corpus.block_by_name("square"))
    path = digraph.make(4, oracles.shadow_arcs([(0, 1), (1, 2), (2, 3)]))
    # end edges and the middle edge sit in different orbits
    assert not autgrp.is_edge_transitive(path)


def test_vertex_limit():
    big = digraph.undirected_cycle(13)
    with pytest.raises(GraphTooLarge):
        autgrp.automorphism_group(big)


small_graphs = st.integers(2, 5).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda e: e[0] != e[1]
            ),
            max_size=10,
            unique=True,
        ),
    )
)


@settings(max_examples=50, deadline=None)
@given(small_graphs)
def test_random_graphs_match_filter_oracle(spec):
    n, arcs = spec
    g = digraph.make(n, arcs)
    G = autgrp.automorphism_group(g)
    ours = sorted(p.images for p in perm.enumerate_elements(G))
    assert ours == sorted(oracles.automorphisms_by_filter(n, arcs))
