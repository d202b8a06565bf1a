"""Cut vertices, blocks, and the block-cut tree against brute oracles."""

import pytest
from hypothesis import given, settings, strategies as st

import frozen
import oracles
from blockprim import decomp, digraph
from blockprim.errors import NotConnected


def fixture_graph(name):
    n, edges, _, _ = frozen.DECOMP_FIXTURES[name]
    arcs = oracles.shadow_arcs(edges)
    return digraph.make(n, arcs)


@pytest.mark.parametrize("name", sorted(frozen.DECOMP_FIXTURES))
def test_cut_vertices_frozen(name):
    _, _, cuts, _ = frozen.DECOMP_FIXTURES[name]
    assert tuple(decomp.cut_vertices(fixture_graph(name))) == cuts


@pytest.mark.parametrize("name", sorted(frozen.DECOMP_FIXTURES))
def test_blocks_frozen(name):
    _, _, _, blocks = frozen.DECOMP_FIXTURES[name]
    got = sorted(tuple(sorted(b)) for b in decomp.blocks(fixture_graph(name)))
    assert tuple(got) == blocks


def test_single_vertex():
    g = digraph.make(1, [])
    assert decomp.cut_vertices(g) == ()
    assert decomp.blocks(g) == ((0,),)


def test_disconnected_rejected():
    g = digraph.make(4, [(0, 1), (1, 0)])
    with pytest.raises(NotConnected):
        decomp.cut_vertices(g)
    with pytest.raises(NotConnected):
        decomp.blocks(g)


def test_block_cut_tree_bowtie():
    t = decomp.block_cut_tree(fixture_graph("bowtie"))
    assert t.cut_vertex_set == (2,)
    assert sorted(sorted(b) for b in t.block_sets) == [[0, 1, 2], [2, 3, 4]]
    # one cut vertex joining two block nodes
    assert set(t.neighbors(("v", 2))) == {("b", 0), ("b", 1)}


def test_tree_distance_path():
    t = decomp.block_cut_tree(fixture_graph("path-4"))
    # blocks {0,1},{1,2},{2,3} with cuts 1 and 2 between them
    b_of = {tuple(sorted(b)): i for i, b in enumerate(t.block_sets)}
    first = ("b", b_of[(0, 1)])
    last = ("b", b_of[(2, 3)])
    assert decomp.tree_distance(t, first, last) == 4
    assert decomp.tree_distance(t, ("v", 1), ("v", 2)) == 2


def test_geodesic_trims():
    t = decomp.block_cut_tree(fixture_graph("path-4"))
    full = decomp.tree_geodesic(t, ("v", 1), ("v", 2))
    assert full[0] == ("v", 1) and full[-1] == ("v", 2)
    inner = decomp.tree_geodesic(t, ("v", 1), ("v", 2),
                                 include_start=False, include_end=False)
    assert inner == full[1:-1]
    back = decomp.tree_geodesic(t, ("v", 2), ("v", 1))
    assert back == full[::-1]


def connected_graphs(max_n=7):
    def build(spec):
        n, extra = spec
        # a random spanning path keeps it connected, extras add cycles
        arcs = set()
        for i in range(n - 1):
            arcs.add((i, i + 1))
        for u, v in extra:
            if u != v:
                arcs.add((min(u, v) % n, max(u, v) % n))
        arcs = {(u, v) for u, v in arcs if u != v}
        return digraph.make(n, oracles.shadow_arcs(arcs))

    return st.tuples(
        st.integers(2, max_n),
        st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), max_size=8),
    ).map(build)


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_cut_vertices_match_oracle(g):
    arcs = list(g.edges)
    assert list(decomp.cut_vertices(g)) == oracles.cut_vertices_by_removal(
        g.vertex_count, arcs
    )


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_blocks_match_oracle(g):
    ours = sorted(tuple(sorted(b)) for b in decomp.blocks(g))
    ref = [tuple(sorted(b)) for b in oracles.blocks_by_subsets(
        g.vertex_count, list(g.edges))]
    assert ours == ref


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=6), st.data())
def test_geodesic_endpoints_and_length(g, data):
    t = decomp.block_cut_tree(g)
    nodes = [("v", v) for v in t.cut_vertex_set]
    nodes += [("b", i) for i in range(len(t.block_sets))]
    a = data.draw(st.sampled_from(nodes))
    b = data.draw(st.sampled_from(nodes))
    path = decomp.tree_geodesic(t, a, b)
    assert path[0] == a and path[-1] == b
    assert len(path) == decomp.tree_distance(t, a, b) + 1
    # consecutive nodes really are tree edges
    for x, y in zip(path, path[1:]):
        assert y in t.neighbors(x)
