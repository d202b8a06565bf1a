import pytest
from hypothesis import given, strategies as st

import frozen
import oracles
from blockprim import corpus, digraph, perm
from blockprim.errors import EqualPair, PointOutOfRange


def test_make_rejects_loops():
    with pytest.raises(ValueError):
        digraph.make(3, [(0, 0)])


def test_make_rejects_duplicates():
    with pytest.raises(ValueError):
        digraph.make(3, [(0, 1), (0, 1)])


def test_make_rejects_out_of_range():
    with pytest.raises(PointOutOfRange):
        digraph.make(3, [(0, 3)])


def test_shadow_is_symmetric():
    g = digraph.make(4, [(0, 1), (1, 2), (3, 1)])
    s = digraph.undirected_shadow(g)
    assert s.is_symmetric()
    assert set(s.edges) == {(0, 1), (1, 0), (1, 2), (2, 1), (1, 3), (3, 1)}


def test_components_match_oracle():
    g = digraph.make(6, [(0, 1), (2, 3), (3, 4)])
    ours = [frozenset(c) for c in digraph.connected_components(g)]
    assert ours == oracles.undirected_components(6, list(g.edges))


def test_is_connected():
    assert digraph.is_connected(digraph.undirected_cycle(5))
    assert not digraph.is_connected(digraph.make(3, [(0, 1)]))


def test_distance_is_shadow_distance():
    # distance ignores orientation; it measures the undirected shadow
    g = digraph.directed_cycle(4)
    assert digraph.distance(g, 0, 3) == 1
    assert digraph.distance(g, 0, 2) == 2
    assert digraph.distance(g, 0, 0) == 0
    h = digraph.make(3, [(0, 1)])
    assert digraph.distance(h, 1, 0) == 1
    assert digraph.distance(h, 0, 2) is None


def test_orbital_graphs_match_frozen():
    groups = dict(corpus.standard_transitive_groups())
    for (name, u, v), arcs in frozen.ORBITAL_ARCS.items():
        got = digraph.orbital_graph(groups[name], u, v)
        assert got.edges == tuple(sorted(arcs)), (name, u, v)


def test_orbital_rejects_equal_pair():
    with pytest.raises(EqualPair):
        digraph.orbital_graph(perm.cyclic_group(5), 2, 2)


def test_builders():
    assert len(digraph.directed_cycle(5).edges) == 5
    assert len(digraph.undirected_cycle(5).edges) == 10
    assert len(digraph.complete_graph(4).edges) == 12
    assert digraph.single_edge().edges == ((0, 1), (1, 0))


def test_paley_seven():
    g = digraph.paley_tournament(7)
    assert g.edges == frozen.ORBITAL_ARCS[("frobenius-21", 0, 1)]
    assert not g.is_symmetric()


def test_paley_needs_three_mod_four():
    with pytest.raises(ValueError):
        digraph.paley_tournament(5)


arc_lists = st.integers(2, 6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda e: e[0] != e[1]
            ),
            max_size=12,
            unique=True,
        ),
    )
)


@given(arc_lists, st.data())
def test_distance_matches_bfs_oracle(spec, data):
    n, arcs = spec
    g = digraph.make(n, arcs)
    u = data.draw(st.integers(0, n - 1))
    v = data.draw(st.integers(0, n - 1))
    shadow = oracles.shadow_arcs(arcs)
    assert digraph.distance(g, u, v) == oracles.bfs_distance(n, shadow, u, v)


@given(arc_lists)
def test_components_partition_vertices(spec):
    n, arcs = spec
    comps = digraph.connected_components(digraph.make(n, arcs))
    seen = [v for c in comps for v in c]
    assert sorted(seen) == list(range(n))
