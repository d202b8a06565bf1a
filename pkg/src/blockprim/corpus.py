"""Named groups and block graphs for tests, benchmarks, and the selftest.

Degrees stay at 8 or below; the point of the collection is coverage of
behaviors (primitive, imprimitive, regular, intransitive-free), not
size.  Everything is deterministic, so expected values can be frozen
against these by name.
"""

from typing import Tuple

from . import digraph, perm
from .digraph import DiGraph
from .perm import GeneratedGroup, Permutation, from_cycles, group


def klein_four() -> GeneratedGroup:
    return group(
        4,
        [from_cycles(4, [(0, 1), (2, 3)]), from_cycles(4, [(0, 2), (1, 3)])],
    )


def alternating_four() -> GeneratedGroup:
    return group(4, [from_cycles(4, [(0, 1, 2)]), from_cycles(4, [(1, 2, 3)])])


def frobenius_21() -> GeneratedGroup:
    """Order 21 on 7 points: translations and doubling mod 7."""
    shift = from_cycles(7, [tuple(range(7))])
    double = Permutation(tuple((2 * x) % 7 for x in range(7)))
    return group(7, [shift, double])


def pair_wreath(pairs: int) -> GeneratedGroup:
    """Flips of glued pairs plus a rotation of the pairs (imprimitive)."""
    n = 2 * pairs
    rotate = Permutation(tuple((i + 2) % n for i in range(n)))
    flip = from_cycles(n, [(0, 1)])
    return group(n, [rotate, flip])


def standard_transitive_groups() -> Tuple[Tuple[str, GeneratedGroup], ...]:
    return (
        ("cyclic-3", perm.cyclic_group(3)),
        ("symmetric-3", perm.symmetric_group(3)),
        ("cyclic-4", perm.cyclic_group(4)),
        ("klein-4", klein_four()),
        ("dihedral-4", perm.dihedral_group(4)),
        ("alternating-4", alternating_four()),
        ("symmetric-4", perm.symmetric_group(4)),
        ("cyclic-5", perm.cyclic_group(5)),
        ("dihedral-5", perm.dihedral_group(5)),
        ("cyclic-6", perm.cyclic_group(6)),
        ("dihedral-6", perm.dihedral_group(6)),
        ("cyclic-7", perm.cyclic_group(7)),
        ("frobenius-21", frobenius_21()),
        ("cyclic-8", perm.cyclic_group(8)),
        ("pair-wreath-8", pair_wreath(4)),
    )


def standard_blocks() -> Tuple[Tuple[str, DiGraph], ...]:
    return (
        ("triangle", digraph.complete_graph(3)),
        ("square", digraph.undirected_cycle(4)),
        ("pentagon", digraph.undirected_cycle(5)),
        ("hexagon", digraph.undirected_cycle(6)),
        ("tetrahedron", digraph.complete_graph(4)),
        ("directed-triangle", digraph.directed_cycle(3)),
        ("directed-pentagon", digraph.directed_cycle(5)),
        ("paley-7", digraph.paley_tournament(7)),
        ("single-edge", digraph.single_edge()),
    )


def block_by_name(name: str) -> DiGraph:
    for key, g in standard_blocks():
        if key == name:
            return g
    raise KeyError(name)
