"""Finite permutations and the groups they generate.

A permutation of degree n is stored as its image tuple: ``p.images[i]``
is the image of point i.  Products act on the right, ``x ^ (p*q) ==
(x ^ p) ^ q``, which is the convention every tree and ball argument in
this package relies on.

Groups are plain generator lists.  There is no factored representation;
``enumerate_elements`` expands the whole group (through the closure
kernel) and refuses past a cap, which is the honest trade for groups of
the sizes treated here.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from . import _kernel
from .errors import DegreeMismatch, GroupTooLarge, PointOutOfRange

DEFAULT_ELEMENT_CAP = 20000


@dataclass(frozen=True, order=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, point: int) -> int:
        if not 0 <= point < self.degree:
            raise PointOutOfRange(f"point {point} not in 0..{self.degree - 1}")
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")
        return Permutation(tuple(other.images[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def fixes(self, point: int) -> bool:
        return self.apply(point) == point


def identity(degree: int) -> Permutation:
    return Permutation(tuple(range(degree)))


def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Build a permutation from disjoint cycles, fixing unnamed points."""
    images = list(range(degree))
    for cycle in cycles:
        for i, x in enumerate(cycle):
            if not 0 <= x < degree:
                raise PointOutOfRange(f"point {x} not in 0..{degree - 1}")
            images[x] = cycle[(i + 1) % len(cycle)]
    return Permutation(tuple(images))


@dataclass(frozen=True)
class GeneratedGroup:
    """A permutation group given by its degree and a generator tuple."""

    degree: int
    generators: Tuple[Permutation, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.degree != self.degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {self.degree}"
                )

    @property
    def points(self) -> range:
        return range(self.degree)


def group(degree: int, generators: Iterable[Permutation]) -> GeneratedGroup:
    return GeneratedGroup(degree, tuple(generators))


def trivial_group(degree: int) -> GeneratedGroup:
    return GeneratedGroup(degree, ())


def _check_point(G: GeneratedGroup, point: int) -> None:
    if not 0 <= point < G.degree:
        raise PointOutOfRange(f"point {point} not in 0..{G.degree - 1}")


@lru_cache(maxsize=4096)
def _elements_cached(degree: int, gens: Tuple[Tuple[int, ...], ...], cap: int):
    return _kernel.closure(degree, gens, cap)


def enumerate_elements(
    G: GeneratedGroup, cap: int = DEFAULT_ELEMENT_CAP
) -> Tuple[Permutation, ...]:
    """Every element of G, sorted by image tuple.

    Raises GroupTooLarge instead of returning a truncated list when the
    order exceeds ``cap``.
    """
    raw = _elements_cached(G.degree, tuple(g.images for g in G.generators), cap)
    if raw is None:
        raise GroupTooLarge(f"group order exceeds cap {cap}")
    return tuple(Permutation(t) for t in raw)


def order(G: GeneratedGroup, cap: int = DEFAULT_ELEMENT_CAP) -> int:
    return len(enumerate_elements(G, cap))


def orbit(G: GeneratedGroup, point: int) -> Tuple[int, ...]:
    """Sorted orbit of ``point``; generators suffice, no enumeration."""
    _check_point(G, point)
    return tuple(_kernel.orbit(G.degree, [g.images for g in G.generators], point))


def pair_orbit(G: GeneratedGroup, u: int, v: int) -> Tuple[Tuple[int, int], ...]:
    """Sorted orbit of the ordered pair ``(u, v)`` under the diagonal action."""
    _check_point(G, u)
    _check_point(G, v)
    return tuple(_kernel.pair_orbit(G.degree, [g.images for g in G.generators], u, v))


def point_stabilizer(
    G: GeneratedGroup, point: int, cap: int = DEFAULT_ELEMENT_CAP
) -> GeneratedGroup:
    """The full stabilizer of a point, listed element by element."""
    _check_point(G, point)
    fixed = [g for g in enumerate_elements(G, cap) if g.images[point] == point]
    return GeneratedGroup(G.degree, tuple(fixed))


def setwise_stabilizer(
    G: GeneratedGroup, points: Iterable[int], cap: int = DEFAULT_ELEMENT_CAP
) -> GeneratedGroup:
    target = frozenset(points)
    for p in target:
        _check_point(G, p)
    kept = [
        g
        for g in enumerate_elements(G, cap)
        if frozenset(g.images[p] for p in target) == target
    ]
    return GeneratedGroup(G.degree, tuple(kept))


def pointwise_stabilizer(
    G: GeneratedGroup, points: Iterable[int], cap: int = DEFAULT_ELEMENT_CAP
) -> GeneratedGroup:
    pts = tuple(points)
    for p in pts:
        _check_point(G, p)
    kept = [
        g for g in enumerate_elements(G, cap) if all(g.images[p] == p for p in pts)
    ]
    return GeneratedGroup(G.degree, tuple(kept))


def is_transitive(G: GeneratedGroup) -> bool:
    if G.degree == 0:
        return False
    return len(orbit(G, 0)) == G.degree


def is_regular(G: GeneratedGroup, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    """Transitive with trivial point stabilizers, i.e. |G| == degree."""
    return is_transitive(G) and order(G, cap) == G.degree


def contains(G: GeneratedGroup, p: Permutation, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    if p.degree != G.degree:
        raise DegreeMismatch(f"degree {p.degree} vs {G.degree}")
    return p in enumerate_elements(G, cap)


# Common construction helpers, used by tests and the bundled corpus.

def cyclic_group(n: int) -> GeneratedGroup:
    return group(n, [from_cycles(n, [tuple(range(n))])])


def symmetric_group(n: int) -> GeneratedGroup:
    if n <= 1:
        return trivial_group(max(n, 0))
    gens = [from_cycles(n, [tuple(range(n))]), from_cycles(n, [(0, 1)])]
    return group(n, gens)


def dihedral_group(n: int) -> GeneratedGroup:
    """Symmetries of an n-gon acting on its vertices (order 2n)."""
    rot = from_cycles(n, [tuple(range(n))])
    ref = Permutation(tuple((n - i) % n for i in range(n)))
    return group(n, [rot, ref])
