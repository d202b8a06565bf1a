"""Pure-Python closure kernels.

These are the reference implementations of the three breadth-first loops
that dominate runtime: closing a generator set into a full element list,
tracing the orbit of a point, and tracing the orbit of an ordered pair.
The compiled backend in ``_ckernel`` must return identical values; the
dispatcher in ``__init__`` picks one at import time.

Permutations enter and leave as plain image tuples: ``p[i]`` is the image
of ``i``, and products act on the right, so ``(p * q)[i] == q[p[i]]``.
"""

from typing import Optional, Sequence


def closure(degree: int, generators: Sequence[Sequence[int]], cap: int) -> Optional[list]:
    """All products of the generators, as sorted image tuples.

    Returns None when the generated group has more than ``cap`` elements.
    The identity is always included, so an empty generator list yields the
    trivial group.
    """
    identity = tuple(range(degree))
    gens = [tuple(g) for g in generators]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(g[x] for x in a)
                if c not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(seen)


def orbit(degree: int, generators: Sequence[Sequence[int]], point: int) -> tuple:
    """Sorted orbit of ``point`` under the generated group."""
    reached = [False] * degree
    reached[point] = True
    frontier = [point]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = g[x]
                if not reached[y]:
                    reached[y] = True
                    nxt.append(y)
        frontier = nxt
    return tuple(i for i in range(degree) if reached[i])


def pair_orbit(degree: int, generators: Sequence[Sequence[int]], u: int, v: int) -> list:
    """Sorted orbit of the ordered pair ``(u, v)`` under the diagonal action."""
    n = degree
    reached = bytearray(n * n)
    reached[u * n + v] = 1
    frontier = [(u, v)]
    out = [(u, v)]
    while frontier:
        nxt = []
        for a, b in frontier:
            for g in generators:
                c, d = g[a], g[b]
                code = c * n + d
                if not reached[code]:
                    reached[code] = 1
                    nxt.append((c, d))
                    out.append((c, d))
        frontier = nxt
    out.sort()
    return out
