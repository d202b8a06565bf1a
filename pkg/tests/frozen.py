"""Expected values computed once with oracles.py and hard-coded here.

Regenerate by hand if the corpus changes; the tests compare the library
against these literals, not against the oracles at run time.
"""

# (order, primitive) per corpus group
GROUP_FACTS = {
    "cyclic-3": (3, True),
    "symmetric-3": (6, True),
    "cyclic-4": (4, False),
    "klein-4": (4, False),
    "dihedral-4": (8, False),
    "alternating-4": (12, True),
    "symmetric-4": (24, True),
    "cyclic-5": (5, True),
    "dihedral-5": (10, True),
    "cyclic-6": (6, False),
    "dihedral-6": (12, False),
    "cyclic-7": (7, True),
    "frobenius-21": (21, True),
    "cyclic-8": (8, False),
    "pair-wreath-8": (64, False),
}

# (aut order, vertex-transitive, aut primitive, aut regular) per corpus block
BLOCK_FACTS = {
    "triangle": (6, True, True, False),
    "square": (8, True, False, False),
    "pentagon": (10, True, True, False),
    "hexagon": (12, True, False, False),
    "tetrahedron": (24, True, True, False),
    "directed-triangle": (3, True, True, True),
    "directed-pentagon": (5, True, True, True),
    "paley-7": (21, True, True, False),
    "single-edge": (2, True, True, True),
}

# finest invariant partition fusing the given pair
CONGRUENCE_CLOSURES = {
    ("cyclic-4", 0, 2): ((0, 2), (1, 3)),
    ("cyclic-4", 0, 1): ((0, 1, 2, 3),),
    ("cyclic-6", 0, 2): ((0, 2, 4), (1, 3, 5)),
    ("cyclic-6", 0, 3): ((0, 3), (1, 4), (2, 5)),
    ("dihedral-4", 0, 2): ((0, 2), (1, 3)),
    ("dihedral-6", 0, 3): ((0, 3), (1, 4), (2, 5)),
    ("klein-4", 0, 1): ((0, 1), (2, 3)),
    ("pair-wreath-8", 0, 1): ((0, 1), (2, 3), (4, 5), (6, 7)),
    ("pair-wreath-8", 0, 2): ((0, 1, 2, 3, 4, 5, 6, 7),),
}

# name -> (vertex count, undirected edge list, cut vertices, block vertex sets)
DECOMP_FIXTURES = {
    "bowtie": (
        5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)],
        (2,), ((0, 1, 2), (2, 3, 4)),
    ),
    "path-4": (
        4, [(0, 1), (1, 2), (2, 3)],
        (1, 2), ((0, 1), (1, 2), (2, 3)),
    ),
    "two-triangles-bridge": (
        7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)],
        (2, 3, 4), ((0, 1, 2), (2, 3), (3, 4), (4, 5, 6)),
    ),
    "star-4": (
        5, [(0, 1), (0, 2), (0, 3), (0, 4)],
        (0,), ((0, 1), (0, 2), (0, 3), (0, 4)),
    ),
    "theta": (
        6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)],
        (), ((0, 1, 2, 3, 4, 5),),
    ),
}

# orbital arcs of (u, v) under the named corpus group
ORBITAL_ARCS = {
    ("cyclic-5", 0, 1): ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0)),
    ("cyclic-5", 0, 2): ((0, 2), (1, 3), (2, 4), (3, 0), (4, 1)),
    ("dihedral-4", 0, 1): (
        (0, 1), (0, 3), (1, 0), (1, 2), (2, 1), (2, 3), (3, 0), (3, 2),
    ),
    ("dihedral-4", 0, 2): ((0, 2), (1, 3), (2, 0), (3, 1)),
    # the arcs of paley-7, recovered as an orbital of its automorphism group
    ("frobenius-21", 0, 1): (
        (0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (1, 5), (2, 3), (2, 4),
        (2, 6), (3, 0), (3, 4), (3, 5), (4, 1), (4, 5), (4, 6), (5, 0),
        (5, 2), (5, 6), (6, 0), (6, 1), (6, 3),
    ),
}
