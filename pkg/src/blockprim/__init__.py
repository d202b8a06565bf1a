"""Primitivity analysis for connectivity-one amalgams of a block digraph.

The package decides whether the infinite vertex-transitive digraph
obtained by gluing copies of a finite block along a tree of cut
vertices has a primitive automorphism group, and backs the verdict
with finite, replayable witnesses computed on balls of the amalgam.
"""

from ._kernel import ACTIVE as kernel_backend
from .amalgam import AmalgamBall, BallAutomorphism, build_ball, closed_form_ball_size
from .digraph import DiGraph, make, orbital_graph, undirected_shadow
from .errors import BlockPrimError
from .perm import GeneratedGroup, Permutation, group
from .primtest import BlockReport, classify_block
from .verdict import Decision, decide

__version__ = "0.1.0"

__all__ = [
    "AmalgamBall",
    "BallAutomorphism",
    "BlockPrimError",
    "BlockReport",
    "DiGraph",
    "Decision",
    "GeneratedGroup",
    "Permutation",
    "build_ball",
    "classify_block",
    "closed_form_ball_size",
    "decide",
    "group",
    "kernel_backend",
    "make",
    "orbital_graph",
    "undirected_shadow",
]
