"""Exception types shared across the package.

Everything derives from BlockPrimError so callers can catch analysis
failures in one place; the CLI maps these to exit code 1 and parse
problems to exit code 2.
"""


class BlockPrimError(Exception):
    """Base class for all analysis errors."""


class DegreeMismatch(BlockPrimError):
    """Permutations or groups of different degrees were combined."""


class PointOutOfRange(BlockPrimError):
    """A point index is outside 0..degree-1."""


class GroupTooLarge(BlockPrimError):
    """Group enumeration exceeded the element cap."""


class NotTransitive(BlockPrimError):
    """The operation needs a transitive group."""


class GraphTooLarge(BlockPrimError):
    """Exhaustive graph search refused an oversized instance."""


class NotConnected(BlockPrimError):
    """The operation needs a connected graph."""


class EqualPair(BlockPrimError):
    """An ordered pair of distinct vertices was required."""


class NodeNotInTree(BlockPrimError):
    """A tree query named a node the tree does not contain."""


class BlockHasCutVertex(BlockPrimError):
    """Amalgam blocks must be 2-connected pieces (no cut vertex of their own)."""


class BlockNotVertexTransitive(BlockPrimError):
    """Amalgam blocks must be vertex-transitive."""


class BadMultiplicity(BlockPrimError):
    """The number of block copies through each vertex must be at least 2."""


class BallTooLarge(BlockPrimError):
    """The requested ball would exceed the vertex budget."""


class RadiusMismatch(BlockPrimError):
    """Extension needs a ball one radius step larger over the same block."""


class InvalidAutomorphism(BlockPrimError):
    """A supplied map is not an automorphism of its ball."""


class VertexNotInterior(BlockPrimError):
    """The operation needs an interior vertex of the ball."""


class BlockNotInterior(BlockPrimError):
    """The operation needs a block whose vertices are all interior."""


class PreconditionNotImprimitive(BlockPrimError):
    """The witness needs an imprimitive block action to work with."""


class PreconditionFailed(BlockPrimError):
    """A hypothesis of the requested construction does not hold."""


class HypothesisFailed(BlockPrimError):
    """The stabilizer-agreement hypothesis does not hold for this input."""


class WordNotEvaluable(BlockPrimError):
    """A group word ran off the ball while being evaluated."""


class BallTooSmall(BlockPrimError):
    """No informative word could be evaluated; retry with a larger radius."""


class ParseError(BlockPrimError):
    """A block file failed to parse."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
