"""Exception hierarchy.

The CLI maps these onto exit codes: ``InputError`` -> 1,
``ResourceBoundError`` -> 2.
"""


class OddautError(Exception):
    pass


class InputError(OddautError, ValueError):
    """Malformed or out-of-contract input."""


class ResourceBoundError(OddautError):
    """A configured size bound would be exceeded."""


class EnumerationBoundError(ResourceBoundError):
    pass


class VertexBoundError(ResourceBoundError):
    pass


class GraphFormatError(InputError):
    pass


class NotSymmetricError(InputError):
    """Graph is not cubic, connected and arc-transitive."""


class NotArcTransitiveError(NotSymmetricError):
    """Vertex-transitive but not arc-transitive (two edge orbits)."""


class ClassificationError(OddautError):
    """Computed invariants contradict the classification of cubic symmetric graphs."""
