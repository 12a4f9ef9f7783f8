"""Exception types raised across the package.

Grouped by the layer that raises them so callers can catch a family
(GraphError, GeometryError, ...) or a precise condition (SelfLoop, OddL).
"""

from __future__ import annotations


class Arc3dError(Exception):
    """Base class for every error raised by this package."""


# ---------------------------------------------------------------------------
# graph construction / drawings / rotations
# ---------------------------------------------------------------------------

class GraphError(Arc3dError):
    pass


class DuplicateVertex(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class DrawingError(Arc3dError):
    pass


class InvalidDrawing(DrawingError):
    pass


class CoincidentDirections(DrawingError):
    """Two incident edges leave a vertex in exactly the same direction."""


class NoAngles(DrawingError):
    """No vertex has two incident edges, so no angle exists to measure."""


class ZeroResolutionDrawing(DrawingError):
    pass


# ---------------------------------------------------------------------------
# colorings
# ---------------------------------------------------------------------------

class ColoringError(Arc3dError):
    pass


class OddL(ColoringError):
    """Window length L must be a positive even integer."""


class MissingRotation(ColoringError):
    pass


class TooManyColors(ColoringError):
    pass


# ---------------------------------------------------------------------------
# geometry
# ---------------------------------------------------------------------------

class GeometryError(Arc3dError):
    pass


class ZeroVector(GeometryError):
    pass


class DegenerateChord(GeometryError):
    pass


class DomainError(GeometryError):
    """An argument lies outside the documented domain of an operation."""


class PerturbationFailed(GeometryError):
    def __init__(self, message, flagged=()):
        super().__init__(message)
        self.flagged = tuple(flagged)


# ---------------------------------------------------------------------------
# certification
# ---------------------------------------------------------------------------

class BoundViolation(Arc3dError):
    """A measured angle fell below its certified lower bound.

    Carries the failing checks so callers can report the counterexample.
    """

    def __init__(self, message, failures=()):
        super().__init__(message)
        self.failures = tuple(failures)


# ---------------------------------------------------------------------------
# file formats / CLI
# ---------------------------------------------------------------------------

class IOFormatError(Arc3dError):
    pass


class ParseError(IOFormatError):
    pass


class ValidationError(IOFormatError):
    pass


class BadParams(IOFormatError):
    pass
