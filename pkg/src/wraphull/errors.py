"""Exception types shared across the package.

Two broad families: ValidationError for bad user input (malformed files,
duplicate points, unusable grids) and GeometryError for failures raised
while constructing or interrogating hulls. The CLI maps the first family
to exit code 2 and the second to exit code 3.
"""


class WrapHullError(Exception):
    pass


class ValidationError(WrapHullError):
    pass


class DuplicatePoints(ValidationError):
    pass


class BadGrid(ValidationError):
    pass


class GeometryError(WrapHullError):
    pass


class EmptySample(GeometryError):
    pass


class BadRadius(GeometryError):
    pass


class DegenerateHull(GeometryError):
    pass


class InconsistentHull(GeometryError):
    pass


class ZeroMeasure(GeometryError):
    pass


class UnboundedHull(GeometryError):
    """Raised when fixed-direction normals leave the intersection unbounded.

    The window-clipped polygon is still computed and attached as .hull so
    callers that can live with the clipped result may recover it.
    """

    def __init__(self, message, hull=None):
        super().__init__(message)
        self.hull = hull


class EmptyAggregate(WrapHullError):
    pass


class NotFittedError(WrapHullError):
    """Estimator method called before fit."""

