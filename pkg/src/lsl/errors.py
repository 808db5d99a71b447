"""Exception hierarchy shared by every module of the package."""


class LslError(Exception):
    """Base class for all errors raised by :mod:`lsl`."""


class DegeneratePlane(LslError):
    """A plane that must be non-degenerate turned out lightlike."""


class OutOfDomain(LslError):
    """A parameter point lies outside the chart domain."""


class NotSpacelike(LslError):
    """The tangent plane at a point is not positive definite."""


class NotNormal(LslError):
    """A vector expected to be normal to the surface is not."""


class NotBinormal(LslError):
    """A normal direction expected to be bi-normal is not."""


class InvalidProfile(LslError):
    """Profile functions violate the invariants of their family."""


class ParseError(LslError):
    """A profile expression or config value could not be parsed.

    ``position`` is the 0-based character offset of the offending token,
    or ``None`` when no single position applies.
    """

    def __init__(self, message, position=None):
        self.position = position
        self.reason = message
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ValidationError(LslError):
    """A configuration field holds an invalid value."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")
