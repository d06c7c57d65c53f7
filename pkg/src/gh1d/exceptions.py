class GH1DError(Exception):
    """Base class for errors raised by gh1d."""


class EmptySet(GH1DError, ValueError):
    pass


class InvalidCoordinate(GH1DError, ValueError):
    pass


class CoverageViolation(GH1DError, ValueError):
    """A relation fails to cover both point sets, or indexes out of range."""


class InstanceTooLarge(GH1DError, ValueError):
    pass


class NotApplicable(GH1DError, ValueError):
    pass


class SeparationTooSmall(GH1DError, ValueError):
    pass


class BoundViolation(GH1DError, RuntimeError):
    """An alignment exceeded its guaranteed bound, even after the fallback."""


class InvariantViolation(GH1DError, RuntimeError):
    """A structural property that must hold for every correspondence failed."""
