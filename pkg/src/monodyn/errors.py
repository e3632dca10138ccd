"""Exception types shared across the package."""


class InputRangeError(ValueError):
    """An argument is outside the supported domain or range."""


class ResourceCapError(RuntimeError):
    """A request exceeds the desk-scale resource caps."""


class InvariantViolation(RuntimeError):
    """An internal cross-check that should hold mathematically has failed."""
