"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input."""


class EmptyClassError(InputError):
    """An analysis operation was handed a set system with no concepts."""


class InconsistentCondition(InputError):
    """A partial labeling has no extension in the class."""


class CapExceeded(InputError):
    """An exhaustive computation was asked to exceed its hard size cap."""
