"""Exception types shared across the package."""


class CapacityError(ValueError):
    """A requested size exceeds the supported capacity."""


class FormatError(ValueError):
    """A binary input does not conform to its declared format."""
