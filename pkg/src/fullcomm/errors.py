"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """An argument is outside the range an operation accepts."""


class ParseError(ValueError):
    """A word could not be read as a canonical reduced form."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(ValueError):
    """A word is not in the domain of a map (wrong collection, non-homogeneous component, ...)."""


class ResourceLimitError(RuntimeError):
    """A configurable size cap was exceeded."""
