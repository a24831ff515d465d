"""Exception hierarchy shared by the algebra library, the CLI and the API."""


class MQSymError(ValueError):
    """Base class for every domain error raised by the library."""


class DimensionMismatchError(MQSymError):
    """Operands disagree on alphabet size, exponent monoid or truncation level."""


class InvalidExponentError(MQSymError):
    """An exponent is not an element of the declared monoid."""


class InvalidCompositionError(MQSymError):
    """A (multi-)composition is malformed or unsupported for the operation."""


class InvalidRefinementError(MQSymError):
    """A descent set or a block composition does not fit its word."""


class TruncationError(MQSymError):
    """A truncation level is too small for the requested expansion."""


class ElementParseError(MQSymError):
    """Element text does not match the grammar; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int = 0, text: str = ""):
        super().__init__(f"{message} (at char {position})")
        self.position = position
        self.text = text


class ConfigError(MQSymError):
    """An environment setting has an invalid value."""
