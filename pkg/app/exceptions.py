class LpaError(Exception):
    """Base class for every error raised by lpakit."""


class GraphFormatError(LpaError, ValueError):
    """A graph document or graph value is malformed."""


class InvalidInputError(LpaError, ValueError):
    """An argument is outside the domain of the operation."""


class UnsupportedGraphError(LpaError):
    """The graph lies outside the class an operation is defined for."""
