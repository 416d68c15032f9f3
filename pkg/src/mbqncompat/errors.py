"""Exception hierarchy shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for invalid graph queries and rewrites."""


class UnknownVertexError(GraphError, KeyError):
    def __init__(self, v: object) -> None:
        super().__init__(f"unknown vertex {v!r}")
        self.vertex = v

    def __str__(self) -> str:
        return self.args[0]


class SelfLoopError(GraphError):
    pass


class MissingEdgeError(GraphError):
    pass


class EmptySetError(GraphError):
    pass


class AlreadyConsumedError(GraphError):
    """Raised when a measurement targets a qubit that was already measured."""

    def __init__(self, v: int) -> None:
        super().__init__(f"vertex {v} is already consumed")
        self.vertex = v


class NotAPathError(GraphError):
    pass


class SizeLimitError(ValueError):
    pass


class TaskError(ValueError):
    pass


class LiteralParseError(ValueError):
    """Parse failure in a graph, task, or topology literal.

    ``line`` and ``column`` are 1-based.
    """

    def __init__(self, message: str, line: int = 1, column: int = 1) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
