"""Exception types shared across the package."""


class EdgeAlgebraError(Exception):
    """Base class for all package-specific errors."""


class ParseError(EdgeAlgebraError):
    """Malformed edge-list input. Carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class DomainError(EdgeAlgebraError):
    """An operation was called outside its mathematical domain,
    e.g. a bipartite-only check on a non-bipartite graph."""


class ResourceCapError(EdgeAlgebraError):
    """A configurable enumeration or degree cap was exceeded.

    The message names the cap and the flag/parameter that raises it."""
