"""Exception hierarchy.

The CLI maps these onto exit codes: ``InputError`` -> 2,
``ResourceCapError`` (and subclasses) -> 3.
"""


class PBWError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PBWError, ValueError):
    """Malformed or inconsistent user input (files, specs, dimensions)."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NoLeadingTermError(PBWError, ValueError):
    """Raised when a leading term is requested from the zero polynomial."""


class ResourceCapError(PBWError, RuntimeError):
    """A configured resource cap was exceeded; ``cap`` names it."""

    def __init__(self, cap, limit, message=None):
        self.cap = cap
        self.limit = limit
        super().__init__(message or f"resource cap '{cap}' exceeded (limit {limit})")


class StepCapExceeded(ResourceCapError):
    """Rewriting ran past its step cap (possible nontermination)."""

    def __init__(self, limit, message=None):
        super().__init__("steps", limit, message)


class NonterminationError(StepCapExceeded):
    """Rewriting re-entered a product it was still computing."""

    def __init__(self, key):
        super().__init__(None, f"rewriting loops: product {key} depends on itself")
        self.key = key


class ConsistencyError(PBWError, AssertionError):
    """Two independent computations of the same quantity disagree (a bug)."""
