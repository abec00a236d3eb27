"""Exception types shared across the package.

Every error carries a stable machine-readable ``code`` string so that the
command-line layer (and any other driver) can report failures uniformly.
"""

from __future__ import annotations


class MultidealError(Exception):
    """Base class for all package-specific errors."""

    code = "error"


class ParseError(MultidealError, ValueError):
    """Raised for malformed polynomial expressions.

    ``position`` is the 0-based offset into the input text at which the
    problem was detected.
    """

    code = "parse-error"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvalidInputError(MultidealError, ValueError):
    """A precondition on the mathematical input is violated.

    Examples: the zero polynomial where a nonzero one is required, the zero
    ideal, a non-positive scaling coefficient, a dimension mismatch.
    """

    code = "invalid-input"


class FacetLimitError(InvalidInputError):
    """The polyhedron has more facets than the configured enumeration cap."""

    code = "limit-exceeded"


class DegenerateInputError(MultidealError):
    """A multiplier-ideal formula was requested for a degenerate polynomial.

    ``witnesses`` holds the offending face reports (face data plus the face
    polynomial), enough to see why the required nondegeneracy fails.
    """

    code = "degenerate-input"

    def __init__(self, message: str, witnesses=()):
        super().__init__(message)
        self.witnesses = tuple(witnesses)


class InconclusiveError(MultidealError):
    """A resource-capped computation ran out of budget.

    Raised instead of ever returning a possibly-wrong answer; callers must
    surface it, not coerce it to a verdict.
    """

    code = "inconclusive"
