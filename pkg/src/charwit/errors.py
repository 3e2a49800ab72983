"""Exception types shared across the package.

Everything raised deliberately by the library derives from CharwitError,
so callers can distinguish our complaints from genuine bugs.
"""


class CharwitError(Exception):
    pass


class DomainError(CharwitError, ValueError):
    """An argument lies outside the mathematical domain of an operation.

    Examples: a modulus that is not an odd prime, a character index out of
    range, a denominator that vanishes mod p, a factorial that is not
    invertible.
    """


class InvariantViolation(CharwitError, ValueError):
    """Structured data failed one of its declared invariants."""


class InternalConsistencyError(CharwitError, RuntimeError):
    """A condition that should be impossible by construction was observed.

    Raised, for instance, when a polynomial that is provably nonzero
    specializes to zero.  Indicates a bug, not bad input.
    """


class ParseError(CharwitError, ValueError):
    """Malformed textual input.  Carries the offset of the offending token."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = "%s (at offset %d)" % (message, offset)
        super().__init__(message)
        self.offset = offset
