"""Exception hierarchy.

The CLI maps each class to a fixed exit code, so callers can tell a bad
argument from a broken invariant without parsing messages.
"""


class HeckeError(Exception):
    """Base class for every error raised by this package."""


class ParseError(HeckeError, ValueError):
    """Malformed textual input (partition literal, Q literal, ...)."""


class PreconditionError(HeckeError, ValueError):
    """An operation was called outside its documented domain."""


class DivisibilityError(HeckeError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class InternalError(HeckeError, RuntimeError):
    """Two independent routes disagreed, or an internal invariant broke."""


class VerificationError(HeckeError, AssertionError):
    """A structural claim checked at run time did not hold."""
