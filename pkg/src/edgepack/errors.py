"""Exception hierarchy. Each family maps to one CLI exit code."""


class EdgePackError(Exception):
    exit_code = 1


class FormatError(EdgePackError, ValueError):
    """Malformed graph or strings file."""

    exit_code = 2


class InvalidInputError(EdgePackError, ValueError):
    """Well-formed input that violates an operation's precondition."""

    exit_code = 3


class IsolatedVertexError(InvalidInputError):
    pass


class WidthMismatchError(InvalidInputError):
    pass


class NotRegularError(InvalidInputError):
    pass


class MembershipError(InvalidInputError):
    pass


class NotATreeError(InvalidInputError):
    pass


class NotDominatingError(InvalidInputError):
    pass


class NotPartialBoundedError(InvalidInputError):
    pass


class CapExceededError(EdgePackError, RuntimeError):
    """An exhaustive search or closure would exceed its configured size limit."""

    exit_code = 4
