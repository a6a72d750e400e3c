"""Exception types shared by the library and the command line."""


class DomainError(ValueError):
    """A well-formed input violated a mathematical precondition."""


class DeterminantError(DomainError):
    pass


class MembershipError(DomainError):
    """Raised when a matrix is not in the derived subgroup."""


class ReductionError(RuntimeError):
    """Fundamental-domain reduction ran out of iterations."""


class ParseError(ValueError):
    """Malformed textual or JSON input.

    ``token`` and ``position`` (0-based token index, or character offset for
    matrices) locate the offending piece of input when known.
    """

    def __init__(self, message, token=None, position=None):
        self.token = token
        self.position = position
        if token is not None:
            message = f"{message} (token {token!r} at position {position})"
        super().__init__(message)
