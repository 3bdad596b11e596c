"""Exception types raised by extsys."""


class ExtsysError(Exception):
    """Base class for all library errors."""


class InputError(ExtsysError, ValueError):
    """The caller supplied something malformed (CLI exit code 2)."""


class OutOfRange(InputError):
    pass


class InvalidLatticePoint(InputError):
    pass


class NotInRootLattice(ExtsysError):
    pass


class MoveNotApplicable(ExtsysError):
    pass


class ShapeMismatch(InputError):
    pass


class NotPrimePosition(InputError):
    pass


class NotASnake(InputError):
    def __init__(self, msg, index=None):
        super().__init__(msg)
        self.index = index


class NotPrime(InputError):
    pass


class SnakeTooShort(InputError):
    pass


class NotApplicable(InputError):
    pass


class BadParams(InputError):
    pass


class NotDominant(InputError):
    pass


class BadR(InputError):
    pass


class PreconditionFailed(InputError):
    pass


class AssignmentFailed(ExtsysError):
    def __init__(self, msg, data=None):
        super().__init__(msg)
        self.data = data


class FamilyMismatch(ExtsysError):
    def __init__(self, msg, printed=None, derived=None):
        super().__init__(msg)
        self.printed = printed
        self.derived = derived


class DivisionNotExact(ExtsysError):
    pass


class NotACharacter(ExtsysError):
    pass


class TooLarge(ExtsysError):
    """An enumeration would exceed the configured cap (CLI exit code 3)."""

    def __init__(self, msg, bound=None):
        super().__init__(msg)
        self.bound = bound
