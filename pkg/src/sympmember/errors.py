"""Exception hierarchy shared by all modules."""


class SympMemberError(Exception):
    """Base class for every error raised by this package."""


# input errors (CLI exit code 2)
class InputError(SympMemberError):
    pass


class NotPrime(InputError):
    pass


class EvenCharacteristic(InputError):
    pass


class ReducibleModulus(InputError):
    pass


class MixedFields(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NotSymplectic(InputError):
    pass


class DetNotOne(InputError):
    pass


class FormatError(InputError):
    pass


class ParseError(FormatError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadSlot(InputError):
    pass


class MixedArity(InputError):
    pass


class MixedGroups(InputError):
    pass


# arithmetic
class DivisionByZero(SympMemberError, ZeroDivisionError):
    pass


class DlogOfZero(SympMemberError, ValueError):
    pass


class Singular(SympMemberError, ArithmeticError):
    pass


# semantic failures (CLI exit code 1)
class NotInGroup(SympMemberError):
    pass


class StepFailed(NotInGroup):
    """A search exhausted its range; only happens for non-member input."""
