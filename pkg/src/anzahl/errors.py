"""Exception hierarchy shared by every module of the package."""


class AnzahlError(Exception):
    """Base class for all errors raised by :mod:`anzahl`."""


class NotAPrimePower(AnzahlError, ValueError):
    pass


class DivisionByZero(AnzahlError, ZeroDivisionError):
    pass


class MixedFields(AnzahlError, TypeError):
    pass


class OrderNotSquare(AnzahlError, ValueError):
    pass


class DimensionMismatch(AnzahlError, ValueError):
    pass


class OddSymplecticDimension(AnzahlError, ValueError):
    pass


class DegenerateForm(AnzahlError, ValueError):
    pass


class InvalidRange(AnzahlError, ValueError):
    pass


class NonExactDivision(AnzahlError, ArithmeticError):
    """A division that must be exact left a remainder (internal consistency failure)."""


class IntegralityViolation(AnzahlError, ArithmeticError):
    """A count evaluated to a non-integer (internal consistency failure)."""


class ParamOutOfRange(AnzahlError, ValueError):
    pass


class UndefinedParity(AnzahlError, ValueError):
    """Symplectic beta with i and j of different parity; the count is undefined."""


class InstanceTooLarge(AnzahlError, RuntimeError):
    """The estimated enumeration cost exceeds the configured budget."""


class NoSuchSubspace(AnzahlError, LookupError):
    pass
