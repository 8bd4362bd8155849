"""Exception hierarchy shared by every module."""


class WchowError(Exception):
    """Base class for all errors raised by the package."""


class RingMismatchError(WchowError):
    pass


class NotDivisibleError(WchowError):
    pass


class NotSymmetricError(WchowError):
    pass


class NotAUnitError(WchowError):
    pass


class IntegralityError(WchowError):
    """A quantity that must be integral turned out to have a denominator."""


class ParseError(WchowError):
    pass
