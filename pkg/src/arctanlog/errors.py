"""Exception hierarchy shared by every module of the package."""


class ArctanLogError(Exception):
    """Base class for all package errors."""


class PoleError(ArctanLogError, ValueError):
    """A special function was evaluated at one of its poles."""


class NonConvergence(ArctanLogError, ArithmeticError):
    """An iterative evaluation hit its cap before meeting the target accuracy."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NotCovered(ArctanLogError, LookupError):
    """No closed-form family covers the requested integral."""


class OutOfRegion(ArctanLogError, ValueError):
    """Parameters fall outside the validity region of a closed-form engine."""


class UnsupportedParameter(ArctanLogError, ValueError):
    """A catalog entry was requested outside its documented parameter range."""


class SingularTerm(ArctanLogError, ZeroDivisionError):
    """A series term has a vanishing denominator inside the summation range."""


class UnknownSuite(ArctanLogError, LookupError):
    """A verification selector matched no registered task."""
