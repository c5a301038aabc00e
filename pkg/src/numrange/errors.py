"""Exception hierarchy shared by every module of the package."""


class NumrangeError(Exception):
    """Base class for errors raised by :mod:`numrange`."""


class InvalidMatrixError(NumrangeError, ValueError):
    """Input is not a finite square complex matrix (or has the wrong shape)."""


class DegenerateMatrixError(NumrangeError, ValueError):
    """Zero matrix or n = 1 where the theory assumes A != 0 and n >= 2."""


class NotHermitianError(NumrangeError, ValueError):
    """Matrix is not Hermitian within the requested tolerance."""


class NotOrthonormalError(NumrangeError, ValueError):
    """Columns handed to a completion routine are not orthonormal."""


class NotHalfRadialError(NumrangeError):
    """Raised when an operation requires a half-radial matrix and gets another.

    ``report`` carries whatever diagnostics were computed before refusing.
    """

    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class PreconditionError(NumrangeError, ValueError):
    """A mathematical precondition of an operation does not hold."""

    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class NumericalFailure(NumrangeError, ArithmeticError):
    """A residual that should vanish came out too large."""

    def __init__(self, msg, residual=None):
        super().__init__(msg)
        self.residual = residual
