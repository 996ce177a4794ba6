"""Exception types raised by the library.

Every rejection carries the measured quantity that triggered it, so callers
can tell a borderline verdict from a gross violation.
"""


class WilliamsonError(Exception):
    """Base class for all library errors."""


class NumericalError(WilliamsonError, ArithmeticError):
    """A computed residual exceeded its bound.

    Attributes
    ----------
    residual : float
        The measured residual.
    bound : float or None
        The bound it was compared against.
    """

    def __init__(self, message, residual=float("nan"), bound=None):
        super().__init__(message)
        self.residual = residual
        self.bound = bound


class NotSymmetricError(WilliamsonError, ValueError):
    def __init__(self, message, asymmetry=float("nan")):
        super().__init__(message)
        self.asymmetry = asymmetry


class NotPositiveSemidefiniteError(WilliamsonError, ValueError):
    def __init__(self, message, eigenvalue=float("nan")):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class NotPositiveDefiniteError(WilliamsonError, ValueError):
    def __init__(self, message, eigenvalue=float("nan")):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class NotSymplecticError(WilliamsonError, ValueError):
    """A subspace or frame failed a symplecticity test."""

    def __init__(self, message, residual=float("nan")):
        super().__init__(message)
        self.residual = residual


class MembershipError(WilliamsonError, ValueError):
    """A matrix is outside the class an operation requires.

    Attributes
    ----------
    report : MembershipReport
        Full per-condition report; ``report.failed()`` lists the violations.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class MatrixFormatError(WilliamsonError, ValueError):
    """Malformed matrix file. ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class NotSkewSymmetricError(WilliamsonError, ValueError):
    def __init__(self, message, asymmetry=float("nan")):
        super().__init__(message)
        self.asymmetry = asymmetry
