"""Exception hierarchy shared by every module of the package."""


class AlpertError(Exception):
    """Base class for all errors raised by this package."""


class IncompatibleRadicands(AlpertError, ArithmeticError):
    """Sum of two surds that is not itself a single surd."""


class NotPositiveDefinite(AlpertError, ArithmeticError):
    pass


class SingularMatrix(AlpertError, ArithmeticError):
    pass


class DomainError(AlpertError, ValueError):
    pass


class DegreeTooHigh(AlpertError, ValueError):
    pass


class OddPowerEncountered(AlpertError, ArithmeticError):
    """(1/x) d/dx produced a negative power of x."""


class SingularMomentSystem(AlpertError, ArithmeticError):
    pass


class NotProportional(AlpertError, ArithmeticError):
    pass


class DenominatorPole(AlpertError, ZeroDivisionError):
    pass


class NoConvergenceWithinBudget(AlpertError, ArithmeticError):
    pass


class NonFactorableRow(AlpertError, ArithmeticError):
    pass


class ShapeMismatch(AlpertError, ValueError):
    pass
