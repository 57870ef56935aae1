"""Exception hierarchy shared by every module."""


class QSFError(Exception):
    """Base class for all errors raised by qsf."""


class DomainError(QSFError, ValueError):
    """An argument or parameter lies outside the supported real domain."""


class PoleError(DomainError):
    """Evaluation requested at a pole of the function."""


class NonRealRootError(DomainError):
    """A quartic root needed by a solution formula is not real."""


class ComplexXiError(DomainError):
    """The auxiliary quantity xi of the Jacobi-type quartic is not real."""


class NonConvergence(QSFError, ArithmeticError):
    """A series or iteration did not reach its tolerance within the term budget."""


class DivergenceError(QSFError, ArithmeticError):
    """The requested value is genuinely infinite."""


class NearSingularParameter(QSFError):
    """A parameter sits on an apparent singularity of a solution formula."""


class QuadratureError(QSFError, ArithmeticError):
    """A quadrature rule met a non-finite integrand sample."""
