"""Explicit special-function solutions of fourth-order Bessel-, Laguerre-,
Legendre- and Jacobi-type differential equations, plus the numerical
machinery that checks them.

Submodules
----------
sfkernel       real special functions with error estimates
bessel_type    J, Y, I, K solutions on x > 0
laguerre_type  L_1..L_4 built on Kummer M and U
legendre_type  Le_1..Le_4 built on Legendre P and Q of real degree
jacobi_type    S1, S2, J_1..J_4, eigenvalues, quartic roots, orthogonality
verifier       operator residuals, Wronskians, batch reports
oracle         golden-value table
suite          the acceptance battery
cli            the ``qsf`` command
"""

from . import bessel_type, jacobi_type, laguerre_type, legendre_type, sfkernel, verifier
from .errors import (ComplexXiError, DivergenceError, DomainError, NearSingularParameter, NonConvergence,
                     NonRealRootError, PoleError, QSFError, QuadratureError)
from .sfkernel import EvalResult, KernelConfig

__version__ = "0.1.0"

__all__ = [
    "ComplexXiError",
    "DivergenceError",
    "DomainError",
    "EvalResult",
    "KernelConfig",
    "NearSingularParameter",
    "NonConvergence",
    "NonRealRootError",
    "PoleError",
    "QSFError",
    "QuadratureError",
    "bessel_type",
    "jacobi_type",
    "laguerre_type",
    "legendre_type",
    "sfkernel",
    "verifier",
]
