"""Real special functions used by the solution formulas, each with an error estimate."""

from .bessel import bessel, bessel_dx
from .confluent import kummer_m, kummer_u, whittaker, whittaker_dx
from .core import DEFAULT_CONFIG, EvalResult, KernelConfig, gamma_fn, rgamma
from .hypergeometric import gauss_2f1, jp, jp_dx, rf21
from .legendre import legendre, legendre_dx

__all__ = [
    "DEFAULT_CONFIG",
    "EvalResult",
    "KernelConfig",
    "bessel",
    "bessel_dx",
    "gamma_fn",
    "gauss_2f1",
    "jp",
    "jp_dx",
    "kummer_m",
    "kummer_u",
    "legendre",
    "legendre_dx",
    "rf21",
    "rgamma",
    "whittaker",
    "whittaker_dx",
]
