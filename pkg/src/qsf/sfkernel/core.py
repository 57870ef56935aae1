"""Shared plumbing for the special-function kernel.

Holds the result/config records, Gamma-family helpers that are regular at
the poles (reciprocal Gamma, psi/Gamma), and a hypergeometric series summer
that escalates to extended precision when the float sum cancels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext

from scipy import special as _sp

from ..errors import DomainError, NonConvergence, PoleError

EPS = 2.220446049250313e-16

# Float sums whose terms exceed the result by more than this are recomputed
# in decimal arithmetic.
CANCELLATION_LIMIT = 1e2
_MAX_DECIMAL_DIGITS = 400


@dataclass(frozen=True)
class EvalResult:
    """A real function value together with an absolute error estimate."""

    value: float
    abs_err: float = 0.0

    def __post_init__(self):
        if math.isnan(self.value):
            raise NonConvergence("evaluation produced NaN")
        if math.isfinite(self.value):
            if not (math.isfinite(self.abs_err) and self.abs_err >= 0.0):
                raise ValueError(f"bad error estimate {self.abs_err!r}")

    def __float__(self):
        return self.value

    @property
    def rel_err(self) -> float:
        return self.abs_err / abs(self.value) if self.value else math.inf


@dataclass(frozen=True)
class KernelConfig:
    """Tolerances shared by every kernel routine.

    ``quad_nodes`` bounds the number of subintervals used by the adaptive
    quadrature that backs the integral-representation fallbacks.
    """

    series_tol: float = 1e-15
    max_terms: int = 10000
    quad_nodes: int = 64

    def __post_init__(self):
        if not 0.0 < self.series_tol < 1e-6:
            raise ValueError("series_tol must lie in (0, 1e-6)")
        if self.max_terms < 100:
            raise ValueError("max_terms must be at least 100")
        if self.quad_nodes < 1:
            raise ValueError("quad_nodes must be positive")


DEFAULT_CONFIG = KernelConfig()


def is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def sinpi(x: float) -> float:
    n = round(x)
    s = math.sin(math.pi * (x - n))
    return -s if n % 2 else s


def cospi(x: float) -> float:
    n = round(x)
    c = math.cos(math.pi * (x - n))
    return -c if n % 2 else c


def gamma_fn(x: float) -> EvalResult:
    """Gamma function of a real argument.

    Raises
    ------
    PoleError
        At the non-positive integers.
    OverflowError
        When the value is not representable.
    """
    if not math.isfinite(x):
        raise DomainError(f"gamma argument must be finite, got {x!r}")
    if is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x!r}")
    try:
        v = math.gamma(x)
    except OverflowError:
        raise OverflowError(f"Gamma({x!r}) overflows") from None
    if math.isinf(v):
        raise OverflowError(f"Gamma({x!r}) overflows")
    return EvalResult(v, 8 * EPS * abs(v) * (1.0 + abs(math.log(abs(x)))))


def rgamma(x: float) -> float:
    """1/Gamma(x), exactly zero at the poles of Gamma."""
    if is_nonpositive_integer(x):
        return 0.0
    if x > 170.0:
        return math.exp(-math.lgamma(x))
    if x < 0.5:
        # reflection keeps large negative arguments finite
        return sinpi(x) * _gamma_or_huge(1.0 - x) / math.pi
    return 1.0 / math.gamma(x)


def _gamma_or_huge(x: float) -> float:
    try:
        return math.gamma(x)
    except OverflowError:
        return math.inf


def gamma_sign(x: float) -> int:
    if x > 0:
        return 1
    return -1 if math.ceil(-x) % 2 else 1


def gamma_ratio(x: float, y: float) -> float:
    """Gamma(x)/Gamma(y), using the pole limit when both sit on poles."""
    px, py = is_nonpositive_integer(x), is_nonpositive_integer(y)
    if px and py:
        q, p = int(-x), int(-y)
        return (-1) ** (p - q) * math.exp(math.lgamma(p + 1) - math.lgamma(q + 1))
    if px:
        raise PoleError(f"Gamma({x!r}) pole is not cancelled by Gamma({y!r})")
    if py:
        return 0.0
    return gamma_sign(x) * gamma_sign(y) * math.exp(math.lgamma(x) - math.lgamma(y))


def digamma(x: float) -> float:
    if is_nonpositive_integer(x):
        raise PoleError(f"digamma has a pole at {x!r}")
    return float(_sp.digamma(x))


def rg_psi(a: float, j: int) -> float:
    """psi(a + j) / Gamma(a), finite as a approaches a non-positive integer.

    Uses psi(x) = psi(1 - x) - pi cot(pi x) together with the reflection of
    1/Gamma, so the pole of psi cancels analytically.
    """
    if a + j > 0.5:
        return rgamma(a) * float(_sp.digamma(a + j))
    return _gamma_or_huge(1.0 - a) * (
        sinpi(a) * float(_sp.digamma(1.0 - a - j)) / math.pi - cospi(a)
    )


def pochhammer(a: float, n: int) -> float:
    p = 1.0
    for k in range(n):
        p *= a + k
    return p


@dataclass(frozen=True)
class SeriesSum:
    value: float
    abs_err: float
    terms: int
    magnitude: float


def hyper_series(a_params, b_params, z: float, config: KernelConfig = DEFAULT_CONFIG) -> SeriesSum:
    """Sum the generalized hypergeometric series pFq(a; b; z) for real data.

    Terms are accumulated in floating point first. When the sum of absolute
    terms exceeds the result by more than ``CANCELLATION_LIMIT`` the series
    is resummed in decimal arithmetic with enough digits to absorb the
    cancellation; all inputs are converted exactly.
    """
    a_params, b_params = tuple(a_params), tuple(b_params)
    for b in b_params:
        if is_nonpositive_integer(b):
            stop = [int(-a) for a in a_params if is_nonpositive_integer(a)]
            if not stop or min(stop) > -b:
                raise PoleError(f"lower parameter {b!r} is a pole of the series")
    res = _float_series(a_params, b_params, z, config)
    cancel = res.magnitude / abs(res.value) if res.value else math.inf
    if cancel <= CANCELLATION_LIMIT:
        return res
    digits = 30 + int(math.log10(min(cancel, 1e300)))
    while True:
        if digits > _MAX_DECIMAL_DIGITS:
            raise NonConvergence("hypergeometric series cancels beyond the decimal budget")
        res = _decimal_series(a_params, b_params, z, config, digits)
        if res.value == 0.0:
            return SeriesSum(0.0, res.magnitude * 10.0 ** (20 - digits), res.terms, res.magnitude)
        cancel = res.magnitude / abs(res.value)
        if math.isfinite(cancel) and math.log10(cancel) + 20 < digits:
            return res
        digits = 2 * digits if not math.isfinite(cancel) else int(math.log10(cancel)) + 40


def _ratio_floor(n_a: int, n_b: int, z: float) -> float:
    # limit of the term ratio; p = q + 1 series approach |z| from either side
    return abs(z) if n_a == n_b + 1 else 0.0


def _float_series(a_params, b_params, z, config) -> SeriesSum:
    tol = config.series_tol
    term = 1.0
    total = 1.0
    mag = 1.0
    floor = _ratio_floor(len(a_params), len(b_params), z)
    for n in range(config.max_terms):
        num = 1.0
        for a in a_params:
            num *= a + n
        if num == 0.0:
            return SeriesSum(total, 2 * EPS * mag * (n + 1) ** 0.5, n + 1, mag)
        den = float(n + 1)
        for b in b_params:
            den *= b + n
        ratio = num / den * z
        term *= ratio
        total += term
        mag += abs(term)
        r_next = _next_ratio(a_params, b_params, z, n + 1)
        r = max(r_next, floor)
        if r < 1.0:
            tail = abs(term) * r / (1.0 - r)
            if tail <= tol * abs(total):
                return SeriesSum(total, 2 * EPS * mag * (n + 2) ** 0.5 + tail, n + 2, mag)
    raise NonConvergence(f"series did not converge in {config.max_terms} terms")


def _next_ratio(a_params, b_params, z, n):
    num = 1.0
    for a in a_params:
        num *= a + n
    den = float(n + 1)
    for b in b_params:
        den *= b + n
    if den == 0.0:
        return math.inf
    return abs(num / den * z)


def _decimal_series(a_params, b_params, z, config, digits) -> SeriesSum:
    with localcontext() as ctx:
        ctx.prec = digits
        A = [Decimal(a) for a in a_params]
        B = [Decimal(b) for b in b_params]
        Z = Decimal(z)
        tol = Decimal(10) ** (-(digits - 10))
        term = Decimal(1)
        total = Decimal(1)
        mag = Decimal(1)
        floor = _ratio_floor(len(a_params), len(b_params), z)
        for n in range(config.max_terms):
            num = Decimal(1)
            for a in A:
                num *= a + n
            if num == 0:
                v = float(total)
                return SeriesSum(v, EPS * abs(v), n + 1, float(mag))
            den = Decimal(n + 1)
            for b in B:
                den *= b + n
            term = term * num / den * Z
            total += term
            mag += abs(term)
            r = max(_next_ratio(a_params, b_params, z, n + 1), floor)
            if r < 1.0 and abs(term) * Decimal(r / (1.0 - r)) <= tol * abs(total):
                v = float(total)
                return SeriesSum(v, EPS * abs(v), n + 2, float(mag))
    raise NonConvergence(f"series did not converge in {config.max_terms} terms")
