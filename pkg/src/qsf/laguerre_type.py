"""Solutions of the fourth-order Laguerre-type equation

    x^2 y'''' + (-2x^2 + 4x) y''' + (x^2 - (2A+6) x) y'' + ((2A+2) x - 2A) y' = lambda y

on x > 0, equivalently (x^2 e^-x y'')'' - (((2A+2) x + 2) e^-x y')' = lambda e^-x y.

With Gamma = sqrt(4A^2 + 4A + 1 + 4 lambda) the solutions are

    L = (1/2 +- Gamma/2) Phi - d/dx Phi,   Phi = x^(-1/2) e^(x/2) F(-A -+ Gamma/2, 0; x)

where F is the Whittaker function M (r = 1, 2) or W (r = 3, 4), upper signs for
r = 1, 3. The factor x^(-1/2) e^(x/2) cancels the Whittaker prefactor exactly,
so Phi is the Kummer function M or U with first parameter 1/2 + A +- Gamma/2
and second parameter 1, which is what gets evaluated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .jets import Jet
from .sfkernel.confluent import kummer_dx, kummer_jet, kummer_m, kummer_u
from .sfkernel.core import DEFAULT_CONFIG, EPS, EvalResult, KernelConfig

# M(a, 1, x) grows like e^x; past this the solutions r = 1, 2 overflow doubles
X_MAX = 700.0

_BRANCH = {1: (1.0, "M"), 2: (-1.0, "M"), 3: (1.0, "U"), 4: (-1.0, "U")}


@dataclass(frozen=True)
class LaguerreTypeParams:
    A: float
    lam: float

    def __post_init__(self):
        if not (math.isfinite(self.A) and self.A > 0.0):
            raise DomainError(f"A must be > 0, got {self.A!r}")
        if not math.isfinite(self.lam):
            raise DomainError("lambda must be finite")

    @property
    def gamma(self) -> float:
        return gamma_la(self.lam, self.A)


def gamma_la(lam: float, A: float) -> float:
    """Gamma(lambda, A) = sqrt(4A^2 + 4A + 1 + 4 lambda).

    Raises
    ------
    DomainError
        When the radicand is negative (complex Gamma is not supported).
    """
    if not A > 0.0:
        raise DomainError(f"A must be > 0, got {A!r}")
    r = 4 * A * A + 4 * A + 1 + 4 * lam
    if r < 0.0:
        raise DomainError(f"4A^2 + 4A + 1 + 4 lambda = {r!r} < 0 gives a complex Gamma")
    return math.sqrt(r)


def _check_x(x: float, kind: str):
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"Laguerre-type solutions need x > 0, got {x!r}")
    if kind == "M" and x > X_MAX:
        raise OverflowError(f"M-based solutions overflow beyond x = {X_MAX}")


def _branch(r: int):
    if r not in _BRANCH:
        raise DomainError(f"solution index must be 1..4, got {r!r}")
    return _BRANCH[r]


def formula(g: float, kind: str, A: float, x: float, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """(1/2 + g/2) Phi - Phi' with Phi the Kummer kernel of first parameter 1/2 + A + g/2.

    ``g`` is the signed Gamma value: solution r = 1 is ``formula(+Gamma, "M", ...)``
    and r = 2 is ``formula(-Gamma, "M", ...)``; likewise 3 and 4 with "U".
    """
    _check_x(x, kind)
    a = 0.5 + A + 0.5 * g
    f = kummer_m(a, 1.0, x, config) if kind == "M" else kummer_u(a, 1.0, x, config)
    df = kummer_dx(kind, a, x, config)
    coef = 0.5 + 0.5 * g
    v = coef * f.value - df.value
    if math.isinf(v):
        raise OverflowError(f"Laguerre-type solution overflows at x = {x!r}")
    err = abs(coef) * f.abs_err + df.abs_err + 4 * EPS * (abs(coef * f.value) + abs(df.value))
    return EvalResult(v, err)


def solution_L(r: int, params: LaguerreTypeParams, x: float, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """Value of the Laguerre-type solution L_r, r in 1..4, at x > 0."""
    sign, kind = _branch(r)
    return formula(sign * params.gamma, kind, params.A, x, config)


def solution_jet(r: int, params: LaguerreTypeParams, x: float, order: int = 4,
                 config: KernelConfig = DEFAULT_CONFIG) -> Jet:
    sign, kind = _branch(r)
    _check_x(x, kind)
    g = sign * params.gamma
    k = kummer_jet(kind, 0.5 + params.A + 0.5 * g, x, order + 1, config)
    return k.truncate(order) * (0.5 + 0.5 * g) - k.derivative()


def solution_L_derivs(r: int, params: LaguerreTypeParams, x: float, max_order: int = 3) -> list[float]:
    """[L_r, L_r', ..., L_r^(max_order)] at x, analytic up to order 4."""
    if not 0 <= max_order <= 4:
        raise DomainError("max_order must lie in 0..4")
    return solution_jet(r, params, x, max_order).tolist()


def basis_defect(params: LaguerreTypeParams) -> str | None:
    """Why L_1..L_4 are not a fundamental system at these parameters, or None.

    Gamma = 0 merges the two branches. A non-positive integer Kummer
    parameter -k makes U(-k, 1, x) = (-1)^k k! M(-k, 1, x), so the U-based
    solution on that branch is a multiple of the M-based one; lambda = 0 is
    such a case (k = 0 on the lower branch).
    """
    g = params.gamma
    if g == 0.0:
        return "Gamma = 0: L_1 = L_2 and L_3 = L_4"
    for sign, pair in ((1.0, "L_3 ~ L_1"), (-1.0, "L_4 ~ L_2")):
        a = 0.5 + params.A + 0.5 * sign * g
        if a <= 0.0 and abs(a - round(a)) < 1e-12 * max(1.0, abs(a)):
            return f"Kummer parameter {round(a)} is a non-positive integer: {pair}"
    return None
