"""Solutions of the fourth-order Bessel-type equation

    x y'''' + 2 y''' - (9/x + 8x/M) y'' - (8/M - 9/x^2) y' = Lambda x y,   x > 0,

with Lambda = lambda^2 (lambda^2 + 8/M). With d = 1 + M (lambda/2)^2 and
c = sqrt(lambda^2 + 8/M) the four solutions are

    J = d J0(lambda x) - 2M (lambda/2)^2 (lambda x)^-1 J1(lambda x)
    Y = d Y0(lambda x) - 2M (lambda/2)^2 (lambda x)^-1 Y1(lambda x)
    I = -d I0(c x) + (c M / 2) x^-1 I1(c x)
    K =  d K0(c x) + (c M / 2) x^-1 K1(c x)

All four are built as Z0(s x) and Z1(s x)/(s x) jets, so derivatives of any
order are analytic and the removable singularities at lambda = 0 and, for J
and I, at x = 0 are handled by the power series of the entire parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .jets import Jet, scale_argument
from .sfkernel.bessel import order0_jet, order1_over_t_jet
from .sfkernel.core import EPS, EvalResult

KINDS = ("J", "Y", "I", "K")


@dataclass(frozen=True)
class BesselTypeParams:
    """Parameters (M, lambda) of the Bessel-type equation; both real, M > 0."""

    M: float
    lam: float

    def __post_init__(self):
        if not (math.isfinite(self.M) and self.M > 0.0):
            raise DomainError(f"M must be > 0, got {self.M!r}")
        if not math.isfinite(self.lam):
            raise DomainError("lambda must be finite")

    @property
    def c(self) -> float:
        return math.sqrt(self.lam**2 + 8.0 / self.M)

    @property
    def d(self) -> float:
        return 1.0 + self.M * (0.5 * self.lam) ** 2

    @property
    def Lambda(self) -> float:
        return lambda_cap(self.lam, self.M)


def lambda_cap(lam: float, M: float) -> float:
    """Spectral parameter Lambda = lambda^2 (lambda^2 + 8/M)."""
    if not M > 0.0:
        raise DomainError(f"M must be > 0, got {M!r}")
    return lam * lam * (lam * lam + 8.0 / M)


def _check(kind: str, x: float):
    if kind not in KINDS:
        raise DomainError(f"Bessel-type solution must be one of {KINDS}, got {kind!r}")
    if not math.isfinite(x):
        raise DomainError("x must be finite")
    if kind in "YK" and not x > 0.0:
        raise DomainError(f"{kind} solution requires x > 0, got {x!r}")
    if x < 0.0:
        raise DomainError(f"{kind} solution requires x >= 0, got {x!r}")


def _terms(kind: str, p: BesselTypeParams):
    """(base kind, scale s, coefficient of Z0, coefficient of Z1(t)/t)."""
    lam = abs(p.lam)
    if kind == "J":
        return "J", lam, p.d, -2.0 * p.M * (0.5 * lam) ** 2
    if kind == "Y":
        if lam == 0.0:
            raise DomainError("the Y solution has no lambda -> 0 limit")
        return "Y", lam, p.d, -2.0 * p.M * (0.5 * lam) ** 2
    c = p.c
    if kind == "I":
        return "I", c, -p.d, 0.5 * c * c * p.M
    return "K", c, p.d, 0.5 * c * c * p.M


def solution_jet(kind: str, params: BesselTypeParams, x: float, order: int = 4) -> Jet:
    """Jet [y, y', ..., y^(order)] of the chosen solution at x."""
    _check(kind, x)
    base, s, c0, c1 = _terms(kind, params)
    t = s * x
    z0 = scale_argument(order0_jet(base, t, order), s)
    z1 = scale_argument(order1_over_t_jet(base, t, order), s)
    return z0 * c0 + z1 * c1


def solution(kind: str, params: BesselTypeParams, x: float) -> EvalResult:
    """Value of the J, Y, I or K Bessel-type solution at x.

    Examples
    --------
    >>> solution("J", BesselTypeParams(M=1.0, lam=2.0), 0.0).value
    1.0
    """
    _check(kind, x)
    base, s, c0, c1 = _terms(kind, params)
    t = s * x
    a = c0 * order0_jet(base, t, 0)[0]
    b = c1 * order1_over_t_jet(base, t, 0)[0]
    v = float(a + b)
    return EvalResult(v, float(8 * EPS * (abs(a) + abs(b))))


def solution_derivs(kind: str, params: BesselTypeParams, x: float, max_order: int = 3) -> list[float]:
    """[y, y', ..., y^(max_order)] at x, all analytic (max_order <= 4)."""
    if not 0 <= max_order <= 4:
        raise DomainError("max_order must lie in 0..4")
    return solution_jet(kind, params, x, max_order).tolist()
