"""Solutions of the fourth-order Legendre-type equation

    (x^2 - 1)^2 y'''' + 8x (x^2 - 1) y''' + (4A + 12)(x^2 - 1) y'' + 8A x y' = lambda y

on -1 < x < 1, equivalently ((1 - x^2)^2 y'')'' - ((8 + 4A (1 - x^2)) y')' = lambda y.

With Gamma = +-sqrt(4A^2 - 4A + 1 + lambda), Omega = sqrt(5 - 8A + 4 Gamma) and
degree nu = sqrt(9 - 8A + 4 Gamma + 4 Omega)/2 - 1/2, each solution is

    Le = -(1 + Omega)/2 x F(nu, x) + B(x)/D F'(nu, x),
    B(x) = -(lambda + 3 - 4A + 4A^2) + Omega - 3 Gamma + Omega Gamma + D x^2,
    D = lambda + 4A + 4A^2,

with F the Legendre function P (r = 1, 2) or Q (r = 3, 4) and the + branch for
r = 1, 3. At D = 0 the constant part of B vanishes too; the removable
singularity is approached symmetrically in lambda.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, NearSingularParameter
from .jets import Jet, polynomial
from .sfkernel.core import DEFAULT_CONFIG, EPS, EvalResult, KernelConfig
from .sfkernel.legendre import legendre, legendre_dx, legendre_jet

_BRANCH = {1: ("+", "P"), 2: ("-", "P"), 3: ("+", "Q"), 4: ("-", "Q")}

# |D| below this (relative to 4A + 4A^2) counts as sitting on the apparent singularity
SINGULAR_TOL = 1e-8
# half-width of the symmetric lambda stencil, relative to 4A + 4A^2
LIMIT_STEP = 1e-6


@dataclass(frozen=True)
class LegendreTypeParams:
    A: float
    lam: float

    def __post_init__(self):
        if not (math.isfinite(self.A) and self.A > 0.0):
            raise DomainError(f"A must be > 0, got {self.A!r}")
        if not math.isfinite(self.lam):
            raise DomainError("lambda must be finite")

    @property
    def singular_lambda(self) -> float:
        return -(4 * self.A + 4 * self.A**2)


def _sign(sign: str) -> float:
    if sign not in ("+", "-"):
        raise DomainError(f"sign must be '+' or '-', got {sign!r}")
    return 1.0 if sign == "+" else -1.0


def gamma_omega(sign: str, lam: float, A: float) -> tuple[float, float]:
    """(Gamma, Omega) on the chosen branch.

    Raises
    ------
    DomainError
        Naming the radicand that is negative.
    """
    s = _sign(sign)
    if not A > 0.0:
        raise DomainError(f"A must be > 0, got {A!r}")
    r1 = 4 * A * A - 4 * A + 1 + lam
    if r1 < 0.0:
        raise DomainError(f"Gamma radicand 4A^2 - 4A + 1 + lambda = {r1!r} is negative")
    g = s * math.sqrt(r1)
    r2 = 5 - 8 * A + 4 * g
    if r2 < 0.0:
        raise DomainError(f"Omega radicand 5 - 8A + 4 Gamma = {r2!r} is negative")
    return g, math.sqrt(r2)


def degree(sign: str, lam: float, A: float) -> float:
    """Legendre degree nu used by the solutions on this branch."""
    g, om = gamma_omega(sign, lam, A)
    r = 9 - 8 * A + 4 * g + 4 * om
    if r < 0.0:
        raise DomainError(f"degree radicand 9 - 8A + 4 Gamma + 4 Omega = {r!r} is negative")
    return 0.5 * math.sqrt(r) - 0.5


def bracket_factor(sign: str, lam: float, A: float, x: float):
    """The bracket B(x) multiplying F'/D in every solution.

    Evaluated in complex arithmetic so it can be inspected where Gamma or
    Omega are not real (e.g. at lambda = -(4A + 4A^2) for A > 1/8). Returns
    a float when the result is real to rounding, otherwise a complex number.
    """
    s = _sign(sign)
    g = s * cmath.sqrt(4 * A * A - 4 * A + 1 + lam)
    om = cmath.sqrt(5 - 8 * A + 4 * g)
    d = lam + 4 * A + 4 * A * A
    v = -(lam + 3 - 4 * A + 4 * A * A) + om - 3 * g + om * g + d * x * x
    scale = abs(lam) + 3 + 4 * A + 4 * A * A + abs(om) * (1 + abs(g)) + 3 * abs(g)
    if abs(v.imag) <= 16 * EPS * scale:
        return float(v.real)
    return v


def _parts(r: int, params: LegendreTypeParams):
    if r not in _BRANCH:
        raise DomainError(f"solution index must be 1..4, got {r!r}")
    sign, kind = _BRANCH[r]
    A, lam = params.A, params.lam
    g, om = gamma_omega(sign, lam, A)
    nu = degree(sign, lam, A)
    d = lam + 4 * A + 4 * A * A
    b0 = -(lam + 3 - 4 * A + 4 * A * A) + om - 3 * g + om * g
    return kind, nu, om, b0, d


def _check_x(x):
    if not (math.isfinite(x) and -1.0 < x < 1.0):
        raise DomainError(f"Legendre-type solutions need -1 < x < 1, got {x!r}")


def _near_singular(params: LegendreTypeParams) -> bool:
    d = params.lam - params.singular_lambda
    return abs(d) < SINGULAR_TOL * abs(params.singular_lambda)


def _direct(r, params, x, config) -> EvalResult:
    kind, nu, om, b0, d = _parts(r, params)
    f = legendre(kind, nu, x, config)
    df = legendre_dx(kind, nu, x, config)
    c0 = -0.5 * (1.0 + om) * x
    c1 = b0 / d + x * x
    v = c0 * f.value + c1 * df.value
    err = abs(c0) * f.abs_err + abs(c1) * df.abs_err + 8 * EPS * (abs(c0 * f.value) + abs(b0 / d * df.value))
    return EvalResult(v, err)


def _stencil(params: LegendreTypeParams):
    step = LIMIT_STEP * abs(params.singular_lambda)
    lam0 = params.singular_lambda
    return (LegendreTypeParams(params.A, lam0 - step), LegendreTypeParams(params.A, lam0 + step))


def solution_Le(r: int, params: LegendreTypeParams, x: float, config: KernelConfig = DEFAULT_CONFIG,
                limit: bool = True) -> EvalResult:
    """Value of the Legendre-type solution Le_r at x.

    On the apparent singularity lambda = -(4A + 4A^2) the value is the mean
    of the two formula values at lambda +- eps; pass ``limit=False`` to get a
    NearSingularParameter error instead.
    """
    _check_x(x)
    if not _near_singular(params):
        return _direct(r, params, x, config)
    if not limit:
        raise NearSingularParameter("lambda sits on the apparent singularity -(4A + 4A^2)")
    lo, hi = (_direct(r, p, x, config) for p in _stencil(params))
    v = 0.5 * (lo.value + hi.value)
    return EvalResult(v, max(lo.abs_err, hi.abs_err) + 0.5 * abs(hi.value - lo.value) * LIMIT_STEP)


def _jet_direct(r, params, x, order, config) -> Jet:
    kind, nu, om, b0, d = _parts(r, params)
    F = legendre_jet(kind, nu, x, order + 1, config)
    c0 = polynomial([0.0, -0.5 * (1.0 + om)], x, order)
    c1 = polynomial([b0 / d, 0.0, 1.0], x, order)
    return c0 * F.truncate(order) + c1 * F.derivative()


def solution_jet(r: int, params: LegendreTypeParams, x: float, order: int = 4,
                 config: KernelConfig = DEFAULT_CONFIG) -> Jet:
    """Jet [Le_r, Le_r', ...] at x; derivatives of F come from Legendre's equation."""
    _check_x(x)
    if not _near_singular(params):
        return _jet_direct(r, params, x, order, config)
    lo, hi = (_jet_direct(r, p, x, order, config) for p in _stencil(params))
    return (lo + hi) * 0.5


def solution_Le_derivs(r: int, params: LegendreTypeParams, x: float, max_order: int = 3) -> list[float]:
    """[Le_r, Le_r', ..., Le_r^(max_order)] at x (max_order <= 4)."""
    if not 0 <= max_order <= 4:
        raise DomainError("max_order must lie in 0..4")
    return solution_jet(r, params, x, max_order).tolist()


def admissible(r: int, params: LegendreTypeParams) -> bool:
    """True when every radicand of solution r is non-negative at these parameters."""
    try:
        _parts(r, params)
    except DomainError:
        return False
    return True


def basis_defect(params: LegendreTypeParams) -> str | None:
    """Why Le_1..Le_4 are not a real fundamental system here, or None."""
    bad = [r for r in (1, 2, 3, 4) if not admissible(r, params)]
    if bad:
        return f"radicand negative for solutions {bad}"
    if gamma_omega("+", params.lam, params.A)[0] == 0.0:
        return "Gamma = 0: the two branches coincide"
    return None
