"""Bessel functions J, Y, I, K of orders 0 and 1.

Values come from the Cephes routines shipped with scipy; derivatives of any
order follow from the Bessel equations, and the entire functions J0, I0,
J1(t)/t, I1(t)/t use their power series near the origin.
"""

from __future__ import annotations

import math

from scipy import special as _sp

from ..errors import DomainError
from ..jets import Jet, power_series
from .core import EPS, EvalResult

_VALUE = {
    ("J", 0): _sp.j0, ("J", 1): _sp.j1,
    ("Y", 0): _sp.y0, ("Y", 1): _sp.y1,
    ("I", 0): _sp.i0, ("I", 1): _sp.i1,
    ("K", 0): _sp.k0, ("K", 1): _sp.k1,
}

# below this |t| the entire functions are summed as power series
SERIES_RADIUS = 2.0
_SERIES_TERMS = 40


def _check(kind: str, order: int, x: float):
    if (kind, order) not in _VALUE:
        raise DomainError(f"unsupported Bessel function {kind}{order}")
    if not math.isfinite(x):
        raise DomainError("Bessel argument must be finite")
    if kind in "YK":
        if x <= 0:
            raise DomainError(f"{kind}{order} requires x > 0, got {x!r}")
    elif x < 0:
        raise DomainError(f"{kind}{order} requires x >= 0, got {x!r}")


def bessel(kind: str, order: int, x: float) -> EvalResult:
    """Value of J, Y, I or K of order 0 or 1 at real x.

    Raises
    ------
    DomainError
        For x <= 0 with Y/K and x < 0 with J/I.
    """
    _check(kind, order, x)
    v = float(_VALUE[kind, order](x))
    if math.isinf(v):
        raise OverflowError(f"{kind}{order}({x!r}) overflows")
    return EvalResult(v, 4 * EPS * abs(v) + (4 * EPS if kind == "J" else 0.0))


def bessel_dx(kind: str, order: int, x: float) -> EvalResult:
    """First derivative d/dx of the Bessel function ``kind``/``order``.

    Uses J0' = -J1, J1' = J0 - J1/x and the analogous relations for Y, I, K.
    At x = 0 the order-1 functions take their limits J1'(0) = I1'(0) = 1/2.
    """
    _check(kind, order, x)
    f0 = float(_VALUE[kind, 0](x))
    f1 = float(_VALUE[kind, 1](x))
    if order == 0:
        v = {"J": -f1, "Y": -f1, "I": f1, "K": -f1}[kind]
        return EvalResult(v, 4 * EPS * abs(v) + (4 * EPS if kind == "J" else 0.0))
    if x == 0.0:
        return EvalResult(0.5, 0.0)
    v = {"J": f0 - f1 / x, "Y": f0 - f1 / x, "I": f0 - f1 / x, "K": -f0 - f1 / x}[kind]
    return EvalResult(v, 8 * EPS * (abs(f0) + abs(f1 / x)))


def _series_coeffs(kind: str, which: str):
    """Power-series coefficients of J0, I0 (which='0') or J1(t)/t, I1(t)/t (which='1/t')."""
    sign = -1.0 if kind == "J" else 1.0
    c = [0.0] * (2 * _SERIES_TERMS)
    for k in range(_SERIES_TERMS):
        if which == "0":
            c[2 * k] = sign**k / (4.0**k * math.factorial(k) ** 2)
        else:
            c[2 * k] = 0.5 * sign**k / (4.0**k * math.factorial(k) * math.factorial(k + 1))
    return c


def _ode_jet(kind: str, t: float, u0: float, u1: float, order: int) -> Jet:
    # t u'' + u' + s t u = 0 with s = +1 for J, Y and -1 for I, K; differentiated k times:
    # t u^(k+2) + (k+1) u^(k+1) + s (t u^(k) + k u^(k-1)) = 0
    s = 1.0 if kind in "JY" else -1.0
    d = [u0, u1]
    for k in range(order - 1):
        prev = d[k - 1] if k >= 1 else 0.0
        d.append(-((k + 1) * d[k + 1] + s * (t * d[k] + k * prev)) / t)
    return Jet(d[: order + 1])


def order0_jet(kind: str, t: float, order: int) -> Jet:
    """Jet in t of Z0(t) for Z in {J, Y, I, K}."""
    _check(kind, 0, t)
    if kind in "JI" and abs(t) <= SERIES_RADIUS:
        return power_series(_series_coeffs(kind, "0"), t, order)
    u0 = float(_VALUE[kind, 0](t))
    z1 = float(_VALUE[kind, 1](t))
    u1 = z1 if kind == "I" else -z1
    return _ode_jet(kind, t, u0, u1, order)


def order1_over_t_jet(kind: str, t: float, order: int) -> Jet:
    """Jet in t of Z1(t)/t, regular at t = 0 for J and I."""
    if kind in "JI" and abs(t) <= SERIES_RADIUS:
        return power_series(_series_coeffs(kind, "1/t"), t, order)
    # Z1 = -Z0' for J, Y, K and Z1 = Z0' for I
    z0 = order0_jet(kind, t, order + 1).derivative()
    z1 = z0 if kind == "I" else -z0
    inv_t = Jet([math.factorial(k) * (-1) ** k / t ** (k + 1) for k in range(order + 1)])
    return z1 * inv_t
