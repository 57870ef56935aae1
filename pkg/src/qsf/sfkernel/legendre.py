"""Legendre functions P_nu(x), Q_nu(x) on the cut (-1, 1) for real degree nu.

Degrees nu >= -1/2 are reduced to a base degree nu0 in [-1/2, 1/2) and
carried up by the forward recurrence
(mu + 1) f_{mu+1} = (2 mu + 1) x f_mu - mu f_{mu-1},
which P and Q share. At the base degree P comes from the Gauss function
and Q from its logarithmic series, with the reflection x -> -x for x < 0.
The same procedure covers integer and non-integer degrees, so nothing
special happens near the integers.
"""

from __future__ import annotations

import math

from ..errors import DomainError, NonConvergence, PoleError
from ..jets import Jet
from .core import DEFAULT_CONFIG, EPS, EvalResult, KernelConfig, cospi, digamma, sinpi
from .hypergeometric import gauss_2f1

_EULER_GAMMA = 0.5772156649015329


def _check(kind: str, nu: float, x: float):
    if kind not in ("P", "Q"):
        raise DomainError(f"Legendre kind must be 'P' or 'Q', got {kind!r}")
    if not math.isfinite(nu):
        raise DomainError("degree must be finite")
    if not -1.0 < x < 1.0:
        raise DomainError(f"Legendre functions need -1 < x < 1, got {x!r}")


def _p_base(nu0: float, x: float, config) -> EvalResult:
    return gauss_2f1(-nu0, nu0 + 1.0, 1.0, 0.5 * (1.0 - x), config)


def _q_log_series(nu: float, x: float, p: float, config) -> EvalResult:
    # Q_nu(x) = -(P ln z + S)/2 - (gamma + psi(nu+1)) P with z = (1-x)/2, valid for x >= 0.
    # S = sum_{k>=1} (a)_k (b)_k/(k!)^2 z^k [sum_{j<k} (1/(a+j) + 1/(b+j)) - 2 H_k],
    # a = -nu, b = nu + 1; the inner harmonic-like sum is carried as u_k to
    # avoid dividing by a + j when nu is an integer.
    a, b = -nu, nu + 1.0
    z = 0.5 * (1.0 - x)
    c = 1.0  # (a)_k (b)_k / (k!)^2 z^k
    u = 0.0  # c_k * sum_{j<k} (1/(a+j) + 1/(b+j))
    h = 0.0
    s = 0.0
    mag = 0.0
    for k in range(config.max_terms):
        f = z / ((k + 1) * (k + 1))
        u = (u * (a + k) * (b + k) + c * (a + b + 2 * k)) * f
        c = c * (a + k) * (b + k) * f
        h += 1.0 / (k + 1)
        t = u - 2.0 * h * c
        s += t
        mag += abs(t)
        if k > abs(nu) + 2 and abs(t) <= config.series_tol * max(abs(s), 1e-300) and abs(c) <= config.series_tol:
            break
    else:
        raise NonConvergence("logarithmic series for Q did not converge")
    lz = math.log(z)
    v = -0.5 * (p * lz + s) - (_EULER_GAMMA + digamma(nu + 1.0)) * p
    err = 8 * EPS * (mag + abs(p * lz) + abs(p) * (1 + abs(digamma(nu + 1.0)))) + abs(t)
    return EvalResult(v, err)


def _q_base(nu0: float, x: float, config) -> EvalResult:
    if nu0 == 0.0:
        v = math.atanh(x)
        return EvalResult(v, 2 * EPS * abs(v) + EPS)
    ax = abs(x)
    p = _p_base(nu0, ax, config)
    q = _q_log_series(nu0, ax, p.value, config)
    if x >= 0.0:
        return q
    # Q_nu(-x) = -cos(nu pi) Q_nu(x) - (pi/2) sin(nu pi) P_nu(x)
    cs, sn = cospi(nu0), sinpi(nu0)
    v = -cs * q.value - 0.5 * math.pi * sn * p.value
    err = abs(cs) * q.abs_err + 0.5 * math.pi * abs(sn) * p.abs_err + 4 * EPS * abs(v)
    return EvalResult(v, err)


def _base_pair(kind, nu0, x, config):
    if kind == "P":
        return _p_base(nu0, x, config), _p_base(nu0 + 1.0, x, config)
    if nu0 == 0.0:
        q0 = _q_base(0.0, x, config)
        v = x * q0.value - 1.0
        return q0, EvalResult(v, abs(x) * q0.abs_err + 2 * EPS * (abs(v) + 1.0))
    q0 = _q_base(nu0, x, config)
    q1 = _q_base(nu0 + 1.0, x, config)
    return q0, q1


def _upward(kind: str, nu: float, x: float, config):
    """Values at degrees nu and nu + 1 for nu >= -1/2, with a relative error bound."""
    n = math.floor(nu + 0.5)
    nu0 = nu - n
    f0, f1 = _base_pair(kind, nu0, x, config)
    scale = max(abs(f0.value), abs(f1.value))
    err = max(f0.abs_err, f1.abs_err)
    lo, hi = f0.value, f1.value
    mu = nu0 + 1.0
    for _ in range(n):
        lo, hi = hi, ((2 * mu + 1) * x * hi - mu * lo) / (mu + 1)
        mu += 1.0
        scale = max(scale, abs(hi))
    # the recurrence is neutrally stable on the cut; errors grow at most linearly
    err = (err + 4 * EPS * scale) * (n + 1)
    return lo, hi, err


def _reflected(kind, nu, x, config):
    """(F_nu, F_{nu+1}, err) for any real nu via F_{-nu-1} relations."""
    if nu >= -0.5:
        return _upward(kind, nu, x, config)
    mu = -nu - 1.0  # > -1/2
    if kind == "P":
        # P_nu = P_{-nu-1}; P_{nu+1} = P_{-nu-2} = P_{mu-1}
        pm, pm1, e1 = _upward("P", mu, x, config)
        if mu - 1.0 >= -0.5:
            pl, _, e2 = _upward("P", mu - 1.0, x, config)
        else:
            pl, _, e2 = _upward("P", -mu, x, config)  # P_{mu-1} = P_{-mu}
        return pm, pl, max(e1, e2)
    if nu == math.floor(nu):
        raise PoleError(f"Q_nu has a pole at negative integer degree {nu!r}")
    # Q_{-mu-1} = Q_mu - pi cot(mu pi) P_mu
    v0, e0 = _q_negative(mu, x, config)
    v1, e1 = _q_negative(mu - 1.0, x, config) if nu + 1.0 < -0.5 else _upward("Q", nu + 1.0, x, config)[::2]
    return v0, v1, max(e0, e1)


def _q_negative(mu, x, config):
    # Q at degree -mu-1 from degree mu >= -1/2
    q, _, eq = _upward("Q", mu, x, config)
    p, _, ep = _upward("P", mu, x, config)
    cot = cospi(mu) / sinpi(mu)
    v = q - math.pi * cot * p
    return v, eq + math.pi * abs(cot) * ep + 4 * EPS * abs(v)


def legendre(kind: str, nu: float, x: float, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """Legendre function P_nu(x) or Q_nu(x) (order zero, on the cut) for -1 < x < 1.

    Raises
    ------
    DomainError
        For |x| >= 1.
    PoleError
        For Q at negative integer degree.
    """
    _check(kind, nu, x)
    v, _, err = _reflected(kind, nu, x, config)
    return EvalResult(v, err)


def legendre_dx(kind: str, nu: float, x: float, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """d/dx of P_nu or Q_nu from (1 - x^2) F_nu' = (nu + 1)(x F_nu - F_{nu+1})."""
    _check(kind, nu, x)
    mu = nu if nu >= -0.5 else -nu - 1.0
    if kind == "P" and mu < 1.5:
        # low degree: x F_nu - F_{nu+1} cancels as nu(nu+1) -> 0, so
        # differentiate the Gauss function instead
        f = 0.5 * mu * (mu + 1.0)
        if f == 0.0:
            return EvalResult(0.0, 0.0)
        g = gauss_2f1(1.0 - mu, mu + 2.0, 2.0, 0.5 * (1.0 - x), config)
        return EvalResult(f * g.value, abs(f) * g.abs_err + 2 * EPS * abs(f * g.value))
    f0, f1, err = _reflected(kind, nu, x, config)
    w = 1.0 - x * x
    v = (nu + 1.0) * (x * f0 - f1) / w
    e = abs(nu + 1.0) * (abs(x) + 1.0) * err / w + 4 * EPS * abs(v)
    return EvalResult(v, e)


def legendre_jet(kind: str, nu: float, x: float, order: int, config: KernelConfig = DEFAULT_CONFIG) -> Jet:
    """Jet in x of P_nu or Q_nu, higher terms from Legendre's equation.

    (1 - x^2) F^(k+2) = 2 (k+1) x F^(k+1) - (nu(nu+1) - k(k+1)) F^(k).
    """
    f = legendre(kind, nu, x, config).value
    d = [f, legendre_dx(kind, nu, x, config).value]
    lam = nu * (nu + 1.0)
    w = 1.0 - x * x
    for k in range(order - 1):
        d.append((2 * (k + 1) * x * d[k + 1] - (lam - k * (k + 1)) * d[k]) / w)
    return Jet(d[: order + 1])
