"""Gauss hypergeometric function on [0, 1] and the JP function built on it.

The workhorse is the regularized function F~(a, b; c; z) = 2F1(a, b; c; z)/Gamma(c),
which is entire in c and therefore handles non-positive integer c without
special cases. For z > 1/2 the series is moved to 1 - z by the connection
formulas; when c - a - b is an integer the logarithmic form of the
connection is used (this is the common case for Legendre and JP calls).
"""

from __future__ import annotations

import math

from ..errors import DivergenceError, DomainError, NonConvergence, PoleError
from ..jets import Jet
from .core import (
    DEFAULT_CONFIG,
    EPS,
    EvalResult,
    KernelConfig,
    gamma_fn,
    gamma_ratio,
    hyper_series,
    is_nonpositive_integer,
    pochhammer,
    rg_psi,
    rgamma,
    sinpi,
)

# c - a - b within this relative distance of an integer uses the log formula
_INTEGER_TOL = 1e-12
# closer than this (but not integer) the generic connection cancels badly,
# so the direct series is preferred while z is not too close to 1
_NEAR_INTEGER = 1e-5
_DIRECT_Z_MAX = 0.97
# connection results with a worse relative error estimate try the direct series
_GOOD_REL = 1e-13


def _terminates(a: float, b: float) -> bool:
    return is_nonpositive_integer(a) or is_nonpositive_integer(b)


def _nearest_int(m: float):
    k = round(m)
    return k if abs(m - k) <= _INTEGER_TOL * max(1.0, abs(m)) else None


def rf21(a: float, b: float, c: float, z: float, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """Regularized hypergeometric function 2F1(a, b; c; z)/Gamma(c) for 0 <= z <= 1.

    Raises
    ------
    DomainError
        For z outside [0, 1].
    DivergenceError
        At z = 1 when the series does not terminate and c - a - b <= 0.
    """
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"2F1 argument must lie in [0, 1], got {z!r}")
    if is_nonpositive_integer(c):
        n = int(-c) + 1
        stop = [int(-p) for p in (a, b) if is_nonpositive_integer(p)]
        if stop and min(stop) < n:
            # terminates before the pole; (a)_n (b)_n = 0
            return EvalResult(0.0, 0.0)
        pref = pochhammer(a, n) * pochhammer(b, n) * z**n
        if pref == 0.0:
            return EvalResult(0.0, 0.0)
        inner = rf21(a + n, b + n, float(n + 1), z, config)
        return EvalResult(pref * inner.value, abs(pref) * inner.abs_err)
    rc = rgamma(c)
    if _terminates(a, b):
        s = hyper_series((a, b), (c,), z, config)
        return EvalResult(rc * s.value, abs(rc) * s.abs_err)
    if z == 1.0:
        return _at_one(a, b, c)
    if z <= 0.5:
        s = hyper_series((a, b), (c,), z, config)
        return EvalResult(rc * s.value, abs(rc) * s.abs_err)
    m = c - a - b
    k = _nearest_int(m)
    if k is not None:
        if k >= 0:
            conn = _log_connection(a, b, k, z, config)
        else:
            # Euler: F(a,b;c;z) = (1-z)^(c-a-b) F(c-a,c-b;c;z), new c - a - b = -k > 0
            inner = _log_connection(c - a, c - b, -k, z, config)
            f = (1.0 - z) ** k
            conn = EvalResult(f * inner.value, f * inner.abs_err)
    elif abs(m - round(m)) < _NEAR_INTEGER and z <= _DIRECT_Z_MAX:
        conn = None
    else:
        conn = _generic_connection(a, b, c, z, config)
    if conn is not None and (conn.abs_err <= _GOOD_REL * abs(conn.value) or z > _DIRECT_Z_MAX):
        return conn
    # large parameters make the connection sums cancel; the direct series
    # still converges geometrically this far from z = 1
    s = hyper_series((a, b), (c,), z, config)
    direct = EvalResult(rc * s.value, abs(rc) * s.abs_err)
    if conn is None or direct.abs_err <= conn.abs_err:
        return direct
    return conn


def _at_one(a, b, c) -> EvalResult:
    m = c - a - b
    if m <= 0.0:
        raise DivergenceError(f"2F1({a!r}, {b!r}; {c!r}; 1) diverges since c - a - b <= 0")
    v = gamma_fn(m).value * rgamma(c - a) * rgamma(c - b)
    return EvalResult(v, 16 * EPS * abs(v))


def _generic_connection(a, b, c, z, config) -> EvalResult:
    # F/Gamma(c) = pi/sin(pi m) [ F~(a,b;1-m;w)/(G(c-a)G(c-b)) - w^m F~(c-a,c-b;1+m;w)/(G(a)G(b)) ]
    m = c - a - b
    w = 1.0 - z
    s1 = rf21(a, b, 1.0 - m, w, config)
    s2 = rf21(c - a, c - b, 1.0 + m, w, config)
    g1 = rgamma(c - a) * rgamma(c - b)
    g2 = rgamma(a) * rgamma(b) * w**m
    f = math.pi / sinpi(m)
    t1, t2 = f * g1 * s1.value, f * g2 * s2.value
    v = t1 - t2
    err = abs(f) * (abs(g1) * s1.abs_err + abs(g2) * s2.abs_err) + 8 * EPS * (abs(t1) + abs(t2))
    return EvalResult(v, err)


def _log_connection(a, b, m: int, z, config) -> EvalResult:
    """F~(a, b; a+b+m; z) for integer m >= 0 and 1/2 < z < 1 (logarithmic case)."""
    w = 1.0 - z
    rga, rgb = rgamma(a), rgamma(b)
    # finite part: rg(a+m) rg(b+m) sum_{k<m} (a)_k (b)_k (m-k-1)!/k! (z-1)^k
    finite = 0.0
    fmag = 0.0
    if m > 0:
        t = 1.0
        for k in range(m):
            term = t * math.factorial(m - k - 1)
            finite += term
            fmag += abs(term)
            t *= (a + k) * (b + k) * (-w) / (k + 1)
        g = rgamma(a + m) * rgamma(b + m)
        finite *= g
        fmag *= abs(g)
    lw = math.log(w)
    psi_k1 = -0.5772156649015329  # psi(1)
    psi_km1 = psi_k1 + sum(1.0 / j for j in range(1, m + 1))  # psi(m+1)
    coef = 1.0 / math.factorial(m)  # (a+m)_k (b+m)_k / (k! (k+m)!) w^k
    total = 0.0
    mag = 0.0
    for k in range(config.max_terms):
        if k > 0:
            coef *= (a + m + k - 1) * (b + m + k - 1) * w / (k * (k + m))
            psi_k1 += 1.0 / k
            psi_km1 += 1.0 / (k + m)
        bracket = rga * rgb * (lw - psi_k1 - psi_km1) + rgb * rg_psi(a, k + m) + rga * rg_psi(b, k + m)
        term = coef * bracket
        total += term
        mag += abs(term)
        if k > 4 and k > abs(a) + abs(b) and abs(term) <= config.series_tol * abs(total):
            break
    else:
        raise NonConvergence("logarithmic 2F1 connection series did not converge")
    sign = -1.0 if m % 2 else 1.0  # (z-1)^m = (-w)^m
    tail = -sign * w**m * total
    v = finite + tail
    err = 8 * EPS * (fmag + w**m * mag * (1.0 + abs(lw))) + w**m * abs(term)
    return EvalResult(v, err)


def gauss_2f1(a: float, b: float, c: float, z: float, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """Gauss hypergeometric function 2F1(a, b; c; z) for real parameters and 0 <= z <= 1.

    Raises
    ------
    PoleError
        When c is a non-positive integer and the series does not terminate first.
    DivergenceError
        At z = 1 with a non-terminating series and c - a - b <= 0.
    """
    if is_nonpositive_integer(c):
        stop = [int(-p) for p in (a, b) if is_nonpositive_integer(p)]
        if not stop or min(stop) > -c:
            raise PoleError(f"2F1 has a pole at c = {c!r}")
        if not 0.0 <= z <= 1.0:
            raise DomainError(f"2F1 argument must lie in [0, 1], got {z!r}")
        s = hyper_series((a, b), (c,), z, config)
        return EvalResult(s.value, s.abs_err)
    r = rf21(a, b, c, z, config)
    g = gamma_fn(c)
    v = g.value * r.value
    return EvalResult(v, abs(g.value) * r.abs_err + g.abs_err * abs(r.value) + EPS * abs(v))


def rf21_jet(a: float, b: float, c: float, z: float, order: int, config: KernelConfig = DEFAULT_CONFIG) -> Jet:
    """Derivatives in z of F~(a, b; c; z) up to ``order``.

    Uses d^k/dz^k F~(a, b; c; z) = (a)_k (b)_k F~(a+k, b+k; c+k; z).
    """
    out = []
    for k in range(order + 1):
        p = pochhammer(a, k) * pochhammer(b, k)
        out.append(0.0 if p == 0.0 else p * rf21(a + k, b + k, c + k, z, config).value)
    return Jet(out)


def _check_jp(nu, alpha, beta, x):
    for name, v in (("nu", nu), ("alpha", alpha), ("beta", beta), ("x", x)):
        if not math.isfinite(v):
            raise DomainError(f"{name} must be finite")
    if not -1.0 <= x <= 1.0:
        raise DomainError(f"JP requires -1 <= x <= 1, got {x!r}")
    if x == -1.0 and not is_nonpositive_integer(-nu) and not is_nonpositive_integer(nu + alpha + beta + 1):
        raise DomainError("JP at x = -1 needs a terminating series (integer degree)")


def jp_prefactor(nu: float, alpha: float) -> float:
    """Gamma(nu + alpha + 1)/Gamma(nu + 1), the factor multiplying F~ in JP."""
    return gamma_ratio(nu + alpha + 1.0, nu + 1.0)


def _jp_terminating(n: int, alpha: float, beta: float, x: float) -> EvalResult:
    """Integer degree: three-term recurrence in n, which is stable on [-1, 1].

    Falls back to the polynomial in (1-x)/2 with prefactor (alpha+1)_n/n!
    when a recurrence denominator vanishes.
    """
    s = alpha + beta
    p0, p1 = 1.0, (alpha + 1.0) + (s + 2.0) * 0.5 * (x - 1.0)
    if n == 0:
        return EvalResult(1.0, 0.0)
    big = max(1.0, abs(p1))
    for k in range(2, n + 1):
        c = 2 * k + s
        den = 2 * k * (k + s) * (c - 2)
        if den == 0.0:
            return _jp_power_sum(n, alpha, beta, x)
        p0, p1 = p1, ((c - 1) * (c * (c - 2) * x + alpha * alpha - beta * beta) * p1
                      - 2 * (k + alpha - 1) * (k + beta - 1) * c * p0) / den
        big = max(big, abs(p1))
    return EvalResult(p1, 4 * (n + 1) * EPS * big)


def _jp_power_sum(n: int, alpha: float, beta: float, x: float) -> EvalResult:
    c0 = 1.0
    for j in range(1, n + 1):
        c0 *= (alpha + j) / j
    z = 0.5 * (1.0 - x)
    b = n + alpha + beta + 1.0
    t, acc, mag = 1.0, 1.0, 1.0
    for k in range(n):
        t *= (k - n) * (b + k) / ((alpha + 1.0 + k) * (k + 1)) * z
        acc += t
        mag += abs(t)
    return EvalResult(c0 * acc, (n + 2) * EPS * abs(c0) * mag)


def jp(nu: float, alpha: float, beta: float = 0.0, x: float = 1.0, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """Jacobi function of real degree.

    JP(nu, alpha, beta; x) = Gamma(nu+alpha+1)/(Gamma(nu+1) Gamma(alpha+1))
    * 2F1(-nu, nu+alpha+beta+1; alpha+1; (1-x)/2), equal to the Jacobi
    polynomial P_n^(alpha,beta)(x) when nu = n is a non-negative integer.

    Negative alpha below -1 is accepted; the regularized 2F1 keeps the
    expression finite when alpha + 1 is a non-positive integer.

    Raises
    ------
    PoleError
        When the pole of Gamma(nu+alpha+1) is not cancelled by Gamma(nu+1).
    DomainError
        For |x| > 1, or x = -1 without a terminating series.
    """
    _check_jp(nu, alpha, beta, x)
    if nu >= 0.0 and nu == math.floor(nu) and not is_nonpositive_integer(alpha + 1.0):
        return _jp_terminating(int(nu), alpha, beta, x)
    pref = jp_prefactor(nu, alpha)
    if pref == 0.0:
        return EvalResult(0.0, 0.0)
    if x == 1.0:
        v = pref * rgamma(alpha + 1.0)
        return EvalResult(v, 4 * EPS * abs(v))
    r = rf21(-nu, nu + alpha + beta + 1.0, alpha + 1.0, 0.5 * (1.0 - x), config)
    v = pref * r.value
    return EvalResult(v, abs(pref) * r.abs_err + 4 * EPS * abs(v))


def jp_dx(nu: float, alpha: float, beta: float = 0.0, x: float = 1.0, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """d/dx JP(nu, alpha, beta; x), from the 2F1 derivative and dz/dx = -1/2."""
    _check_jp(nu, alpha, beta, x)
    pref = jp_prefactor(nu, alpha)
    a, b = -nu, nu + alpha + beta + 1.0
    if pref == 0.0 or a * b == 0.0:
        return EvalResult(0.0, 0.0)
    r = rf21(a + 1.0, b + 1.0, alpha + 2.0, 0.5 * (1.0 - x), config)
    f = -0.5 * pref * a * b
    v = f * r.value
    return EvalResult(v, abs(f) * r.abs_err + 4 * EPS * abs(v))


def jp_jet(nu: float, alpha: float, beta: float, x: float, order: int,
           config: KernelConfig = DEFAULT_CONFIG, normalized: bool = True) -> Jet:
    """Jet in x of JP(nu, alpha, beta; x).

    With ``normalized=False`` the constant Gamma-ratio prefactor is dropped,
    leaving the jet of F~(-nu, nu+alpha+beta+1; alpha+1; (1-x)/2); this is
    the form to use when the prefactor vanishes identically.
    """
    _check_jp(nu, alpha, beta, x)
    pref = jp_prefactor(nu, alpha) if normalized else 1.0
    if pref == 0.0:
        return Jet([0.0] * (order + 1))
    j = rf21_jet(-nu, nu + alpha + beta + 1.0, alpha + 1.0, 0.5 * (1.0 - x), order, config)
    return Jet([pref * v * (-0.5) ** k for k, v in enumerate(j.d)])
