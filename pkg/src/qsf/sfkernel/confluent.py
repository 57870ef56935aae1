"""Kummer and Whittaker functions with second Whittaker index zero.

``kummer_u`` only supports b = 1, the logarithmic case.  It is evaluated by
whichever of four routes is accurate at (a, z):

* terminating polynomial when a is a non-positive integer;
* the divergent large-z expansion, optimally truncated, when its smallest
  term is below double precision;
* the digamma-corrected logarithmic series, when its cancellation estimate
  stays below ``_LOG_SERIES_MAX_REL``;
* otherwise the Laplace integral (a > 0), or backward recurrence in a from
  two integral values (a <= 0).
"""

from __future__ import annotations

import math
import warnings

from scipy import integrate

from ..errors import DomainError, NonConvergence, PoleError
from ..jets import Jet
from .core import (
    DEFAULT_CONFIG,
    EPS,
    EvalResult,
    KernelConfig,
    hyper_series,
    is_nonpositive_integer,
    rg_psi,
    rgamma,
)

_LOG_SERIES_MAX_REL = 1e-14


def kummer_m(a: float, b: float, z: float, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """Kummer's function M(a, b, z) = sum (a)_n/(b)_n z^n/n!.

    Negative z goes through Kummer's transformation so the summed terms keep
    one sign whenever b - a > 0; any remaining cancellation is absorbed by the
    extended-precision resummation.
    """
    if is_nonpositive_integer(b) and not (is_nonpositive_integer(a) and a > b):
        raise PoleError(f"M(a, b, z) has a pole at b = {b!r}")
    if z < 0 and not is_nonpositive_integer(a):
        s = hyper_series((b - a,), (b,), -z, config)
        e = math.exp(z)
        return EvalResult(e * s.value, e * s.abs_err + EPS * abs(e * s.value))
    s = hyper_series((a,), (b,), z, config)
    return EvalResult(s.value, s.abs_err)


def kummer_u(a: float, b: float = 1.0, z: float = 1.0, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """Tricomi's function U(a, 1, z) for z > 0.

    Raises
    ------
    DomainError
        For z <= 0, or b != 1.
    """
    if b != 1.0:
        raise DomainError("only the second parameter b = 1 is supported")
    if not z > 0.0 or not math.isfinite(z):
        raise DomainError(f"U(a, 1, z) requires z > 0, got {z!r}")
    return _u1(a, z, config)


def _u1(a: float, z: float, config: KernelConfig) -> EvalResult:
    if is_nonpositive_integer(a):
        m = int(-a)
        s = hyper_series((a,), (1.0,), z, config)
        f = (-1) ** m * math.factorial(m)
        return EvalResult(f * s.value, abs(f) * s.abs_err)
    asym = _u1_asymptotic(a, z)
    if asym is not None:
        return asym
    logs = _u1_log_series(a, z, config)
    if logs.abs_err <= _LOG_SERIES_MAX_REL * abs(logs.value):
        return logs
    if a > 0:
        return _u1_integral(a, z, config)
    return _u1_backward(a, z, config)


def _u1_asymptotic(a: float, z: float) -> EvalResult | None:
    # U(a,1,z) ~ z^-a sum (a)_k^2 / k! (-1/z)^k
    term = 1.0
    total = 1.0
    for k in range(1, 400):
        nxt = term * (a + k - 1) ** 2 / (k * -z)
        if abs(nxt) >= abs(term):
            return None
        term = nxt
        total += term
        if abs(term) <= 0.25 * EPS * abs(total):
            scale = z ** (-a)
            v = scale * total
            return EvalResult(v, abs(v) * 2 * EPS * math.sqrt(k) + abs(scale * term))
        if term == 0.0:
            break
    return None


def _u1_log_series(a: float, z: float, config: KernelConfig) -> EvalResult:
    # U(a,1,z) = -sum (a)_k/(k!)^2 z^k [ (ln z - 2 psi(k+1))/Gamma(a) + psi(a+k)/Gamma(a) ]
    rg = rgamma(a)
    lz = math.log(z)
    psi1 = -0.5772156649015329  # psi(1)
    coef = 1.0
    total = 0.0
    mag = 0.0
    for k in range(config.max_terms):
        if k > 0:
            coef *= (a + k - 1) * z / (k * k)
            psi1 += 1.0 / k
        t = -coef * (rg * (lz - 2.0 * psi1) + rg_psi(a, k))
        total += t
        mag += abs(t)
        if k > abs(a) + z and abs(t) <= config.series_tol * abs(total):
            return EvalResult(total, 4 * EPS * mag * (1.0 + abs(lz)) + abs(t))
    raise NonConvergence("log series for U(a,1,z) did not converge")


def _u1_integral(a: float, z: float, config: KernelConfig) -> EvalResult:
    # Gamma(a) U(a,1,z) = int_0^inf exp(-z t) t^(a-1) (1+t)^(-a) dt
    opts = dict(epsabs=0.0, epsrel=1e-13, limit=max(config.quad_nodes, 50))
    # quad warns when 1e-13 is out of reach; its error estimate is carried in abs_err instead
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        head, e1 = integrate.quad(lambda t: math.exp(-z * t) * (1.0 + t) ** (-a), 0.0, 1.0,
                                  weight="alg", wvar=(a - 1.0, 0.0), **opts)
        tail, e2 = integrate.quad(lambda t: math.exp(-z * t) * t ** (a - 1.0) * (1.0 + t) ** (-a),
                                  1.0, math.inf, **opts)
    rg = rgamma(a)
    v = rg * (head + tail)
    if not math.isfinite(v):
        raise NonConvergence(f"integral for U({a!r},1,{z!r}) is not finite")
    return EvalResult(v, abs(rg) * (abs(e1) + abs(e2)) + 4 * EPS * abs(v))


def _u1_backward(a: float, z: float, config: KernelConfig) -> EvalResult:
    # U(c-1) = (2c - 1 + z) U(c) - c^2 U(c+1); stable for decreasing c
    k = int(math.floor(-a)) + 1
    c = a + k
    u_hi = _u1(c + 1.0, z, config)
    u = _u1(c, z, config)
    hi, cur = u_hi.value, u.value
    rel = max(u.rel_err, u_hi.rel_err)
    for _ in range(k):
        hi, cur = cur, (2 * c - 1 + z) * cur - c * c * hi
        c -= 1.0
    return EvalResult(cur, abs(cur) * (rel + 4 * EPS * (k + 1)))


def whittaker(kind: str, kappa: float, z: float, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """Whittaker M_{kappa,0}(z) or W_{kappa,0}(z) for z > 0.

    M_{k,0}(z) = exp(-z/2) z^(1/2) M(1/2 - k, 1, z) and
    W_{k,0}(z) = exp(-z/2) z^(1/2) U(1/2 - k, 1, z).
    """
    g = _whittaker_kernel(kind, kappa, z, config)
    pre = math.exp(-0.5 * z) * math.sqrt(z)
    return EvalResult(pre * g.value, pre * g.abs_err + EPS * abs(pre * g.value))


def whittaker_dx(kind: str, kappa: float, z: float, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """d/dz of the Whittaker function with second index 0."""
    a = 0.5 - kappa
    g = _whittaker_kernel(kind, kappa, z, config)
    dg = _kummer_kernel_dz(kind, a, z, g, config)
    pre = math.exp(-0.5 * z) * math.sqrt(z)
    v = pre * (dg.value + (0.5 / z - 0.5) * g.value)
    err = pre * (dg.abs_err + abs(0.5 / z - 0.5) * g.abs_err) + 4 * EPS * abs(v)
    return EvalResult(v, err)


def _whittaker_kernel(kind, kappa, z, config):
    if kind not in ("M", "W"):
        raise DomainError(f"Whittaker kind must be 'M' or 'W', got {kind!r}")
    if not z > 0.0:
        raise DomainError(f"Whittaker functions require z > 0, got {z!r}")
    a = 0.5 - kappa
    return kummer_m(a, 1.0, z, config) if kind == "M" else kummer_u(a, 1.0, z, config)


def _kummer_kernel_dz(kind, a, z, g, config):
    if kind == "M":
        # dM(a,1,z)/dz = a M(a+1, 2, z)
        m2 = kummer_m(a + 1.0, 2.0, z, config)
        return EvalResult(a * m2.value, abs(a) * m2.abs_err)
    # z dU(a,1,z)/dz = -a U(a,1,z) + a^2 U(a+1,1,z)
    u_next = kummer_u(a + 1.0, 1.0, z, config)
    v = (-a * g.value + a * a * u_next.value) / z
    err = (abs(a) * g.abs_err + a * a * u_next.abs_err) / z + 4 * EPS * abs(v)
    return EvalResult(v, err)


def kummer_dx(kind: str, a: float, z: float, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """d/dz of M(a, 1, z) (kind 'M') or U(a, 1, z) (kind 'U')."""
    if kind not in ("M", "U"):
        raise DomainError(f"Kummer kind must be 'M' or 'U', got {kind!r}")
    g = kummer_m(a, 1.0, z, config) if kind == "M" else kummer_u(a, 1.0, z, config)
    return _kummer_kernel_dz("M" if kind == "M" else "W", a, z, g, config)


def kummer_jet(kind: str, a: float, x: float, order: int, config: KernelConfig = DEFAULT_CONFIG) -> Jet:
    """Jet of M(a,1,x) (kind 'M') or U(a,1,x) (kind 'U') at x > 0.

    Higher derivatives come from Kummer's equation differentiated k times:
    x g^(k+2) = (x - k - 1) g^(k+1) + (a + k) g^(k).
    """
    if kind not in ("M", "U"):
        raise DomainError(f"Kummer kind must be 'M' or 'U', got {kind!r}")
    if not x > 0.0:
        raise DomainError(f"Kummer jets need x > 0, got {x!r}")
    g = kummer_m(a, 1.0, x, config) if kind == "M" else kummer_u(a, 1.0, x, config)
    dg = _kummer_kernel_dz("M" if kind == "M" else "W", a, x, g, config)
    d = [g.value, dg.value]
    for k in range(order - 1):
        d.append(((x - k - 1) * d[k + 1] + (a + k) * d[k]) / x)
    return Jet(d[: order + 1])
