import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qsf.errors import DivergenceError, DomainError, NonConvergence, PoleError
from qsf.sfkernel import (DEFAULT_CONFIG, EvalResult, KernelConfig, bessel, bessel_dx, gamma_fn, gauss_2f1, jp,
                          jp_dx, kummer_m, kummer_u, legendre, legendre_dx, whittaker, whittaker_dx)
from qsf.sfkernel import hypergeometric as hg
from qsf.sfkernel.core import hyper_series, rgamma


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def richardson(f, x, h=None):
    h = h or 1e-3 * max(1.0, abs(x))
    d = lambda s: (f(x + s) - f(x - s)) / (2 * s)  # noqa: E731
    return (4 * d(h / 2) - d(h)) / 3


# --- records ---------------------------------------------------------------


def test_evalresult_rejects_nan_and_bad_error():
    with pytest.raises(NonConvergence):
        EvalResult(math.nan, 0.0)
    with pytest.raises(ValueError):
        EvalResult(1.0, -1.0)
    assert EvalResult(2.0, 1e-16).rel_err == pytest.approx(5e-17)


@pytest.mark.parametrize("kw", [{"series_tol": 0.0}, {"series_tol": 1e-3}, {"max_terms": 10}])
def test_kernel_config_invariants(kw):
    with pytest.raises(ValueError):
        KernelConfig(**kw)


# --- gamma -----------------------------------------------------------------


def test_gamma_trivial_values():
    assert gamma_fn(1.0).value == 1.0
    assert gamma_fn(0.5).value == pytest.approx(1.7724538509055160, rel=1e-15)


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        gamma_fn(x)


def test_gamma_overflow():
    with pytest.raises(OverflowError):
        gamma_fn(200.0)


@given(st.floats(0.05, 40.0))
def test_gamma_recurrence(x):
    assert rel(gamma_fn(x + 1).value, x * gamma_fn(x).value) < 1e-13


# --- Bessel ----------------------------------------------------------------


def test_bessel_trivial_values():
    assert bessel("J", 0, 0.0).value == 1.0
    assert bessel("I", 1, 0.0).value == 0.0
    assert bessel_dx("J", 0, 0.0).value == 0.0


def test_bessel_first_zero_of_j0():
    # first zero of J0, from mpmath.besseljzero(0, 1)
    assert abs(bessel("J", 0, 2.404825557695773).value) < 1e-12


@pytest.mark.parametrize("kind,x", [("Y", 0.0), ("K", -1.0), ("J", -0.5), ("I", -2.0)])
def test_bessel_domain(kind, x):
    with pytest.raises(DomainError):
        bessel(kind, 0, x)


def test_modified_bessel_wronskian():
    for x in np.linspace(0.1, 20.0, 60):
        w = bessel("I", 0, x).value * bessel("K", 1, x).value + bessel("I", 1, x).value * bessel("K", 0, x).value
        assert rel(w, 1 / x) < 1e-10


# --- confluent -------------------------------------------------------------


def test_kummer_trivial_values():
    assert kummer_m(0.3, 1.7, 0.0).value == 1.0
    assert kummer_m(1.0, 1.0, 1.0).value == pytest.approx(math.e, rel=1e-15)
    assert kummer_m(-1.0, 1.0, 0.5).value == pytest.approx(0.5, rel=1e-15)
    for z in (0.2, 3.0, 40.0):
        assert kummer_u(0.0, 1.0, z).value == pytest.approx(1.0, rel=1e-15)


def test_kummer_errors():
    with pytest.raises(PoleError):
        kummer_m(1.0, -2.0, 1.0)
    with pytest.raises(DomainError):
        kummer_u(1.0, 1.0, 0.0)


def test_whittaker_collapse():
    assert whittaker("M", 0.5, 1.0).value == pytest.approx(0.6065306597126334, rel=1e-15)


@given(st.floats(-10, 10), st.floats(0.2, 30))
@settings(max_examples=60, deadline=None)
def test_kummer_u_recurrence(a, z):
    # U(a-1) + (b - 2a - z) U(a) + a(a-b+1) U(a+1) = 0 at b = 1
    u0, u1, u2 = (kummer_u(a + d, 1.0, z).value for d in (-1.0, 0.0, 1.0))
    terms = (u0, (1 - 2 * a - z) * u1, a * a * u2)
    assert abs(sum(terms)) <= 1e-9 * sum(abs(t) for t in terms)


# --- 2F1 -------------------------------------------------------------------


def test_2f1_trivial_values():
    assert gauss_2f1(0.3, 1.2, 2.5, 0.0).value == 1.0
    assert gauss_2f1(1.0, 2.0, 2.0, 0.5).value == pytest.approx(2.0, rel=1e-14)
    assert gauss_2f1(-1.0, 3.0, 2.0, 0.25).value == pytest.approx(0.625, rel=1e-15)


def test_2f1_errors():
    with pytest.raises(PoleError):
        gauss_2f1(0.5, 0.5, -2.0, 0.3)
    with pytest.raises(DivergenceError):
        gauss_2f1(0.5, 0.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        gauss_2f1(0.5, 0.5, 1.0, 1.5)


def test_2f1_gauss_sum_at_one():
    a, b, c = 0.3, 0.4, 2.1
    want = gamma_fn(c).value * gamma_fn(c - a - b).value / (gamma_fn(c - a).value * gamma_fn(c - b).value)
    assert rel(gauss_2f1(a, b, c, 1.0).value, want) < 1e-13


params = st.floats(-3.0, 3.0)


@given(params, params, st.floats(0.1, 4.0), st.floats(0.01, 0.5))
@settings(max_examples=150, deadline=None)
def test_euler_transformation(a, b, c, z):
    f = gauss_2f1(a, b, c, z).value
    assume(abs(f) > 1e-6)
    g = (1 - z) ** (c - a - b) * gauss_2f1(c - a, c - b, c, z).value
    assert abs(f - g) <= 1e-10 * abs(f)


@given(params, params, st.floats(0.1, 4.0), st.floats(0.45, 0.55))
@settings(max_examples=150, deadline=None)
def test_series_connection_seam(a, b, c, z):
    direct = rgamma(c) * hyper_series((a, b), (c,), z).value
    m = c - a - b
    k = round(m)
    if abs(m - k) < 1e-12:
        if k >= 0:
            conn = hg._log_connection(a, b, k, z, DEFAULT_CONFIG).value
        else:
            conn = (1 - z) ** k * hg._log_connection(c - a, c - b, -k, z, DEFAULT_CONFIG).value
    else:
        assume(abs(m - k) > 1e-3)
        conn = hg._generic_connection(a, b, c, z, DEFAULT_CONFIG).value
    assume(abs(direct) > 1e-6)
    assert abs(direct - conn) <= 1e-10 * abs(direct)


@pytest.mark.parametrize("a,b", [(0.5, 0.5), (-0.3, 1.3), (2.25, -1.25), (0.1, 0.9)])
def test_seam_log_case(a, b):
    # c - a - b = 0 exactly, the JP / Legendre case
    c = a + b
    for z in (0.45, 0.5, 0.55):
        direct = rgamma(c) * hyper_series((a, b), (c,), z).value
        conn = hg._log_connection(a, b, 0, z, DEFAULT_CONFIG).value
        assert rel(conn, direct) < 1e-10


# --- JP --------------------------------------------------------------------


def jacobi_recurrence(n, alpha, x):
    # classical three-term recurrence for P_n^(alpha, 0)
    p0, p1 = 1.0, 0.5 * (alpha + 2) * x + 0.5 * alpha
    if n == 0:
        return p0
    for k in range(2, n + 1):
        a = k + alpha
        c = 2 * k + alpha
        p0, p1 = p1, ((c - 1) * (c * (c - 2) * x + alpha * alpha) * p1 - 2 * (a - 1) * (k - 1) * c * p0) / (
            2 * k * a * (c - 2))
    return p1


def test_jp_trivial_values():
    assert jp(0.0, 0.7, 0.0, 0.3).value == 1.0
    assert jp(1.0, 0.0, 0.0, 0.3).value == pytest.approx(0.3, rel=1e-15)
    for x in (-0.4, 0.2, 0.9):
        assert jp_dx(1.0, 0.0, 0.0, x).value == pytest.approx(1.0, rel=1e-15)


@pytest.mark.parametrize("n", range(0, 11))
@pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 1.0, 2.5])
def test_jp_matches_recurrence(n, alpha):
    for x in np.linspace(-0.9, 1.0, 12):
        want = jacobi_recurrence(n, alpha, x)
        got = jp(float(n), alpha, 0.0, float(x)).value
        assert abs(got - want) <= 1e-10 * max(abs(want), 1e-3 * abs(jp(float(n), alpha, 0.0, 1.0).value))


def test_jp_at_one():
    for n in range(5):
        want = gamma_fn(n + 1.5).value / (gamma_fn(n + 1.0).value * gamma_fn(1.5).value)
        assert rel(jp(float(n), 0.5, 0.0, 1.0).value, want) < 1e-14


# --- Legendre --------------------------------------------------------------


def test_legendre_trivial_values():
    for x in (-0.7, 0.0, 0.4):
        assert legendre("P", 0.0, x).value == 1.0
    assert legendre("Q", 0.0, 0.5).value == pytest.approx(0.5493061443340549, rel=1e-15)


@pytest.mark.parametrize("x", [1.0, -1.0, 1.5])
def test_legendre_domain(x):
    with pytest.raises(DomainError):
        legendre("P", 0.5, x)


@given(st.floats(-8, 8), st.floats(-0.95, 0.95))
@settings(max_examples=80, deadline=None)
def test_legendre_wronskian(nu, x):
    # P Q' - P' Q = 1/(1 - x^2) away from the poles of Q at negative integers
    assume(nu > -0.5 or abs(nu - round(nu)) > 1e-6)
    P, Q = legendre("P", nu, x).value, legendre("Q", nu, x).value
    dP, dQ = legendre_dx("P", nu, x).value, legendre_dx("Q", nu, x).value
    w = (P * dQ - dP * Q) * (1 - x * x)
    assert abs(w - 1.0) <= 1e-9 * max(1.0, abs(P * dQ * (1 - x * x)), abs(dP * Q * (1 - x * x)))


# --- derivatives against Richardson ---------------------------------------


def _d_dx_cases():
    rng = np.random.default_rng(7)
    for _ in range(8):
        x = float(rng.uniform(0.3, 20.0))
        for kind in "JYIK":
            for order in (0, 1):
                yield (f"bessel {kind}{order}", lambda t, k=kind, o=order: bessel(k, o, t).value,
                       lambda t, k=kind, o=order: bessel_dx(k, o, t).value, x)
    for _ in range(8):
        kappa, z = float(rng.uniform(-3, 3)), float(rng.uniform(0.3, 15))
        for kind in "MW":
            yield (f"whittaker {kind}", lambda t, k=kind, c=kappa: whittaker(k, c, t).value,
                   lambda t, k=kind, c=kappa: whittaker_dx(k, c, t).value, z)
    for _ in range(8):
        nu, alpha, x = float(rng.uniform(0, 6)), float(rng.uniform(-0.5, 3)), float(rng.uniform(-0.8, 0.8))
        yield ("jp", lambda t, n=nu, a=alpha: jp(n, a, 0.0, t).value,
               lambda t, n=nu, a=alpha: jp_dx(n, a, 0.0, t).value, x)
    for _ in range(8):
        nu, x = float(rng.uniform(-5, 8)), float(rng.uniform(-0.85, 0.85))
        for kind in "PQ":
            yield (f"legendre {kind}", lambda t, k=kind, n=nu: legendre(k, n, t).value,
                   lambda t, k=kind, n=nu: legendre_dx(k, n, t).value, x)


@pytest.mark.parametrize("name,f,df,x", list(_d_dx_cases()))
def test_d_dx_matches_richardson(name, f, df, x):
    want = richardson(f, x)
    got = df(x)
    scale = max(abs(want), 1e-6 * abs(f(x)), 1e-300)
    assert abs(got - want) <= 1e-7 * scale, name
