import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsf import bessel_type as bt
from qsf import jacobi_type as jt
from qsf import laguerre_type as lt
from qsf import legendre_type as lg
from qsf.errors import ComplexXiError, DomainError, NearSingularParameter, NonRealRootError, QuadratureError
from qsf.verifier import OperatorSpec, residual


def richardson(f, x, h):
    d = lambda s: (f(x + s) - f(x - s)) / (2 * s)  # noqa: E731
    return (4 * d(h / 2) - d(h)) / 3


def assert_derivs_consistent(derivs, x, h, tol=1e-7):
    """Each entry of derivs(x) against a Richardson difference of the entry below it."""
    d = derivs(x)
    for k in range(1, len(d)):
        fd = richardson(lambda t, k=k: derivs(t)[k - 1], x, h)
        assert abs(d[k] - fd) <= tol * max(abs(d[k]), 1e-6 * max(map(abs, d))), (k, d[k], fd)


# --- Bessel type -----------------------------------------------------------


def test_lambda_cap_examples():
    assert bt.lambda_cap(0.0, 3.0) == 0.0
    assert bt.lambda_cap(1.0, 1.0) == 9.0
    assert bt.lambda_cap(-1.7, 0.3) == bt.lambda_cap(1.7, 0.3)
    with pytest.raises(DomainError):
        bt.lambda_cap(1.0, 0.0)


@pytest.mark.parametrize("lam", [0.0, 0.3, 1.0, 4.0])
@pytest.mark.parametrize("M", [0.5, 2.0])
def test_bessel_type_closed_half_line(lam, M):
    p = bt.BesselTypeParams(M, lam)
    assert bt.solution("J", p, 0.0).value == pytest.approx(1.0, abs=1e-14)
    assert bt.solution("I", p, 0.0).value == pytest.approx(1.0, abs=1e-14)
    # and continuity from the right
    assert bt.solution("J", p, 1e-6).value == pytest.approx(1.0, abs=1e-9)


def test_bessel_type_small_lambda_is_continuous():
    p0, p1 = bt.BesselTypeParams(1.0, 0.0), bt.BesselTypeParams(1.0, 1e-9)
    for x in (0.5, 3.0):
        assert bt.solution("J", p1, x).value == pytest.approx(bt.solution("J", p0, x).value, rel=1e-12)


def test_bessel_type_domain():
    p = bt.BesselTypeParams(1.0, 1.0)
    with pytest.raises(DomainError):
        bt.solution("K", p, 0.0)
    with pytest.raises(DomainError):
        bt.solution("J", p, -1.0)
    with pytest.raises(DomainError):
        bt.solution("Y", bt.BesselTypeParams(1.0, 0.0), 1.0)
    with pytest.raises(DomainError):
        bt.BesselTypeParams(-1.0, 1.0)


def test_bessel_type_order_zero_deriv_is_value():
    p = bt.BesselTypeParams(1.0, 1.0)
    assert bt.solution_derivs("J", p, 1.3, 0) == pytest.approx([bt.solution("J", p, 1.3).value], rel=1e-14)


@pytest.mark.parametrize("kind", bt.KINDS)
@pytest.mark.parametrize("x", [0.4, 2.0, 7.5])
def test_bessel_type_derivs_match_differences(kind, x):
    p = bt.BesselTypeParams(1.0, 1.0)
    assert_derivs_consistent(lambda t: bt.solution_derivs(kind, p, t, 4), x, min(1e-2, x / 100))


@pytest.mark.parametrize("kind", bt.KINDS)
@pytest.mark.parametrize("form", ["frobenius", "lagrange"])
def test_bessel_type_residual(kind, form):
    p = bt.BesselTypeParams(0.7, 1.3)
    spec = OperatorSpec("bessel", form, {"M": p.M})
    for x in np.linspace(0.2, 10, 9):
        r = residual(spec, lambda t: bt.solution_derivs(kind, p, t, 4), p.Lambda, float(x))
        assert r.passed, (x, r.rel_residual)


# --- Laguerre type ---------------------------------------------------------


def test_gamma_la_examples():
    assert lt.gamma_la(0.0, 1.0) == 3.0
    assert lt.gamma_la(-(4 * 0.25 + 4 * 0.5 + 1) / 4, 0.5) == 0.0
    assert lt.gamma_la(2.0, 0.5) == pytest.approx(math.sqrt(12.0), rel=1e-15)
    with pytest.raises(DomainError):
        lt.gamma_la(-10.0, 1.0)


def test_laguerre_branch_swap():
    # solution 1 with +Gamma is the formula at -Gamma for solution 2
    p = lt.LaguerreTypeParams(0.8, 1.5)
    g = p.gamma
    assert lt.solution_L(1, p, 1.2).value == lt.formula(g, "M", p.A, 1.2).value
    assert lt.solution_L(2, p, 1.2).value == lt.formula(-g, "M", p.A, 1.2).value
    assert lt.solution_L(4, p, 1.2).value == lt.formula(-g, "U", p.A, 1.2).value


def test_laguerre_domain():
    p = lt.LaguerreTypeParams(1.0, 0.0)
    for x in (0.0, -1.0):
        with pytest.raises(DomainError):
            lt.solution_L(3, p, x)
    with pytest.raises(DomainError):
        lt.solution_L(5, p, 1.0)
    with pytest.raises(OverflowError):
        lt.solution_L(1, p, 800.0)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("form", ["frobenius", "lagrange"])
def test_laguerre_residual(r, form):
    p = lt.LaguerreTypeParams(0.6, 2.2)
    spec = OperatorSpec("laguerre", form, {"A": p.A})
    for x in np.linspace(0.5, 5, 7):
        rep = residual(spec, lambda t: lt.solution_L_derivs(r, p, t, 4), p.lam, float(x))
        assert rep.passed, (x, rep.rel_residual)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_laguerre_derivs_match_differences(r):
    p = lt.LaguerreTypeParams(1.0, 1.0)
    assert_derivs_consistent(lambda t: lt.solution_L_derivs(r, p, t, 4), 1.7, 1e-2)


def test_laguerre_basis_defect():
    assert lt.basis_defect(lt.LaguerreTypeParams(1.0, 1.0)) is None
    assert "L_4 ~ L_2" in lt.basis_defect(lt.LaguerreTypeParams(1.0, 0.0))
    assert "Gamma = 0" in lt.basis_defect(lt.LaguerreTypeParams(0.5, -1.0))


# --- Legendre type ---------------------------------------------------------


def test_gamma_omega_examples():
    assert lg.gamma_omega("+", 0.0, 1.0) == (1.0, 1.0)
    with pytest.raises(DomainError, match="Omega"):
        lg.gamma_omega("-", 0.0, 1.0)
    g, om = lg.gamma_omega("+", 3.0, 1.0)
    assert g == 2.0
    assert om == pytest.approx(math.sqrt(5.0), rel=1e-15)
    with pytest.raises(DomainError, match="Gamma"):
        lg.gamma_omega("+", -5.0, 1.0)


@pytest.mark.parametrize("sign,x", [("+", 0.3), ("-", -0.7)])
def test_bracket_zero_on_singular_lambda(sign, x):
    assert abs(lg.bracket_factor(sign, -8.0, 1.0, x)) < 1e-10


def test_bracket_by_substitution():
    # lambda = 0, A = 1: Gamma = Omega = 1, bracket = -(0 + 3 - 4 + 4) + 1 - 3 + 1 at x = 0
    assert lg.bracket_factor("+", 0.0, 1.0, 0.0) == pytest.approx(-4.0, abs=1e-14)


def test_legendre_singular_lambda_is_removable():
    A = 0.1
    p0 = lg.LegendreTypeParams(A, -(4 * A + 4 * A * A))
    v0 = lg.solution_Le(1, p0, 0.3).value
    vals = [lg.solution_Le(1, lg.LegendreTypeParams(A, p0.lam + h), 0.3).value for h in (1e-3, 1e-4, 1e-5)]
    diffs = [abs(v - v0) for v in vals]
    assert diffs[2] < 1e-6 * max(1.0, abs(v0))
    assert diffs[0] > diffs[1] > diffs[2]
    with pytest.raises(NearSingularParameter):
        lg.solution_Le(1, p0, 0.3, limit=False)


@pytest.mark.parametrize("r", [1, 3])
def test_legendre_reflection(r):
    # the operator is even in x, so Le_r(-x) is again a solution
    p = lg.LegendreTypeParams(1.0, 1.0)
    spec = OperatorSpec("legendre", "frobenius", {"A": p.A})
    flip = lambda t: [(-1) ** k * v for k, v in enumerate(lg.solution_Le_derivs(r, p, -t, 4))]  # noqa: E731
    for x in (-0.6, 0.1, 0.7):
        assert residual(spec, flip, p.lam, x).passed


def test_legendre_admissible():
    p = lg.LegendreTypeParams(1.0, 1.0)
    assert lg.admissible(1, p) and lg.admissible(3, p)
    assert not lg.admissible(2, p)
    assert lg.basis_defect(p) == "radicand negative for solutions [2, 4]"
    assert lg.basis_defect(lg.LegendreTypeParams(0.1, 0.2)) is None


def test_legendre_domain():
    p = lg.LegendreTypeParams(1.0, 1.0)
    for x in (-1.0, 1.0, 2.0):
        with pytest.raises(DomainError):
            lg.solution_Le(1, p, x)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("form", ["frobenius", "lagrange"])
def test_legendre_residual(r, form):
    p = lg.LegendreTypeParams(0.1, 0.2)
    spec = OperatorSpec("legendre", form, {"A": p.A})
    for x in np.linspace(-0.8, 0.8, 7):
        rep = residual(spec, lambda t: lg.solution_Le_derivs(r, p, t, 4), p.lam, float(x))
        assert rep.passed, (x, rep.rel_residual)


@pytest.mark.parametrize("r", [1, 3])
def test_legendre_derivs_match_differences(r):
    p = lg.LegendreTypeParams(1.0, 5.0)
    assert_derivs_consistent(lambda t: lg.solution_Le_derivs(r, p, t, 4), 0.35, 1e-3)


# --- Jacobi type -----------------------------------------------------------


def test_eigenvalue_examples():
    assert jt.eigenvalue(0, 0.3, 2.0) == 0.0
    assert jt.eigenvalue(1, 0.0, 1.0) == 12.0
    t = 4 * 2**0.5
    assert jt.eigenvalue(2, 0.5, 1.0) == pytest.approx(2 * 3.5 * (4 + 3 + t + 0.5), rel=1e-15)
    with pytest.raises(DomainError):
        jt.eigenvalue(-1, 0.0, 1.0)


def test_quartic_roots_at_zero_lambda():
    roots = jt.quartic_roots(0.0, 1.0, 0.0)
    reals = sorted(roots.root(r).real for r in range(1, 5) if roots.is_real(r))
    assert any(abs(v) < 1e-12 for v in reals)
    assert any(abs(v + 1) < 1e-12 for v in reals)


@given(st.floats(-0.9, 3.0), st.floats(0.05, 3.0), st.floats(-2.0, 50.0))
@settings(max_examples=100, deadline=None)
def test_quartic_vieta(alpha, A, lam):
    try:
        roots = jt.quartic_roots(alpha, A, lam)
    except ComplexXiError:
        return
    s, p = jt.vieta_residuals(roots, alpha, lam)
    size = 1 + abs(lam) + max(abs(roots.root(r)) for r in range(1, 5)) ** 4
    assert s <= 1e-10 * (1 + abs(alpha))
    assert p <= 1e-10 * size
    for r in range(1, 5):
        assert abs(jt.quartic(roots.root(r), alpha, A, lam)) <= 1e-9 * size


@pytest.mark.parametrize("n", [0, 1, 2, 5])
def test_eigenvalue_gives_integer_root(n):
    alpha, A = 0.5, 1.0
    roots = jt.quartic_roots(alpha, A, jt.eigenvalue(n, alpha, A))
    assert abs(roots.real_root(1) - n) < 1e-9


def test_complex_xi():
    with pytest.raises(ComplexXiError):
        jt.quartic_roots(0.0, 1.0, -100.0)


def test_s1_examples():
    for alpha, A in ((0.0, 1.0), (0.5, 2.0)):
        for x in (-0.5, 0.2, 1.0):
            assert jt.solution_S1(0, alpha, A, x).value == pytest.approx(2 * A * 2**alpha, rel=1e-14)
    assert jt.solution_S1(1, 0.0, 1.0, 0.5).value == pytest.approx(2.5, rel=1e-14)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
@pytest.mark.parametrize("alpha", [-0.5, 0.5, 1.0])
@pytest.mark.parametrize("kind", ["S1", "S2"])
def test_s_residual_at_eigenvalue(n, alpha, kind):
    A = 1.0
    lam = jt.eigenvalue(n, alpha, A)
    jet = jt.s1_jet if kind == "S1" else jt.s2_jet
    for form in ("frobenius", "lagrange"):
        spec = OperatorSpec("jacobi", form, {"alpha": alpha, "A": A})
        for x in np.linspace(-0.8, 0.8, 5):
            rep = residual(spec, lambda t: jet(n, alpha, A, t).tolist(), lam, float(x))
            assert rep.passed, (form, x, rep.rel_residual)


def test_s1_is_polynomial_of_degree_n():
    # (n+1)-th finite difference of a degree-n polynomial vanishes
    for n in (1, 2, 4):
        xs = np.linspace(-0.9, 0.9, n + 3)
        vals = np.array([jt.solution_S1(n, 0.5, 1.0, float(x)).value for x in xs])
        coeffs = np.polyfit(xs, vals, n)
        assert np.max(np.abs(np.polyval(coeffs, xs) - vals)) < 1e-10 * np.max(np.abs(vals))
        assert abs(np.diff(vals, n + 1)).max() < 1e-9 * np.max(np.abs(vals))


def test_jcal_one_proportional_to_s1():
    alpha, A, n = 0.5, 1.0, 2
    lam = jt.eigenvalue(n, alpha, A)
    ratios = [jt.solution_Jcal(1, alpha, A, lam, x).value / jt.solution_S1(n, alpha, A, x).value
              for x in (-0.6, -0.1, 0.3, 0.7)]
    assert max(ratios) - min(ratios) < 1e-9 * abs(ratios[0])


def test_jcal_nonreal_root():
    with pytest.raises(NonRealRootError):
        jt.solution_Jcal(2, 0.5, 1.0, 2.0, 0.3)
    assert jt.real_solution_indices(0.5, 1.0, 2.0) == [1, 3]


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_jcal_residual_on_real_cell(r):
    alpha, A, lam = 4.5, 0.01, 7.0
    spec = OperatorSpec("jacobi", "frobenius", {"alpha": alpha, "A": A})
    for x in np.linspace(-0.6, 0.6, 5):
        rep = residual(spec, lambda t: jt.jcal_jet(r, alpha, A, lam, t).tolist(), lam, float(x))
        assert rep.passed, (x, rep.rel_residual)


def test_jacobi_basis_defect():
    assert jt.basis_defect(4.5, 0.01, 7.0) is None
    assert "non-real" in jt.basis_defect(0.5, 1.0, 2.0)
    assert "integer alpha" in jt.basis_defect(5.0, 0.01, 7.0)


def test_mu_hat():
    m = jt.JacobiMeasure(0.0, 1.0)
    assert jt.mu_hat(-2.0, m) == -0.5
    assert jt.mu_hat(-1.0, m) == 0.0
    assert jt.mu_hat(2.0, m) == 1.0


def test_inner_product_examples():
    m = jt.JacobiMeasure(0.0, 1.0)
    one = lambda x: 1.0  # noqa: E731
    assert jt.inner_product(one, one, m, 0) == pytest.approx(1.5, rel=1e-14)
    m = jt.JacobiMeasure(0.5, 1.0)
    s = lambda n: (lambda x: jt.solution_S1(n, 0.5, 1.0, x).value)  # noqa: E731
    norm = lambda n: math.sqrt(jt.inner_product(s(n), s(n), m, n))  # noqa: E731
    assert abs(jt.inner_product(s(0), s(1), m, 1)) <= 1e-9 * norm(0) * norm(1)
    assert jt.inner_product(s(2), s(2), m, 2) > 0


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 1.0, 2.5])
def test_orthogonality_table(alpha):
    A = 0.7
    m = jt.JacobiMeasure(alpha, A)
    s = [(lambda x, n=n: jt.solution_S1(n, alpha, A, x).value) for n in range(6)]
    gram = np.array([[jt.inner_product(s[i], s[j], m, max(i, j)) for j in range(6)] for i in range(6)])
    d = np.sqrt(np.diag(gram))
    off = gram / np.outer(d, d) - np.eye(6)
    assert np.max(np.abs(off)) < 1e-9


def test_quadrature_error():
    m = jt.JacobiMeasure(0.0, 1.0)
    with pytest.raises(QuadratureError):
        jt.inner_product(lambda x: 1.0 / (x + 1.0) if x > -1 else math.inf, lambda x: 1.0, m, 2)
