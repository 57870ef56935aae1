"""Solutions and orthogonality structure of the fourth-order Jacobi-type equation

    (1-x^2)^2 y'''' - 2(1-x^2)((a+4)x + a) y'''
      + (1+x)((T + a^2 + 9a + 14) x + (-T + a^2 - 3a - 10)) y''
      + ((aT + 2T + 2a^2 + 6a + 4) x + (aT + 2a^2 + 6a + 4)) y' = lambda y,

a = alpha, T = 4A 2^alpha, on -1 < x < 1. It is the expansion of
((1-x)^(a+2)(1+x)^2 y'')'' - ((1-x)^(a+1)((T+2a+2)x + T+2a+6) y')' = lambda (1-x)^a y
after division by (1-x)^a.

Solutions come in two kinds. First-kind solutions are JP(rho, alpha, 0; x)
combinations; at the eigenvalues lambda_n they are polynomials (S1). The
second kind is (1-x)^(-alpha) times a JP(-1-rho, -alpha, 0; x) combination
(S2 and the J3, J4 solutions). The power (x-1)^(-alpha) is replaced by the
real (1-x)^(-alpha); that is a constant phase and leaves a solution.
The constant Gamma(nu+a+1)/Gamma(nu+1) in front of JP is kept unless it
vanishes or is infinite (integer degree -1-n in S2, for instance); then it
is dropped so the solution does not degenerate to 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special as _sp

from .errors import ComplexXiError, DomainError, NonRealRootError, PoleError, QuadratureError
from .jets import Jet, polynomial, power
from .sfkernel.core import DEFAULT_CONFIG, EPS, EvalResult, KernelConfig
from .sfkernel.hypergeometric import jp_jet, jp_prefactor

# roots (or xi) closer than this are reported as degenerate
DEGENERATE_TOL = 1e-8


@dataclass(frozen=True)
class JacobiTypeParams:
    alpha: float
    A: float
    lam: float = 0.0

    def __post_init__(self):
        _check_params(self.alpha, self.A)
        if not math.isfinite(self.lam):
            raise DomainError("lambda must be finite")


def _check_params(alpha, A):
    if not (math.isfinite(alpha) and alpha > -1.0):
        raise DomainError(f"alpha must be > -1, got {alpha!r}")
    if not (math.isfinite(A) and A > 0.0):
        raise DomainError(f"A must be > 0, got {A!r}")


def _t(alpha, A):
    return 4.0 * A * 2.0**alpha


def eigenvalue(n: int, alpha: float, A: float) -> float:
    """lambda_n = n (n + alpha + 1)(n^2 + (alpha+1) n + 4A 2^alpha + alpha)."""
    _check_params(alpha, A)
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    return n * (n + alpha + 1) * (n * n + (alpha + 1) * n + _t(alpha, A) + alpha)


def quartic(rho, alpha: float, A: float, lam: float):
    """rho (rho + alpha + 1)(rho^2 + (alpha+1) rho + 4A 2^alpha + alpha) - lambda."""
    return rho * (rho + alpha + 1) * (rho * rho + (alpha + 1) * rho + _t(alpha, A) + alpha) - lam


@dataclass(frozen=True)
class QuarticRoots:
    """xi and the four roots rho_1..rho_4, each stored as a (re, im) pair."""

    xi: float
    rho: tuple

    def root(self, r: int) -> complex:
        re, im = self.rho[r - 1]
        return complex(re, im)

    def is_real(self, r: int) -> bool:
        return self.rho[r - 1][1] == 0.0

    def real_root(self, r: int) -> float:
        if not self.is_real(r):
            raise NonRealRootError(f"rho_{r} = {self.root(r)} is not real")
        return self.rho[r - 1][0]

    @property
    def degenerate(self) -> bool:
        """True when rho_1 and rho_3 coincide (xi = 0) or any two roots merge."""
        if abs(self.xi) < DEGENERATE_TOL:
            return True
        rs = [self.root(r) for r in range(1, 5)]
        return any(abs(rs[i] - rs[j]) < DEGENERATE_TOL * max(1.0, abs(rs[i]))
                   for i in range(4) for j in range(i + 1, 4))


def quartic_roots(alpha: float, A: float, lam: float) -> QuarticRoots:
    """xi and the four quartic roots in closed form.

    Raises
    ------
    ComplexXiError
        When (alpha + 4A 2^alpha)^2 + 4 lambda < 0.
    """
    _check_params(alpha, A)
    T = _t(alpha, A)
    r = alpha * alpha + 8 * alpha * A * 2.0**alpha + 16 * A * A * 2.0 ** (2 * alpha) + 4 * lam
    if r < 0.0:
        raise ComplexXiError(f"xi radicand {r!r} is negative")
    xi = math.sqrt(r)
    out = []
    for s_xi in (1.0, -1.0):
        inner = alpha * alpha + 1 - 2 * T + 2 * s_xi * xi
        for s in (1.0, -1.0):
            if inner >= 0.0:
                out.append((0.5 * (-alpha - 1 + s * math.sqrt(inner)), 0.0))
            else:
                out.append((0.5 * (-alpha - 1), 0.5 * s * math.sqrt(-inner)))
    return QuarticRoots(xi, tuple(out))


def vieta_residuals(roots: QuarticRoots, alpha: float, lam: float) -> tuple[float, float]:
    """(sum rho + 2(alpha+1), prod rho + lambda); both vanish for exact roots."""
    rs = [roots.root(r) for r in range(1, 5)]
    s = sum(rs) + 2 * (alpha + 1)
    p = rs[0] * rs[1] * rs[2] * rs[3] + lam
    return abs(s), abs(p)


# ---------------------------------------------------------------- solutions


def _check_x(x, closed=False):
    ok = -1.0 <= x <= 1.0 if closed else -1.0 < x < 1.0
    if not (math.isfinite(x) and ok):
        raise DomainError(f"x = {x!r} outside the Jacobi-type domain")


def _first_kind_jet(nu, alpha, coef, sign, x, order, config) -> Jet:
    # coef * JP(nu) + sign * (1 - x) JP'(nu)
    try:
        normalized = jp_prefactor(nu, alpha) != 0.0
    except PoleError:
        normalized = False
    j = jp_jet(nu, alpha, 0.0, x, order + 1, config, normalized=normalized)
    one_minus_x = polynomial([1.0, -1.0], x, order)
    return j.truncate(order) * coef + one_minus_x * j.derivative() * sign


def _second_kind_jet(nu, alpha, coef, sign, x, order, config) -> Jet:
    # (1 - x)^(-alpha) [coef * F + sign * (1 - x) F'],  F = JP(-1-nu, -alpha, 0; x);
    # the Gamma-ratio prefactor of F is dropped when it vanishes (integer nu)
    inner = _first_kind_jet(-1.0 - nu, -alpha, coef, sign, x, order, config)
    return power(1.0 - x, -1.0, -alpha, order) * inner


def _as_result(jet: Jet) -> EvalResult:
    v = float(jet[0])
    return EvalResult(v, 64 * EPS * max(abs(v), 1e-300))


def _s1_coef(n, alpha, A):
    return n * alpha + 2 * A * 2.0**alpha + n + n * n


def _s2_coef(n, alpha, A):
    return (n + 1) * alpha + A * 2.0 ** (alpha + 1) + n + n * n


def _check_n(n):
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")


def s1_jet(n: int, alpha: float, A: float, x: float, order: int = 4,
           config: KernelConfig = DEFAULT_CONFIG) -> Jet:
    _check_n(n)
    _check_params(alpha, A)
    _check_x(x, closed=True)
    return _first_kind_jet(float(n), alpha, _s1_coef(n, alpha, A), 1.0, x, order, config)


def solution_S1(n: int, alpha: float, A: float, x: float, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """S_{1,n}(x) = (n alpha + 2A 2^alpha + n + n^2) JP(n, alpha, 0; x) + (1 - x) JP'(n, alpha, 0; x).

    A polynomial of degree n solving the equation at lambda = eigenvalue(n, alpha, A).

    Examples
    --------
    >>> solution_S1(1, 0.0, 1.0, 0.5).value
    2.5
    """
    return _as_result(s1_jet(n, alpha, A, x, 0, config))


def s2_jet(n: int, alpha: float, A: float, x: float, order: int = 4,
           config: KernelConfig = DEFAULT_CONFIG) -> Jet:
    _check_n(n)
    _check_params(alpha, A)
    _check_x(x)
    return _second_kind_jet(float(n), alpha, _s2_coef(n, alpha, A), 1.0, x, order, config)


def solution_S2(n: int, alpha: float, A: float, x: float, config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """Second solution at lambda = eigenvalue(n, alpha, A).

    (1-x)^(-alpha) [C F(x) + (1 - x) F'(x)] with C = (n+1) alpha + A 2^(alpha+1) + n + n^2
    and F(x) = 2F1(1+n, -n-alpha; 1-alpha; (1-x)/2)/Gamma(1-alpha).
    """
    return _as_result(s2_jet(n, alpha, A, x, 0, config))


def _root_for(r, roots: QuarticRoots):
    return roots.real_root(1 if r in (1, 3) else 3)


def jcal_jet(r: int, alpha: float, A: float, lam: float, x: float, order: int = 4,
             config: KernelConfig = DEFAULT_CONFIG) -> Jet:
    if r not in (1, 2, 3, 4):
        raise DomainError(f"solution index must be 1..4, got {r!r}")
    _check_params(alpha, A)
    _check_x(x)
    roots = quartic_roots(alpha, A, lam)
    rho = _root_for(r, roots)
    xi = roots.xi
    if r == 1:
        return _first_kind_jet(rho, alpha, 0.5 * (alpha - xi), -1.0, x, order, config)
    if r == 2:
        return _first_kind_jet(rho, alpha, 0.5 * (alpha + xi), -1.0, x, order, config)
    if r == 3:
        return _second_kind_jet(rho, alpha, -0.5 * (alpha + xi), -1.0, x, order, config)
    return _second_kind_jet(rho, alpha, -0.5 * (alpha - xi), -1.0, x, order, config)


def solution_Jcal(r: int, alpha: float, A: float, lam: float, x: float,
                  config: KernelConfig = DEFAULT_CONFIG) -> EvalResult:
    """Value of the general-lambda solution J_r (r = 1..4) at x.

    J1, J3 use the root rho_1 and J2, J4 use rho_3.

    Raises
    ------
    NonRealRootError
        When the root needed by r is complex.
    ComplexXiError
        When xi is complex.
    """
    return _as_result(jcal_jet(r, alpha, A, lam, x, 0, config))


def real_solution_indices(alpha: float, A: float, lam: float) -> list[int]:
    """Indices r whose root is real, so that J_r is available in real arithmetic."""
    roots = quartic_roots(alpha, A, lam)
    return [r for r in (1, 2, 3, 4) if roots.is_real(1 if r in (1, 3) else 3)]


def basis_defect(alpha: float, A: float, lam: float) -> str | None:
    """Why J_1..J_4 cannot form a real fundamental system here, or None.

    Three things break the basis: a non-real root (the solution leaves real
    arithmetic), rho_1 = rho_3 (J_1 and J_2 coincide), and integer alpha,
    where 2F1(.; 1 - alpha; .)/Gamma(1 - alpha) reduces to a multiple of the
    first-kind function so that J_3 ~ J_1 and J_4 ~ J_2.
    """
    roots = quartic_roots(alpha, A, lam)
    missing = [r for r in (1, 2, 3, 4) if r not in real_solution_indices(alpha, A, lam)]
    if missing:
        return f"non-real root for solutions {missing}"
    if roots.degenerate:
        return "coincident roots"
    if abs(alpha - round(alpha)) < DEGENERATE_TOL:
        return "integer alpha: second-kind solutions reduce to first-kind ones"
    return None


# ------------------------------------------------------------ orthogonality


@dataclass(frozen=True)
class JacobiMeasure:
    """The Stieltjes measure: mass 1/2 at x = -1 plus (A/2)(1-x)^alpha dx on (-1, 1)."""

    alpha: float
    A: float

    def __post_init__(self):
        _check_params(self.alpha, self.A)


def mu_hat(x: float, measure: JacobiMeasure) -> float:
    """Distribution function of the measure (jump of 1/2 at x = -1)."""
    a, A = measure.alpha, measure.A
    if x < -1.0:
        return -0.5
    if x <= 1.0:
        return A / (2 * (a + 1)) * (2.0 ** (a + 1) - (1.0 - x) ** (a + 1))
    return A * 2.0 ** (a + 1) / (2 * (a + 1))


@lru_cache(maxsize=128)
def gauss_jacobi(n: int, alpha: float):
    """Nodes and weights for weight (1-x)^alpha on [-1, 1], exact to degree 2n-1."""
    x, w = _sp.roots_jacobi(n, alpha, 0.0)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def inner_product(f, g, measure: JacobiMeasure, degree_hint: int) -> float:
    """(1/2) f(-1) g(-1) + (A/2) int_{-1}^{1} f g (1-x)^alpha dx.

    The integral uses Gauss-Jacobi quadrature with enough nodes to be exact
    when f g is a polynomial of degree at most 2 * degree_hint.
    """
    n = math.ceil((2 * degree_hint + 1) / 2) + 2
    x, w = gauss_jacobi(n, float(measure.alpha))
    vals = np.array([f(t) * g(t) for t in x], dtype=float)
    if not np.all(np.isfinite(vals)):
        raise QuadratureError("non-finite integrand sample")
    end = f(-1.0) * g(-1.0)
    if not math.isfinite(end):
        raise QuadratureError("non-finite value at x = -1")
    return 0.5 * end + 0.5 * measure.A * float(np.dot(w, vals))
