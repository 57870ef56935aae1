"""Numerical certification that solution formulas satisfy their equations.

Each family's operator is available in two arrangements: the expanded
(Frobenius) form sum c_k(x) y^(k), and the symmetric (Lagrange) form
(p y'')'' - (q y')' = lambda w y. The residual of a candidate solution is
|lhs - rhs| / max(|lhs|, |rhs|, floor), with all coefficient derivatives
exact.

The floor is ``scale_floor`` unless both sides vanish to working precision,
i.e. max(|lhs|, |rhs|) <= ZERO_REL * S with
S = sum |c_k| * max_j |y^(j)| + |lambda w y|. Then S itself is the floor, so
an identity 0 = 0 that only holds up to rounding (lambda = 0, a constant
solution, a zero of y) is measured against the size of the quantities that
produce the rounding rather than against an absolute 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import DomainError, QSFError
from .jets import Jet, constant, exponential, polynomial, power

FAMILIES = ("bessel", "laguerre", "legendre", "jacobi")
FORMS = ("frobenius", "lagrange")

SCALE_FLOOR = 1e-12
# both sides below this fraction of the term magnitude count as exact zeros
ZERO_REL = 1e-10
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class OperatorSpec:
    """A fourth-order operator of one family, in one of its two forms.

    ``params`` holds M for bessel, A for laguerre and legendre, and
    alpha and A for jacobi.
    """

    family: str
    form: str = "frobenius"
    params: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.form not in FORMS:
            raise DomainError(f"unknown form {self.form!r}")
        need = {"bessel": ("M",), "laguerre": ("A",), "legendre": ("A",), "jacobi": ("alpha", "A")}[self.family]
        for k in need:
            if k not in self.params:
                raise DomainError(f"{self.family} operator needs parameter {k}")
        if self.family == "bessel" and not self.params["M"] > 0:
            raise DomainError("M must be > 0")
        if self.family != "bessel" and not self.params["A"] > 0:
            raise DomainError("A must be > 0")
        if self.family == "jacobi" and not self.params["alpha"] > -1:
            raise DomainError("alpha must be > -1")

    def check_x(self, x: float):
        if self.family in ("bessel", "laguerre"):
            if not (math.isfinite(x) and x > 0.0):
                raise DomainError(f"{self.family} operator needs x > 0, got {x!r}")
        elif not (math.isfinite(x) and -1.0 < x < 1.0):
            raise DomainError(f"{self.family} operator needs -1 < x < 1, got {x!r}")

    # coefficient evaluators ---------------------------------------------

    def frobenius_coeffs(self, x: float) -> tuple[list[float], float]:
        """([c1, c2, c3, c4], w) with lhs = sum c_k y^(k) and rhs = lambda w y."""
        P = self.params
        if self.family == "bessel":
            M = P["M"]
            return [-(8 / M - 9 / x**2), -(9 / x + 8 * x / M), 2.0, x], x
        if self.family == "laguerre":
            A = P["A"]
            return [(2 * A + 2) * x - 2 * A, x * x - (2 * A + 6) * x, -2 * x * x + 4 * x, x * x], 1.0
        if self.family == "legendre":
            A = P["A"]
            s = x * x - 1
            return [8 * A * x, (4 * A + 12) * s, 8 * x * s, s * s], 1.0
        a, A = P["alpha"], P["A"]
        T = 4 * A * 2.0**a
        u = 1 - x * x
        c2 = (1 + x) * ((T + a * a + 9 * a + 14) * x + (-T + a * a - 3 * a - 10))
        c1 = (a * T + 2 * T + 2 * a * a + 6 * a + 4) * x + (a * T + 2 * a * a + 6 * a + 4)
        return [c1, c2, -2 * u * ((a + 4) * x + a), u * u], 1.0

    def lagrange_coeffs(self, x: float) -> tuple[Jet, Jet, float]:
        """(p, q, w): jets [p, p', p''] and [q, q'] and the weight value."""
        P = self.params
        if self.family == "bessel":
            M = P["M"]
            p = polynomial([0.0, 1.0], x, 2)
            q = Jet([9 / x + 8 * x / M, -9 / x**2 + 8 / M])
            return p, q, x
        if self.family == "laguerre":
            A = P["A"]
            e = exponential(-1.0, x, 2)
            p = polynomial([0.0, 0.0, 1.0], x, 2) * e
            q = polynomial([2.0, 2 * A + 2], x, 1) * e.truncate(1)
            return p, q, e[0]
        if self.family == "legendre":
            A = P["A"]
            p = polynomial([1.0, 0.0, -2.0, 0.0, 1.0], x, 2)
            q = polynomial([8 + 4 * A, 0.0, -4 * A], x, 1)
            return p, q, 1.0
        a, A = P["alpha"], P["A"]
        T = 4 * A * 2.0**a
        p = power(1 - x, -1.0, a + 2, 2) * polynomial([1.0, 2.0, 1.0], x, 2)
        q = power(1 - x, -1.0, a + 1, 1) * polynomial([T + 2 * a + 6, T + 2 * a + 2], x, 1)
        return p, q, (1 - x) ** a

    def coeffs(self, x: float) -> tuple[list[float], float]:
        """([c1, c2, c3, c4], w) of lhs = sum c_k y^(k) in this form."""
        self.check_x(x)
        if self.form == "frobenius":
            return self.frobenius_coeffs(x)
        p, q, w = self.lagrange_coeffs(x)
        # (p y'')'' - (q y')' = p y'''' + 2p' y''' + (p'' - q) y'' - q' y'
        return [-q[1], p[2] - q[0], 2 * p[1], p[0]], w

    def terms(self, d: Sequence[float], x: float) -> tuple[list[float], float]:
        """The four summands of the left-hand side, and the weight w."""
        c, w = self.coeffs(x)
        return [c[k] * d[k + 1] for k in range(4)], w

    def apply(self, d: Sequence[float], x: float) -> tuple[float, float]:
        """(lhs, w) for derivatives d = [y, y', y'', y''', y'''']."""
        t, w = self.terms(d, x)
        return t[0] + t[1] + t[2] + t[3], w


def frobenius_weight(spec: OperatorSpec, x: float) -> float:
    return spec.frobenius_coeffs(x)[1]


def lagrange_weight(spec: OperatorSpec, x: float) -> float:
    return spec.lagrange_coeffs(x)[2]


@dataclass(frozen=True)
class ResidualReport:
    family: str
    params: Mapping[str, float]
    x: float
    lhs: float
    rhs: float
    rel_residual: float
    passed: bool
    term_scale: float = math.nan


def fourth_from_second(second: Callable[[float], float], x: float, h: float | None = None,
                       lo: float = -math.inf, hi: float = math.inf) -> float:
    """y'''' from values of y'' by a 7-point central stencil plus one Richardson step.

    The stencil is sixth-order accurate; combining steps h and h/2 removes
    the leading error term. The step shrinks so the stencil stays in (lo, hi).
    """
    if h is None:
        h = _EPS ** (1 / 6) * max(1.0, abs(x))
    room = min(x - lo, hi - x) / 3.5
    h = min(h, room)
    if not h > 0:
        raise DomainError("no room for the difference stencil")

    def d2(step):
        f = [second(x + k * step) for k in (-3, -2, -1, 0, 1, 2, 3)]
        return (2 * (f[0] + f[6]) - 27 * (f[1] + f[5]) + 270 * (f[2] + f[4]) - 490 * f[3]) / (180 * step * step)

    coarse, fine = d2(h), d2(0.5 * h)
    return (64 * fine - coarse) / 63


def _domain(spec: OperatorSpec):
    return (0.0, math.inf) if spec.family in ("bessel", "laguerre") else (-1.0, 1.0)


def complete_derivs(spec: OperatorSpec, y_derivs: Callable[[float], Sequence[float]], x: float) -> list[float]:
    """[y, .., y''''] at x; a provider that stops at y''' gets y'''' numerically."""
    d = list(y_derivs(x))
    if len(d) >= 5:
        return d[:5]
    if len(d) < 4:
        raise DomainError("derivative provider must supply at least y, y', y'', y'''")
    lo, hi = _domain(spec)
    d.append(fourth_from_second(lambda t: y_derivs(t)[2], x, lo=lo, hi=hi))
    return d


def residual(spec: OperatorSpec, y_derivs: Callable[[float], Sequence[float]], lam: float, x: float,
             tol: float = 1e-6, scale_floor: float = SCALE_FLOOR) -> ResidualReport:
    """Relative residual of a candidate solution at x.

    ``lam`` is the spectral parameter on the right-hand side (Lambda for the
    bessel family). ``y_derivs`` maps x to [y, y', y'', y''', y''''].
    """
    spec.check_x(x)
    d = complete_derivs(spec, y_derivs, x)
    c, w = spec.coeffs(x)
    lhs = math.fsum(c[k] * d[k + 1] for k in range(4))
    rhs = lam * w * d[0]
    S = math.fsum(abs(v) for v in c) * max(abs(v) for v in d) + abs(rhs)
    floor = scale_floor
    if max(abs(lhs), abs(rhs)) <= ZERO_REL * S:
        floor = max(floor, S)
    rel = abs(lhs - rhs) / max(abs(lhs), abs(rhs), floor)
    return ResidualReport(spec.family, dict(spec.params), x, float(lhs), float(rhs), float(rel),
                          bool(rel <= tol), float(S))


def wronskian(solutions: Sequence[Callable[[float], Sequence[float]]], x: float) -> float:
    """Determinant of the 4x4 matrix [y, y', y'', y'''] with unit-norm rows."""
    if len(solutions) != 4:
        raise DomainError("the Wronskian needs exactly four solutions")
    rows = []
    for s in solutions:
        r = np.asarray(list(s(x))[:4], dtype=float)
        if r.shape != (4,) or not np.all(np.isfinite(r)):
            raise DomainError("each provider must give four finite derivatives")
        n = np.linalg.norm(r)
        rows.append(r / n if n > 0 else r)
    return float(np.linalg.det(np.array(rows)))


@dataclass
class CheckReport:
    name: str
    inputs: dict
    residual: float
    tolerance: float
    passed: bool
    error: str | None = None

    def as_dict(self) -> dict:
        return {"name": self.name, "inputs": self.inputs, "residual": self.residual,
                "tolerance": self.tolerance, "pass": self.passed, "error": self.error}


def grid_report(spec_factory: Callable[[Mapping], OperatorSpec],
                solutions: Mapping[str, Callable[[Mapping], Callable[[float], Sequence[float]]]],
                param_grid: Sequence[Mapping], x_grid: Sequence[float],
                lam_of: Callable[[Mapping], float] = lambda p: p["lam"],
                tol: float = 1e-6) -> list[CheckReport]:
    """Worst residual per (solution, parameter cell) over an x grid.

    ``solutions`` maps a name to a factory that, given a parameter cell,
    returns a derivative provider. Reports are ordered by solution name as
    given and then by cell index; a failing cell is recorded with its error
    message and does not stop the batch.
    """
    if len(x_grid) == 0 or len(param_grid) == 0:
        raise DomainError("empty grid")
    out = []
    for name, make in solutions.items():
        for cell in param_grid:
            worst = 0.0
            err = None
            try:
                spec = spec_factory(cell)
                prov = make(cell)
                lam = lam_of(cell)
                for x in x_grid:
                    r = residual(spec, prov, lam, x, tol)
                    worst = max(worst, r.rel_residual)
            except (QSFError, ArithmeticError, ValueError) as e:
                err = f"{type(e).__name__}: {e}"
                worst = math.inf
            out.append(CheckReport(name, dict(cell), worst, tol, err is None and worst <= tol, err))
    return out


def form_gap(spec_family: str, params: Mapping, d: Sequence[float], x: float) -> float:
    """Relative disagreement of the two forms on one probe.

    The symmetric form equals (w_lagrange / w_frobenius) times the expanded
    form; the returned number compares the two after that rescaling.
    """
    fro = OperatorSpec(spec_family, "frobenius", params)
    lag = OperatorSpec(spec_family, "lagrange", params)
    lf, wf = fro.apply(d, x)
    ll, wl = lag.apply(d, x)
    scaled = lf * wl / wf
    return abs(ll - scaled) / max(abs(ll), abs(scaled), SCALE_FLOOR)


def probe_jet(kind: str, x: float, k: float, order: int = 4) -> list[float]:
    """Derivatives of simple analytic probes: exp(kx), sin(kx), or (1 + kx)^(-1/2) ('power')."""
    if kind == "exp":
        return exponential(k, x, order).tolist()
    if kind == "sin":
        return [k**j * math.sin(k * x + j * math.pi / 2) for j in range(order + 1)]
    if kind == "power":
        return power(1 + k * x, k, -0.5, order).tolist()
    if kind == "const":
        return constant(1.0, order).tolist()
    raise DomainError(f"unknown probe {kind!r}")
