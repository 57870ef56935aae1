"""The acceptance battery: ten numbered checks plus a wall-clock budget.

Each check returns a :class:`CriterionResult` carrying one CheckReport per
(solution, parameter cell), the cells it excluded with a reason, and its own
run time. ``run_suite`` runs them all; the CLI and the test-suite both use it.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import bessel_type as bt
from . import jacobi_type as jt
from . import laguerre_type as lt
from . import legendre_type as le
from . import oracle
from .errors import QSFError
from .verifier import CheckReport, OperatorSpec, form_gap, residual, wronskian

RESIDUAL_TOL = 1e-6
SUITE_BUDGET = 60.0


@dataclass
class CriterionResult:
    number: int
    title: str
    reports: list[CheckReport] = field(default_factory=list)
    excluded: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    budget: float | None = None

    @property
    def passed(self) -> bool:
        ok = bool(self.reports) and all(r.passed for r in self.reports)
        if self.budget is not None:
            ok = ok and self.elapsed <= self.budget
        return ok

    @property
    def worst(self) -> float:
        """Largest residual relative to its tolerance (<= 1 means pass)."""
        return max((r.residual / r.tolerance for r in self.reports), default=math.inf)

    def summary(self) -> str:
        state = "PASS" if self.passed else "FAIL"
        n_bad = sum(not r.passed for r in self.reports)
        line = (f"[{state}] criterion {self.number}: {self.title} "
                f"({len(self.reports)} checks, {n_bad} failed, worst/tol = {self.worst:.2e}, {self.elapsed:.2f} s")
        if self.budget is not None:
            line += f" of {self.budget:g} s"
        if self.excluded:
            line += f", {len(self.excluded)} excluded"
        return line + ")"

    def as_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "pass": self.passed, "elapsed": self.elapsed,
                "budget": self.budget, "excluded": list(self.excluded),
                "checks": [r.as_dict() for r in self.reports]}


def _timed(fn):
    def run(*args, **kw) -> CriterionResult:
        t0 = time.perf_counter()
        res = fn(*args, **kw)
        res.elapsed = time.perf_counter() - t0
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _worst_residual(forms, params, provider, lam, xs, tol=RESIDUAL_TOL):
    worst = 0.0
    for form in forms:
        spec = OperatorSpec(params[0], form, params[1])
        for x in xs:
            worst = max(worst, residual(spec, provider, lam, float(x), tol).rel_residual)
    return worst


def _guarded(name, inputs, tol, body) -> CheckReport:
    try:
        v = float(body())
    except (QSFError, ArithmeticError, ValueError) as e:
        return CheckReport(name, inputs, math.inf, tol, False, f"{type(e).__name__}: {e}")
    return CheckReport(name, inputs, v, tol, bool(v <= tol))


FORMS = ("frobenius", "lagrange")

# ------------------------------------------------------------------ grids

BESSEL_LAMS = (0.5, 1.0, 2.0)
BESSEL_MS = (0.5, 1.0, 4.0)
BESSEL_XS = np.linspace(0.2, 10.0, 20)

LAGUERRE_AS = (0.5, 1.0, 2.0)
LAGUERRE_LAMS = (0.0, 1.0, 5.0)
LAGUERRE_XS = np.linspace(0.5, 5.0, 15)

LEGENDRE_AS = (0.5, 1.0)
LEGENDRE_LAMS = (1.0, 5.0)
LEGENDRE_XS = np.linspace(-0.8, 0.8, 15)
# cells where the lower-sign solutions are real, so all four can be exercised
LEGENDRE_EXTRA = ((0.1, 0.2), (0.05, 0.5))

JACOBI_ALPHAS = (-0.5, 0.0, 0.5, 1.0)
JACOBI_AS = (0.5, 1.0, 2.0)
JACOBI_XS = np.linspace(-0.6, 0.6, 13)
JCAL_CELLS = ((0.5, 1.0), (1.0, 1.0), (4.5, 0.01))
JCAL_LAMS = (2.0, 7.0)


# --------------------------------------------------------------- criteria


@_timed
def criterion_1() -> CriterionResult:
    """Bessel-type J, Y, I, K residuals over the (lambda, M, x) grid."""
    res = CriterionResult(1, "Bessel-type residuals", budget=5.0)
    for kind in bt.KINDS:
        for lam in BESSEL_LAMS:
            for M in BESSEL_MS:
                p = bt.BesselTypeParams(M, lam)
                res.reports.append(_guarded(
                    f"bessel {kind}", {"lambda": lam, "M": M}, RESIDUAL_TOL,
                    lambda: _worst_residual(FORMS, ("bessel", {"M": M}),
                                            lambda t: bt.solution_derivs(kind, p, t, 4), p.Lambda, BESSEL_XS)))
    return res


@_timed
def criterion_2() -> CriterionResult:
    """J and I Bessel-type solutions tend to 1 at the origin."""
    res = CriterionResult(2, "Bessel-type boundary values at 0+")
    for kind in ("J", "I"):
        for lam in BESSEL_LAMS:
            for M in BESSEL_MS:
                p = bt.BesselTypeParams(M, lam)
                res.reports.append(_guarded(
                    f"bessel {kind}(0+)", {"lambda": lam, "M": M}, 1e-9,
                    lambda: max(abs(bt.solution(kind, p, x).value - 1.0) for x in (0.0, 1e-12, 1e-9))))
    return res


@_timed
def criterion_3() -> CriterionResult:
    """Laguerre-type residuals and the Gamma-swap symmetry."""
    res = CriterionResult(3, "Laguerre-type residuals and Gamma swap")
    for r in (1, 2, 3, 4):
        for A in LAGUERRE_AS:
            for lam in LAGUERRE_LAMS:
                p = lt.LaguerreTypeParams(A, lam)
                res.reports.append(_guarded(
                    f"laguerre L{r}", {"A": A, "lambda": lam}, RESIDUAL_TOL,
                    lambda: _worst_residual(FORMS, ("laguerre", {"A": A}),
                                            lambda t: lt.solution_L_derivs(r, p, t, 4), lam, LAGUERRE_XS)))

    def swap(p):
        worst = 0.0
        for x in LAGUERRE_XS:
            for kind, r in (("M", 2), ("U", 4)):
                a = lt.formula(-p.gamma, kind, p.A, x).value
                b = lt.solution_L(r, p, x).value
                worst = max(worst, abs(a - b) / max(abs(a), abs(b), 1e-300))
        return worst

    for A in LAGUERRE_AS:
        for lam in LAGUERRE_LAMS:
            p = lt.LaguerreTypeParams(A, lam)
            res.reports.append(_guarded("laguerre Gamma swap", {"A": A, "lambda": lam}, 1e-12, lambda: swap(p)))
    return res


@_timed
def criterion_4() -> CriterionResult:
    """Legendre-type residuals on admissible cells and the vanishing brackets."""
    res = CriterionResult(4, "Legendre-type residuals and bracket zeros")
    cells = [(A, lam) for A in LEGENDRE_AS for lam in LEGENDRE_LAMS] + list(LEGENDRE_EXTRA)
    for A, lam in cells:
        p = le.LegendreTypeParams(A, lam)
        for r in (1, 2, 3, 4):
            if not le.admissible(r, p):
                res.excluded.append(f"Le{r} at A={A}, lambda={lam}: a radicand is negative")
                continue
            res.reports.append(_guarded(
                f"legendre Le{r}", {"A": A, "lambda": lam}, RESIDUAL_TOL,
                lambda: _worst_residual(FORMS, ("legendre", {"A": A}),
                                        lambda t: le.solution_Le_derivs(r, p, t, 4), lam, LEGENDRE_XS)))
    for A in LEGENDRE_AS:
        lam = -(4 * A + 4 * A * A)
        for sign in ("+", "-"):
            res.reports.append(_guarded(
                f"legendre bracket {sign}", {"A": A, "lambda": lam}, 1e-10,
                lambda: max(abs(le.bracket_factor(sign, lam, A, x)) for x in LEGENDRE_XS)))
    return res


@_timed
def criterion_5() -> CriterionResult:
    """Eigenvalues make rho = n a quartic root; the closed-form roots obey Vieta."""
    res = CriterionResult(5, "Jacobi-type eigenvalues and quartic roots")
    for a in JACOBI_ALPHAS:
        for A in JACOBI_AS:
            def eig():
                worst = 0.0
                for n in range(7):
                    lam = jt.eigenvalue(n, a, A)
                    worst = max(worst, abs(jt.quartic(float(n), a, A, lam)) / max(1.0, abs(lam)))
                return worst

            def vieta():
                worst = 0.0
                for n in range(7):
                    lam = jt.eigenvalue(n, a, A)
                    for probe in (lam, lam + 2.5):
                        s, p = jt.vieta_residuals(jt.quartic_roots(a, A, probe), a, probe)
                        worst = max(worst, s / (2 * (a + 1) + 1.0), p / max(1.0, abs(probe)))
                return worst

            res.reports.append(_guarded("jacobi eigenvalue root", {"alpha": a, "A": A}, 1e-9, eig))
            res.reports.append(_guarded("jacobi Vieta", {"alpha": a, "A": A}, 1e-9, vieta))
    return res


@_timed
def criterion_6() -> CriterionResult:
    """Jacobi-type residuals for S1, S2 at the eigenvalues and for J1..J4."""
    res = CriterionResult(6, "Jacobi-type residuals")
    for a in JACOBI_ALPHAS:
        for A in JACOBI_AS:
            for n in range(5):
                lam = jt.eigenvalue(n, a, A)
                for name, jet in (("S1", jt.s1_jet), ("S2", jt.s2_jet)):
                    res.reports.append(_guarded(
                        f"jacobi {name},{n}", {"alpha": a, "A": A, "n": n}, RESIDUAL_TOL,
                        lambda: _worst_residual(FORMS, ("jacobi", {"alpha": a, "A": A}),
                                                lambda t: jet(n, a, A, t).tolist(), lam, JACOBI_XS)))
    for a, A in JCAL_CELLS:
        for lam in JCAL_LAMS:
            real = jt.real_solution_indices(a, A, lam)
            for r in (1, 2, 3, 4):
                if r not in real:
                    res.excluded.append(f"J{r} at alpha={a}, A={A}, lambda={lam}: root is not real")
                    continue
                res.reports.append(_guarded(
                    f"jacobi J{r}", {"alpha": a, "A": A, "lambda": lam}, RESIDUAL_TOL,
                    lambda: _worst_residual(FORMS, ("jacobi", {"alpha": a, "A": A}),
                                            lambda t: jt.jcal_jet(r, a, A, lam, t).tolist(), lam, JACOBI_XS)))
    return res


@_timed
def criterion_7() -> CriterionResult:
    """Orthogonality of S1,m and S1,n under the Stieltjes measure."""
    res = CriterionResult(7, "Jacobi-type orthogonality")
    for a in JACOBI_ALPHAS:
        for A in JACOBI_AS:
            mu = jt.JacobiMeasure(a, A)

            def s1(n):
                return lambda x: jt.solution_S1(n, a, A, x).value

            def ortho():
                norms = [jt.inner_product(s1(n), s1(n), mu, 2 * n) for n in range(6)]
                if min(norms) <= 0.0:
                    return math.inf
                worst = 0.0
                for m in range(6):
                    for n in range(m + 1, 6):
                        ip = jt.inner_product(s1(m), s1(n), mu, m + n)
                        worst = max(worst, abs(ip) / (math.sqrt(norms[m] * norms[n])))
                return worst

            res.reports.append(_guarded("jacobi orthogonality", {"alpha": a, "A": A}, 1e-8, ortho))
    return res


def _wronski_check(name, inputs, providers, x, defect):
    if defect is not None:
        return None, f"{name} at {inputs}: {defect}"
    inputs = dict(inputs, x=x)
    try:
        det = wronskian(providers, x)
    except (QSFError, ArithmeticError, ValueError) as e:
        return CheckReport(name, inputs, math.inf, 1.0, False, f"{type(e).__name__}: {e}"), None
    inputs["det"] = det
    # residual is 1e-8 / |det| so that the usual "residual <= tolerance" reading applies
    v = 1e-8 / max(abs(det), 1e-300)
    return CheckReport(name, inputs, v, 1.0, bool(v <= 1.0)), None


@_timed
def criterion_8() -> CriterionResult:
    """Scaled Wronskian above 1e-8 for each family's four solutions."""
    res = CriterionResult(8, "linear independence (scaled Wronskian > 1e-8)")
    items = []
    for lam in BESSEL_LAMS:
        for M in BESSEL_MS:
            p = bt.BesselTypeParams(M, lam)
            items.append(("bessel", {"lambda": lam, "M": M},
                          [lambda t, k=k, p=p: bt.solution_derivs(k, p, t) for k in bt.KINDS], 1.0, None))
    for A in LAGUERRE_AS:
        for lam in LAGUERRE_LAMS:
            p = lt.LaguerreTypeParams(A, lam)
            items.append(("laguerre", {"A": A, "lambda": lam},
                          [lambda t, r=r, p=p: lt.solution_L_derivs(r, p, t) for r in (1, 2, 3, 4)], 1.0,
                          lt.basis_defect(p)))
    for A, lam in [(A, lam) for A in LEGENDRE_AS for lam in LEGENDRE_LAMS] + list(LEGENDRE_EXTRA):
        p = le.LegendreTypeParams(A, lam)
        items.append(("legendre", {"A": A, "lambda": lam},
                      [lambda t, r=r, p=p: le.solution_Le_derivs(r, p, t) for r in (1, 2, 3, 4)], 0.3,
                      le.basis_defect(p)))
    for a, A in JCAL_CELLS:
        for lam in JCAL_LAMS:
            items.append(("jacobi", {"alpha": a, "A": A, "lambda": lam},
                          [lambda t, r=r, a=a, A=A, lam=lam: jt.jcal_jet(r, a, A, lam, t, 3).tolist()
                           for r in (1, 2, 3, 4)], 0.2, jt.basis_defect(a, A, lam)))
    for name, inputs, providers, x, defect in items:
        rep, why = _wronski_check(f"{name} Wronskian", inputs, providers, x, defect)
        if rep is None:
            res.excluded.append(why)
        else:
            res.reports.append(rep)
    return res


@_timed
def criterion_9(path=None) -> CriterionResult:
    """Every row of the golden table reproduced within its tolerance."""
    res = CriterionResult(9, "kernel accuracy against the golden table")
    rows = oracle.load(path)
    for row in rows:
        inputs = {"function": row.function, "args": list(row.args)}
        try:
            c = oracle.compare(row)
        except (QSFError, ArithmeticError, ValueError) as e:
            res.reports.append(CheckReport(row.function, inputs, math.inf, row.tolerance, False,
                                           f"{type(e).__name__}: {e}"))
            continue
        res.reports.append(CheckReport(row.function, inputs, c.rel_err, row.tolerance, c.passed))
    if len(rows) < 200:
        res.reports.append(CheckReport("table size", {"rows": len(rows)}, math.inf, 200, False,
                                       f"only {len(rows)} rows"))
    return res


_PROBE_PARAMS: dict[str, Callable[[np.random.Generator], dict]] = {
    "bessel": lambda g: {"M": float(g.uniform(0.2, 5.0))},
    "laguerre": lambda g: {"A": float(g.uniform(0.1, 3.0))},
    "legendre": lambda g: {"A": float(g.uniform(0.1, 3.0))},
    "jacobi": lambda g: {"alpha": float(g.uniform(-0.9, 4.0)), "A": float(g.uniform(0.1, 3.0))},
}


def random_probe(g: np.random.Generator, family: str):
    """(params, x, derivative list) of a random smooth probe: a Taylor jet with random coefficients.

    The jet entries are the derivatives y..y'''' of some smooth function at x;
    any five numbers are realised by a quartic polynomial.
    """
    params = _PROBE_PARAMS[family](g)
    x = float(g.uniform(0.1, 8.0)) if family in ("bessel", "laguerre") else float(g.uniform(-0.95, 0.95))
    d = [float(v) for v in g.normal(size=5) * np.exp(g.uniform(-2, 2, size=5))]
    return params, x, d


@_timed
def criterion_10(seed: int = 20240601, n_probes: int = 50) -> CriterionResult:
    """Frobenius and Lagrange forms agree on random smooth probes."""
    res = CriterionResult(10, "Frobenius/Lagrange form equivalence")
    g = np.random.default_rng(seed)
    for family in ("bessel", "laguerre", "legendre", "jacobi"):
        probes = [random_probe(g, family) for _ in range(n_probes)]
        res.reports.append(_guarded(
            f"{family} forms", {"probes": n_probes, "seed": seed}, 1e-8,
            lambda: max(form_gap(family, p, d, x) for p, x, d in probes)))
    return res


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10)


@dataclass
class SuiteResult:
    criteria: list[CriterionResult]
    elapsed: float
    budget: float = SUITE_BUDGET

    @property
    def within_budget(self) -> bool:
        return self.elapsed <= self.budget

    @property
    def passed(self) -> bool:
        return self.within_budget and all(c.passed for c in self.criteria)

    def lines(self) -> list[str]:
        out = [c.summary() for c in self.criteria]
        state = "PASS" if self.within_budget else "FAIL"
        out.append(f"[{state}] suite runtime: {self.elapsed:.2f} s of {self.budget:g} s")
        return out

    def as_dict(self) -> dict:
        return {"pass": self.passed, "elapsed": self.elapsed, "budget": self.budget,
                "criteria": [c.as_dict() for c in self.criteria]}


def run_suite(only: list[int] | None = None) -> SuiteResult:
    t0 = time.perf_counter()
    chosen = [c for i, c in enumerate(CRITERIA, 1) if only is None or i in only]
    results = [c() for c in chosen]
    return SuiteResult(results, time.perf_counter() - t0)
