"""Command-line front end: ``qsf <subcommand> ...``.

Subcommands
-----------
eval       value of one solution at one x
table      values of one or more solutions over an x grid
residual   operator residuals of solutions over an x grid
wronskian  scaled Wronskian of a family's four solutions
ortho      normalized inner products of S1,m and S1,n (jacobi)
roots      xi and the four quartic roots (jacobi)
suite      the full acceptance battery

Exit status is 0 on success, 1 when a check fails (the report is still
written) and 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import bessel_type as bt
from . import jacobi_type as jt
from . import laguerre_type as lt
from . import legendre_type as le
from .errors import QSFError
from .sfkernel.core import EvalResult
from .verifier import FORMS, OperatorSpec, residual, wronskian

FAMILIES = ("bessel", "laguerre", "legendre", "jacobi")

# flags each family accepts, in output column order
PARAMS = {
    "bessel": ("lambda", "M"),
    "laguerre": ("lambda", "A"),
    "legendre": ("lambda", "A"),
    "jacobi": ("alpha", "A", "lambda", "n"),
}
SOLUTIONS = {
    "bessel": bt.KINDS,
    "laguerre": ("1", "2", "3", "4"),
    "legendre": ("1", "2", "3", "4"),
    "jacobi": ("S1", "S2", "J1", "J2", "J3", "J4"),
}
BASIS = {"bessel": bt.KINDS, "laguerre": ("1", "2", "3", "4"), "legendre": ("1", "2", "3", "4"),
         "jacobi": ("J1", "J2", "J3", "J4")}


class UsageError(Exception):
    pass


def fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v) + 0.0:.17g}"  # + 0.0 turns -0.0 into 0.0


# ------------------------------------------------------------- solutions


@dataclass
class Solution:
    """One concrete solution: value, derivative jet, and its operator."""

    family: str
    name: str
    params: dict
    lam: float
    value: Callable[[float], EvalResult]
    jet: Callable[[float], list]

    def operator(self, form: str) -> OperatorSpec:
        p = self.params
        op = {"bessel": {"M": p.get("M")}, "laguerre": {"A": p.get("A")}, "legendre": {"A": p.get("A")},
              "jacobi": {"alpha": p.get("alpha"), "A": p.get("A")}}[self.family]
        return OperatorSpec(self.family, form, op)


def _need(family, params, *names):
    for k in names:
        if params.get(k) is None:
            raise UsageError(f"{family} needs --{k}")


def build_solution(family: str, name: str, params: dict) -> Solution:
    if name not in SOLUTIONS[family]:
        raise UsageError(f"{family} solutions are {', '.join(SOLUTIONS[family])}; got {name!r}")
    if family == "bessel":
        _need(family, params, "lambda", "M")
        p = bt.BesselTypeParams(params["M"], params["lambda"])
        return Solution(family, name, params, p.Lambda, lambda x: bt.solution(name, p, x),
                        lambda x: bt.solution_derivs(name, p, x, 4))
    if family == "laguerre":
        _need(family, params, "lambda", "A")
        p = lt.LaguerreTypeParams(params["A"], params["lambda"])
        r = int(name)
        return Solution(family, name, params, p.lam, lambda x: lt.solution_L(r, p, x),
                        lambda x: lt.solution_L_derivs(r, p, x, 4))
    if family == "legendre":
        _need(family, params, "lambda", "A")
        p = le.LegendreTypeParams(params["A"], params["lambda"])
        r = int(name)
        return Solution(family, name, params, p.lam, lambda x: le.solution_Le(r, p, x),
                        lambda x: le.solution_Le_derivs(r, p, x, 4))
    _need(family, params, "alpha", "A")
    a, A = params["alpha"], params["A"]
    if name in ("S1", "S2"):
        _need(family, params, "n")
        if params.get("lambda") is not None:
            raise UsageError("S1 and S2 sit at lambda = eigenvalue(n); give --n, not --lambda")
        n = params["n"]
        lam = jt.eigenvalue(n, a, A)
        val, jet = (jt.solution_S1, jt.s1_jet) if name == "S1" else (jt.solution_S2, jt.s2_jet)
        return Solution(family, name, params, lam, lambda x: val(n, a, A, x), lambda x: jet(n, a, A, x).tolist())
    _need(family, params, "lambda")
    if params.get("n") is not None:
        raise UsageError("J1..J4 take --lambda, not --n")
    lam = params["lambda"]
    r = int(name[1])
    return Solution(family, name, params, lam, lambda x: jt.solution_Jcal(r, a, A, lam, x),
                    lambda x: jt.jcal_jet(r, a, A, lam, x).tolist())


# ---------------------------------------------------------------- output


def emit(args, command: str, params: dict, columns: Sequence[str], rows: list[list], failed: int = 0,
         extra: dict | None = None):
    out = sys.stdout
    if args.output == "json":
        doc = {"command": command, "params": params,
               "results": [dict(zip(columns, r)) for r in rows],
               "summary": {"total": len(rows), "failed": failed}}
        if extra:
            doc.update(extra)
        out.write(json.dumps(doc, indent=2, sort_keys=False, default=_json_default) + "\n")
        return
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow(["" if v is None else (v if isinstance(v, str) else fmt(v)) for v in r])
    out.write(buf.getvalue())


def _json_default(o):
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    raise TypeError(f"cannot serialize {type(o).__name__}")


def _clean(v):
    # JSON has no inf/nan; keep them as strings
    if isinstance(v, float) and not math.isfinite(v):
        return repr(v)
    return v


# --------------------------------------------------------------- parsing


def _family_params(args) -> dict:
    family = args.family
    given = {"lambda": args.lam, "M": args.M, "A": args.A, "alpha": args.alpha, "n": args.n}
    allowed = PARAMS[family]
    for k, v in given.items():
        if v is not None and k not in allowed:
            raise UsageError(f"--{k} does not apply to the {family} family (allowed: "
                             + ", ".join("--" + a for a in allowed) + ")")
    return {k: given[k] for k in allowed if given[k] is not None}


def _grid(args) -> np.ndarray:
    if args.n_points < 1:
        raise UsageError("--n-points must be >= 1")
    if not (math.isfinite(args.x_min) and math.isfinite(args.x_max)) or args.x_min > args.x_max:
        raise UsageError("need finite --x-min <= --x-max")
    return np.linspace(args.x_min, args.x_max, args.n_points)


def _solutions(args) -> list[str]:
    if args.solution is None:
        if args.family == "jacobi" and args.n is not None:
            return ["S1", "S2"]
        return list(BASIS[args.family])
    names = [s.strip() for s in args.solution.split(",") if s.strip()]
    if not names:
        raise UsageError("--solution is empty")
    return names


def _add_family(p, solution=True, required_solution=True):
    p.add_argument("--family", required=True, choices=FAMILIES)
    if solution:
        p.add_argument("--solution", required=required_solution,
                       help="solution id(s), comma separated: J,Y,I,K | 1..4 | S1,S2,J1..J4"
                       + ("" if required_solution else " (default: all)"))
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--M", type=float)
    p.add_argument("--A", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--n", type=int)


def _add_grid(p):
    p.add_argument("--x-min", type=float, required=True)
    p.add_argument("--x-max", type=float, required=True)
    p.add_argument("--n-points", type=int, default=11)


def _add_output(p):
    p.add_argument("--output", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qsf", description="Solutions of fourth-order Bessel-, Laguerre-, "
                                 "Legendre- and Jacobi-type equations.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one solution at one point")
    _add_family(p)
    p.add_argument("--x", type=float, required=True)
    _add_output(p)

    p = sub.add_parser("table", help="tabulate solutions over a grid")
    _add_family(p, required_solution=False)
    _add_grid(p)
    _add_output(p)

    p = sub.add_parser("residual", help="operator residuals over a grid")
    _add_family(p, required_solution=False)
    _add_grid(p)
    p.add_argument("--form", choices=FORMS + ("both",), default="both")
    p.add_argument("--tol", type=float, default=1e-6)
    _add_output(p)

    p = sub.add_parser("wronskian", help="scaled Wronskian of the four solutions")
    _add_family(p, solution=False)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--threshold", type=float, default=1e-8)
    _add_output(p)

    p = sub.add_parser("ortho", help="inner products of S1,m and S1,n")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--A", type=float, required=True)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--tol", type=float, default=1e-8)
    _add_output(p)

    p = sub.add_parser("roots", help="quartic roots for the J solutions")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--A", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    _add_output(p)

    p = sub.add_parser("suite", help="run the acceptance battery")
    p.add_argument("--only", help="comma-separated criterion numbers (default: all)")
    p.add_argument("--output", choices=("text", "json"), default="text")
    return ap


# -------------------------------------------------------------- commands


def cmd_eval(args) -> int:
    params = _family_params(args)
    rows = []
    for name in _solutions(args):
        s = build_solution(args.family, name, params)
        r = s.value(args.x)
        rows.append([args.family, name, *params.values(), args.x, r.value, r.abs_err])
    emit(args, "eval", params, ["family", "solution", *params, "x", "value", "abs_err"], rows)
    return 0


def cmd_table(args) -> int:
    params = _family_params(args)
    sols = [build_solution(args.family, n, params) for n in _solutions(args)]
    rows = []
    for s in sols:
        for x in _grid(args):
            r = s.value(float(x))
            rows.append([args.family, s.name, *params.values(), float(x), r.value, r.abs_err])
    emit(args, "table", params, ["family", "solution", *params, "x", "value", "abs_err"], rows)
    return 0


def cmd_residual(args) -> int:
    params = _family_params(args)
    sols = [build_solution(args.family, n, params) for n in _solutions(args)]
    forms = FORMS if args.form == "both" else (args.form,)
    rows, failed = [], 0
    for s in sols:
        for form in forms:
            spec = s.operator(form)
            for x in _grid(args):
                rep = residual(spec, s.jet, s.lam, float(x), args.tol)
                failed += not rep.passed
                rows.append([args.family, s.name, form, *params.values(), float(x), rep.lhs, rep.rhs,
                             rep.rel_residual, rep.passed])
    cols = ["family", "solution", "form", *params, "x", "lhs", "rhs", "rel_residual", "pass"]
    emit(args, "residual", params, cols, rows, failed)
    return 1 if failed else 0


def cmd_wronskian(args) -> int:
    params = _family_params(args)
    family = args.family
    if family == "jacobi" and params.get("n") is not None:
        raise UsageError("the Wronskian uses J1..J4; give --lambda, not --n")
    sols = [build_solution(family, n, params) for n in BASIS[family]]
    defect = None
    if family == "laguerre":
        defect = lt.basis_defect(lt.LaguerreTypeParams(params["A"], params["lambda"]))
    elif family == "legendre":
        p = le.LegendreTypeParams(params["A"], params["lambda"])
        defect = le.basis_defect(p)
    elif family == "jacobi":
        defect = jt.basis_defect(params["alpha"], params["A"], params["lambda"])
    if defect is not None and ("non-real" in defect or "negative" in defect):
        print(f"qsf: no real basis here: {defect}", file=sys.stderr)
        return 2
    det = wronskian([(lambda x, s=s: s.jet(x)[:4]) for s in sols], args.x)
    ok = abs(det) > args.threshold
    row = [family, *params.values(), args.x, det, ok, defect or ""]
    emit(args, "wronskian", params, ["family", *params, "x", "det", "pass", "degenerate"], [row], int(not ok))
    return 0 if ok else 1


def cmd_ortho(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    mu = jt.JacobiMeasure(args.alpha, args.A)

    def s1(n):
        return lambda x: jt.solution_S1(n, args.alpha, args.A, x).value

    N = args.max_n + 1
    gram = [[jt.inner_product(s1(m), s1(n), mu, m + n) for n in range(N)] for m in range(N)]
    rows, failed = [], 0
    for m in range(N):
        for n in range(m, N):
            norm = math.sqrt(gram[m][m] * gram[n][n]) if gram[m][m] > 0 and gram[n][n] > 0 else math.nan
            rel = abs(gram[m][n]) / norm if m != n else math.nan
            ok = (rel <= args.tol) if m != n else gram[m][m] > 0.0
            failed += not ok
            rows.append([m, n, gram[m][n], rel, ok])
    params = {"alpha": args.alpha, "A": args.A}
    emit(args, "ortho", params, ["m", "n", "inner_product", "rel_to_norms", "pass"],
         [[_clean(v) if args.output == "json" else v for v in r] for r in rows], failed)
    return 1 if failed else 0


def cmd_roots(args) -> int:
    roots = jt.quartic_roots(args.alpha, args.A, args.lam)
    rows = []
    for r in (1, 2, 3, 4):
        z = roots.root(r)
        q = abs(jt.quartic(z, args.alpha, args.A, args.lam))
        rows.append([r, z.real, z.imag, roots.is_real(r), q / max(1.0, abs(args.lam))])
    s, p = jt.vieta_residuals(roots, args.alpha, args.lam)
    params = {"alpha": args.alpha, "A": args.A, "lambda": args.lam}
    extra = {"xi": roots.xi, "degenerate": roots.degenerate, "vieta": {"sum": s, "product": p}}
    if args.output == "csv":
        print(f"# xi={fmt(roots.xi)} degenerate={fmt(roots.degenerate)}", file=sys.stderr)
    emit(args, "roots", params, ["r", "re", "im", "real", "quartic_residual"], rows, 0, extra)
    return 0


def cmd_suite(args) -> int:
    from .suite import run_suite

    only = None
    if args.only:
        try:
            only = sorted({int(t) for t in args.only.split(",")})
        except ValueError:
            raise UsageError("--only takes comma-separated integers") from None
        if not only or any(not 1 <= i <= 10 for i in only):
            raise UsageError("criteria are numbered 1..10")
    res = run_suite(only)
    if args.output == "json":
        sys.stdout.write(json.dumps(res.as_dict(), indent=2, default=lambda o: _clean(float(o))) + "\n")
    else:
        for line in res.lines():
            print(line)
            if line.startswith("[FAIL] criterion"):
                num = int(line.split()[2].rstrip(":"))
                crit = next(c for c in res.criteria if c.number == num)
                for r in crit.reports:
                    if not r.passed:
                        print(f"    {r.name} {r.inputs}: {r.residual:.3e} > {r.tolerance:g} {r.error or ''}")
    return 0 if res.passed else 1


COMMANDS = {"eval": cmd_eval, "table": cmd_table, "residual": cmd_residual, "wronskian": cmd_wronskian,
            "ortho": cmd_ortho, "roots": cmd_roots, "suite": cmd_suite}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"qsf {args.command}: {e}", file=sys.stderr)
        return 2
    except (QSFError, ValueError, ArithmeticError) as e:
        print(f"qsf {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


def main(argv: Sequence[str] | None = None) -> None:
    raise SystemExit(run(argv))


if __name__ == "__main__":
    main()
