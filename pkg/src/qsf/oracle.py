"""Golden-value table: loading, evaluation through the package, comparison.

The table is a CSV with columns function, arg1..arg4, value, abs_err. It
ships in qsf/data; set QSF_ORACLE_TABLE to use another file.
"""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from . import bessel_type, jacobi_type, laguerre_type, legendre_type
from .errors import DomainError
from .sfkernel import (bessel, bessel_dx, gamma_fn, gauss_2f1, jp, jp_dx, kummer_m, kummer_u, legendre,
                       legendre_dx, whittaker, whittaker_dx)

ENV_VAR = "QSF_ORACLE_TABLE"
TOL = 1e-10
# logarithmic cases: Legendre Q and everything built on U(a, 1, z)
TOL_LOG = 1e-9


@dataclass(frozen=True)
class OracleRow:
    function: str
    args: tuple
    value: float
    abs_err: float

    @property
    def tolerance(self) -> float:
        f = self.function
        log = ("legendre_Q" in f or "dx_Q" in f or f.startswith(("kummer_u", "whittaker_W", "whittaker_dx_W"))
               or f in ("laguerre_type_L3", "laguerre_type_L4", "laguerre_type_dx_L3", "laguerre_type_dx_L4",
                        "legendre_type_Le3", "legendre_type_Le4", "legendre_type_dx_Le3", "legendre_type_dx_Le4"))
        return TOL_LOG if log else TOL


def table_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(str(resources.files("qsf") / "data" / "oracle_table.csv"))


def load(path: str | os.PathLike | None = None) -> list[OracleRow]:
    p = Path(path) if path is not None else table_path()
    rows = []
    with p.open(newline="", encoding="utf-8") as fh:
        for rec in csv.DictReader(fh):
            args = tuple(float(rec[k]) for k in ("arg1", "arg2", "arg3", "arg4") if rec.get(k, "") != "")
            rows.append(OracleRow(rec["function"], args, float(rec["value"]), float(rec["abs_err"])))
    return rows


def _deriv(jet_fn: Callable, *args) -> float:
    return float(jet_fn(*args)[1])


def _dispatch() -> dict[str, Callable[..., float]]:
    d: dict[str, Callable[..., float]] = {
        "gamma": lambda x: gamma_fn(x).value,
        "kummer_m": lambda a, b, z: kummer_m(a, b, z).value,
        "kummer_u": lambda a, b, z: kummer_u(a, b, z).value,
        "whittaker_M": lambda k, z: whittaker("M", k, z).value,
        "whittaker_W": lambda k, z: whittaker("W", k, z).value,
        "whittaker_dx_M": lambda k, z: whittaker_dx("M", k, z).value,
        "whittaker_dx_W": lambda k, z: whittaker_dx("W", k, z).value,
        "gauss_2f1": lambda a, b, c, z: gauss_2f1(a, b, c, z).value,
        "jp": lambda nu, a, b, x: jp(nu, a, b, x).value,
        "jp_dx": lambda nu, a, b, x: jp_dx(nu, a, b, x).value,
        "legendre_P": lambda nu, x: legendre("P", nu, x).value,
        "legendre_Q": lambda nu, x: legendre("Q", nu, x).value,
        "legendre_dx_P": lambda nu, x: legendre_dx("P", nu, x).value,
        "legendre_dx_Q": lambda nu, x: legendre_dx("Q", nu, x).value,
        "jacobi_S1": lambda n, a, A, x: jacobi_type.solution_S1(int(n), a, A, x).value,
        "jacobi_S2": lambda n, a, A, x: jacobi_type.solution_S2(int(n), a, A, x).value,
    }
    for kind in "JYIK":
        for n in (0, 1):
            d[f"bessel_{kind}{n}"] = lambda x, k=kind, n=n: bessel(k, n, x).value
            d[f"bessel_dx_{kind}{n}"] = lambda x, k=kind, n=n: bessel_dx(k, n, x).value
        d[f"bessel_type_{kind}"] = lambda lam, M, x, k=kind: bessel_type.solution(
            k, bessel_type.BesselTypeParams(M, lam), x).value
        d[f"bessel_type_dx_{kind}"] = lambda lam, M, x, k=kind: bessel_type.solution_derivs(
            k, bessel_type.BesselTypeParams(M, lam), x, 1)[1]
    for r in (1, 2, 3, 4):
        d[f"laguerre_type_L{r}"] = lambda lam, A, x, r=r: laguerre_type.solution_L(
            r, laguerre_type.LaguerreTypeParams(A, lam), x).value
        d[f"laguerre_type_dx_L{r}"] = lambda lam, A, x, r=r: laguerre_type.solution_L_derivs(
            r, laguerre_type.LaguerreTypeParams(A, lam), x, 1)[1]
        d[f"legendre_type_Le{r}"] = lambda lam, A, x, r=r: legendre_type.solution_Le(
            r, legendre_type.LegendreTypeParams(A, lam), x).value
        d[f"legendre_type_dx_Le{r}"] = lambda lam, A, x, r=r: legendre_type.solution_Le_derivs(
            r, legendre_type.LegendreTypeParams(A, lam), x, 1)[1]
        d[f"jacobi_J{r}"] = lambda a, A, lam, x, r=r: jacobi_type.solution_Jcal(r, a, A, lam, x).value
    return d


_DISPATCH = _dispatch()


def evaluate(row: OracleRow) -> float:
    """The package's value for one table row."""
    try:
        fn = _DISPATCH[row.function]
    except KeyError:
        raise DomainError(f"no evaluator for oracle function {row.function!r}") from None
    return float(fn(*row.args))


@dataclass(frozen=True)
class Comparison:
    row: OracleRow
    got: float
    rel_err: float
    passed: bool


def compare(row: OracleRow) -> Comparison:
    """Relative error of the package value; the oracle's own abs_err is allowed on top."""
    got = evaluate(row)
    diff = abs(got - row.value)
    scale = abs(row.value)
    rel = diff / scale if scale > 0 else diff
    ok = math.isfinite(got) and diff <= row.tolerance * scale + row.abs_err
    return Comparison(row, got, rel, ok)


def check_all(path=None) -> list[Comparison]:
    return [compare(r) for r in load(path)]
