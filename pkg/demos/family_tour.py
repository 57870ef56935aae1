"""Evaluate one solution of each family and check it against its operator.

Run with ``python demos/family_tour.py``.
"""

import numpy as np

from qsf import bessel_type as bt
from qsf import jacobi_type as jt
from qsf import laguerre_type as lt
from qsf import legendre_type as lg
from qsf.verifier import OperatorSpec, residual


def worst(spec, derivs, lam, xs):
    return max(residual(spec, derivs, lam, float(x)).rel_residual for x in xs)


def main():
    p = bt.BesselTypeParams(M=1.0, lam=1.0)
    spec = OperatorSpec("bessel", params={"M": p.M})
    print(f"Bessel-type, M=1, lambda=1, Lambda={p.Lambda:g}")
    for kind in bt.KINDS:
        w = worst(spec, lambda t, k=kind: bt.solution_derivs(k, p, t, 4), p.Lambda, np.linspace(0.2, 10, 20))
        print(f"  {kind}(2) = {bt.solution(kind, p, 2.0).value: .12f}   worst residual {w:.1e}")

    p = lt.LaguerreTypeParams(A=1.0, lam=1.0)
    spec = OperatorSpec("laguerre", params={"A": p.A})
    print(f"Laguerre-type, A=1, lambda=1, Gamma={p.gamma:.6f}")
    for r in (1, 2, 3, 4):
        w = worst(spec, lambda t, r=r: lt.solution_L_derivs(r, p, t, 4), p.lam, np.linspace(0.5, 5, 15))
        print(f"  L{r}(1) = {lt.solution_L(r, p, 1.0).value: .12f}   worst residual {w:.1e}")

    p = lg.LegendreTypeParams(A=0.1, lam=0.2)
    spec = OperatorSpec("legendre", params={"A": p.A})
    print("Legendre-type, A=0.1, lambda=0.2")
    for r in (1, 2, 3, 4):
        w = worst(spec, lambda t, r=r: lg.solution_Le_derivs(r, p, t, 4), p.lam, np.linspace(-0.8, 0.8, 15))
        print(f"  Le{r}(0.3) = {lg.solution_Le(r, p, 0.3).value: .12f}   worst residual {w:.1e}")

    alpha, A, lam = 4.5, 0.01, 7.0
    roots = jt.quartic_roots(alpha, A, lam)
    spec = OperatorSpec("jacobi", params={"alpha": alpha, "A": A})
    print(f"Jacobi-type, alpha={alpha}, A={A}, lambda={lam}, xi={roots.xi:.6f}")
    for r in (1, 2, 3, 4):
        w = worst(spec, lambda t, r=r: jt.jcal_jet(r, alpha, A, lam, t).tolist(), lam, np.linspace(-0.6, 0.6, 13))
        print(f"  J{r}(0.2) = {jt.solution_Jcal(r, alpha, A, lam, 0.2).value: .12e}   worst residual {w:.1e}")


if __name__ == "__main__":
    main()
