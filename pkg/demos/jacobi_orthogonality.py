"""Gram matrix of the polynomial solutions S1_n under the Jacobi-type measure.

The measure puts mass 1/2 at x = -1 and density (A/2)(1-x)^alpha on
(-1, 1). Off-diagonal entries, divided by the norms, sit at rounding level.

Run with ``python demos/jacobi_orthogonality.py [alpha] [A]``.
"""

import sys

import numpy as np

from qsf import jacobi_type as jt


def gram(alpha, A, N=6):
    mu = jt.JacobiMeasure(alpha, A)
    s = [(lambda x, n=n: jt.solution_S1(n, alpha, A, x).value) for n in range(N)]
    return np.array([[jt.inner_product(s[m], s[n], mu, m + n) for n in range(N)] for m in range(N)])


def main():
    alpha = float(sys.argv[1]) if len(sys.argv) > 1 else 0.5
    A = float(sys.argv[2]) if len(sys.argv) > 2 else 1.0
    G = gram(alpha, A)
    d = np.sqrt(np.diag(G))
    print(f"alpha={alpha}, A={A}")
    print("eigenvalues lambda_n:", ", ".join(f"{jt.eigenvalue(n, alpha, A):.6g}" for n in range(len(d))))
    print("norms:", ", ".join(f"{v:.6g}" for v in d))
    with np.printoptions(precision=1, suppress=False):
        print("normalized Gram matrix minus identity:")
        print(G / np.outer(d, d) - np.eye(len(d)))


if __name__ == "__main__":
    main()
