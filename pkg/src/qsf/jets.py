"""Truncated derivative jets: ``[f(x0), f'(x0), ..., f^(n)(x0)]``.

Solution formulas are products and sums of classical functions with
elementary factors; carrying full derivative lists through those operations
(Leibniz rule) gives every derivative analytically.
"""

from __future__ import annotations

import math

import numpy as np


class Jet:
    __slots__ = ("d",)

    def __init__(self, derivs):
        self.d = np.asarray(derivs, dtype=float)

    @property
    def order(self) -> int:
        return len(self.d) - 1

    def __len__(self):
        return len(self.d)

    def __getitem__(self, k):
        return self.d[k]

    def tolist(self) -> list[float]:
        return [float(v) for v in self.d]

    def truncate(self, order: int) -> "Jet":
        return Jet(self.d[: order + 1])

    def derivative(self) -> "Jet":
        return Jet(self.d[1:])

    def _align(self, other):
        n = min(len(self.d), len(other.d))
        return self.d[:n], other.d[:n]

    def __add__(self, other):
        if isinstance(other, Jet):
            a, b = self._align(other)
            return Jet(a + b)
        d = self.d.copy()
        d[0] += other
        return Jet(d)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.d)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.d * other)
        a, b = self._align(other)
        n = len(a)
        out = np.zeros(n)
        for k in range(n):
            out[k] = sum(math.comb(k, j) * a[j] * b[k - j] for j in range(k + 1))
        return Jet(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Jet({self.tolist()})"


def constant(c: float, order: int) -> Jet:
    d = np.zeros(order + 1)
    d[0] = c
    return Jet(d)


def polynomial(coeffs, x0: float, order: int) -> Jet:
    """Jet of sum(coeffs[i] * x**i) at x0."""
    p = np.polynomial.Polynomial(coeffs)
    out = []
    for _ in range(order + 1):
        out.append(p(x0))
        p = p.deriv()
    return Jet(out)


def power(base: float, slope: float, p: float, order: int) -> Jet:
    """Jet of (base + slope*(x - x0))**p at x0, for base > 0."""
    out = []
    coef = 1.0
    for k in range(order + 1):
        out.append(coef * base ** (p - k) * slope**k)
        coef *= p - k
    return Jet(out)


def exponential(rate: float, x0: float, order: int) -> Jet:
    """Jet of exp(rate*x) at x0."""
    e = math.exp(rate * x0)
    return Jet([e * rate**k for k in range(order + 1)])


def scale_argument(j: Jet, s: float) -> Jet:
    """Turn the jet of f at t0 = s*x0 into the jet of x -> f(s*x) at x0."""
    return Jet(j.d * s ** np.arange(len(j.d)))


def power_series(coeffs, t0: float, order: int) -> Jet:
    """Jet at t0 of the power series sum(coeffs[j] * t**j)."""
    c = np.asarray(coeffs, dtype=float)
    out = []
    for m in range(order + 1):
        js = np.arange(m, len(c))
        fall = np.ones(len(js))
        for i in range(m):
            fall *= js - i
        out.append(float(np.sum(c[m:] * fall * t0 ** (js - m))) if len(js) else 0.0)
    return Jet(out)
