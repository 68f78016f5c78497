"""Integrals of a tabulated slowly-varying prefactor times Bessel factors.

Given samples of f(x) on a grid, the prefactor is replaced by a
piecewise polynomial (linear or cubic spline) and

    int f(x) j_l(a x) dx        int f(x) j_k(a x) j_l(b x) dx

reduce, piece by piece, to sums of monomial antiderivative differences
from the I/H/K/L engines.  Pieces that sit below the first-zero
threshold go to quadrature directly; pieces above it use the recursion
engine; a piece straddling the threshold is split there.

Local bases: each interval stores coefficients of (x - x_left)^d, which
keeps interpolation well conditioned; the expansion to global monomials
(what the antiderivative engines integrate) uses exact binomial
coefficients.

The cubic interpolant uses not-a-knot end conditions, so it reproduces
cubic polynomials exactly and converges at fourth order for smooth f.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .quadrature import _j_signed, adaptive_quad, antiderivative, oscillation_threshold
from .types import IntegralSpec, PiecewisePolynomial

DEFAULT_TOL = 1e-10


def _solve_tridiagonal(lower, diag, upper, rhs):
    """Thomas algorithm; arrays are modified copies, O(n)."""
    n = len(diag)
    c = np.array(upper, dtype=float)
    d = np.array(diag, dtype=float)
    r = np.array(rhs, dtype=float)
    for i in range(1, n):
        w = lower[i - 1] / d[i - 1]
        d[i] -= w * c[i - 1]
        r[i] -= w * r[i - 1]
    out = np.empty(n)
    out[-1] = r[-1] / d[-1]
    for i in range(n - 2, -1, -1):
        out[i] = (r[i] - c[i] * out[i + 1]) / d[i]
    return out


def _cubic_second_derivatives(x, y):
    """Second derivatives M_i of the not-a-knot cubic spline."""
    n = len(x)
    h = np.diff(x)
    if n == 3:
        # single parabola through three points: M is the same constant
        d2 = 2.0 * (
            (y[2] - y[1]) / h[1] - (y[1] - y[0]) / h[0]
        ) / (h[0] + h[1])
        return np.full(3, d2)
    # interior equations: h[i-1] M[i-1] + 2(h[i-1]+h[i]) M[i] + h[i] M[i+1] = r[i]
    # not-a-knot: third derivative continuous at x[1] and x[n-2]:
    #   (M[1]-M[0])/h[0] = (M[2]-M[1])/h[1]
    #   (M[n-1]-M[n-2])/h[n-2] = (M[n-2]-M[n-3])/h[n-3]
    m = n - 2  # unknowns M[1]..M[n-2]
    lower = np.empty(m - 1)
    diag = np.empty(m)
    upper = np.empty(m - 1)
    rhs = np.empty(m)
    for i in range(1, n - 1):
        rhs[i - 1] = 6.0 * ((y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1])
        diag[i - 1] = 2.0 * (h[i - 1] + h[i])
        if i > 1:
            lower[i - 2] = h[i - 1]
        if i < n - 2:
            upper[i - 1] = h[i]
    # eliminate M[0] = (1 + h0/h1) M[1] - (h0/h1) M[2]
    r0 = h[0] / h[1]
    diag[0] += h[0] * (1.0 + r0)
    if m > 1:
        upper[0] -= h[0] * r0
    # eliminate M[n-1] = (1 + h[n-2]/h[n-3]) M[n-2] - (h[n-2]/h[n-3]) M[n-3]
    r1 = h[n - 2] / h[n - 3]
    diag[-1] += h[n - 2] * (1.0 + r1)
    if m > 1:
        lower[-1] -= h[n - 2] * r1
    M = np.empty(n)
    M[1:-1] = _solve_tridiagonal(lower, diag, upper, rhs)
    M[0] = (1.0 + r0) * M[1] - r0 * M[2]
    M[-1] = (1.0 + r1) * M[-2] - r1 * M[-3]
    return M


def build_interpolant(samples, degree: int = 3) -> PiecewisePolynomial:
    """Interpolate (x, f) samples with a piecewise polynomial.

    Parameters
    ----------
    samples : sequence of (x, f) pairs or a 2-column array
        Abscissae strictly increasing and nonnegative; at least two
        samples (four for a proper cubic; two or three fall back to the
        interpolating polynomial of the data).
    degree : {1, 3}
        1 for broken lines, 3 for a not-a-knot cubic spline with
        continuous first and second derivatives.
    """
    arr = np.asarray(list(samples), dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 2:
        raise DomainError("need at least two (x, f) samples")
    x = arr[:, 0]
    y = arr[:, 1]
    if np.any(np.diff(x) <= 0):
        raise DomainError("sample abscissae must be strictly increasing")
    if x[0] < 0:
        raise DomainError("sample abscissae must be nonnegative")
    if degree not in (1, 3):
        raise DomainError("degree must be 1 or 3")
    n = len(x)
    coeffs = []
    if degree == 1 or n == 2:
        for i in range(n - 1):
            h = x[i + 1] - x[i]
            slope = (y[i + 1] - y[i]) / h
            if degree == 1:
                coeffs.append((float(y[i]), float(slope)))
            else:
                coeffs.append((float(y[i]), float(slope), 0.0, 0.0))
    else:
        M = _cubic_second_derivatives(x, y)
        for i in range(n - 1):
            h = x[i + 1] - x[i]
            c0 = y[i]
            c2 = 0.5 * M[i]
            c3 = (M[i + 1] - M[i]) / (6.0 * h)
            c1 = (y[i + 1] - y[i]) / h - h * (2.0 * M[i] + M[i + 1]) / 6.0
            coeffs.append((float(c0), float(c1), float(c2), float(c3)))
    return PiecewisePolynomial(
        breakpoints=tuple(float(v) for v in x),
        coefficients=tuple(coeffs),
        degree=degree,
    )


def _global_coeffs(local, x_left: float):
    """Expand sum_d c_d (x - x0)^d into global monomial coefficients."""
    D = len(local) - 1
    out = [0.0] * (D + 1)
    for d, cd in enumerate(local):
        if cd == 0.0:
            continue
        for m in range(d + 1):
            out[m] += cd * math.comb(d, m) * (-x_left) ** (d - m)
    return out


def _pieces(pp: PiecewisePolynomial, a: float, b: float):
    """Clip the interpolant's intervals to [a, b]."""
    lo, hi = pp.span
    if a < lo - 1e-12 * max(1.0, abs(lo)) or b > hi + 1e-12 * max(1.0, abs(hi)):
        raise DomainError(f"[{a}, {b}] exceeds the interpolant span [{lo}, {hi}]")
    bps = pp.breakpoints
    out = []
    for i in range(len(bps) - 1):
        seg_a = max(a, bps[i])
        seg_b = min(b, bps[i + 1])
        if seg_b > seg_a:
            out.append((i, seg_a, seg_b))
    return out


def _spec_for(kind: str, k, l, alpha, beta, n: int) -> IntegralSpec:
    if kind == "single":
        return IntegralSpec("I", n, l, alpha)
    if k == l and alpha == beta:
        return IntegralSpec("H", n, l, alpha)
    if k == l:
        return IntegralSpec("K", n, l, alpha, beta=beta)
    return IntegralSpec("L", n, l, alpha, k=k, beta=beta)


def _integrate_weighted(pp, kind, k, l, alpha, beta, a, b, tol) -> float:
    if not a < b:
        raise DomainError("need a < b")
    probe = _spec_for(kind, k, l, alpha, beta, 0)
    threshold = oscillation_threshold(probe)
    total = 0.0
    osc_width = math.pi / max(abs(s) for s in probe.scales)
    for i, seg_a, seg_b in _pieces(pp, a, b):
        x_left = pp.breakpoints[i]
        local = pp.coefficients[i]
        # split the piece at the oscillation threshold if it straddles it
        cuts = [seg_a, seg_b]
        if seg_a < threshold < seg_b:
            cuts = [seg_a, threshold, seg_b]
        for lo, hi in zip(cuts[:-1], cuts[1:]):
            if hi <= threshold:
                # quadrature on the raw product; the local basis is exact here
                def f(xs):
                    xs = np.atleast_1d(np.asarray(xs, dtype=float))
                    t = xs - x_left
                    env = np.zeros_like(xs)
                    for c in reversed(local):
                        env = env * t + c
                    return env * _bessel_product(kind, k, l, alpha, beta, xs)

                q = adaptive_quad(
                    f, lo, hi, tol=tol, vectorized=True, initial_max_width=osc_width
                )
                total += q.value
            else:
                for m, cm in enumerate(_global_coeffs(local, x_left)):
                    if cm == 0.0:
                        continue
                    spec = _spec_for(kind, k, l, alpha, beta, m)
                    total += cm * (
                        antiderivative(spec, hi, constants=False)
                        - antiderivative(spec, lo, constants=False)
                    )
    return total


def _bessel_product(kind, k, l, alpha, beta, xs):
    if kind == "single":
        return _j_signed(l, alpha, xs)
    return _j_signed(k, alpha, xs) * _j_signed(l, beta, xs)


def integrate_single(
    f: PiecewisePolynomial, l: int, alpha: float, a: float, b: float, tol: float = DEFAULT_TOL
) -> float:
    """int_a^b f(x) j_l(alpha x) dx for an interpolated prefactor f."""
    if alpha == 0:
        raise DomainError("alpha must be nonzero")
    if l < 0:
        raise DomainError("order must be nonnegative")
    return _integrate_weighted(f, "single", None, l, alpha, None, a, b, tol)


def integrate_product(
    f: PiecewisePolynomial,
    k: int,
    l: int,
    alpha: float,
    beta: float,
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
) -> float:
    """int_a^b f(x) j_k(alpha x) j_l(beta x) dx for an interpolated f.

    Dispatches per piece into the squared (k = l, alpha = beta), same
    order (k = l) or mixed family.
    """
    if alpha == 0 or beta == 0:
        raise DomainError("scale factors must be nonzero")
    if k < 0 or l < 0:
        raise DomainError("orders must be nonnegative")
    return _integrate_weighted(f, "product", k, l, alpha, beta, a, b, tol)
