"""
Tabulated prefactors
====================

The motivating use case: f(x) is known only at sample points (say, from
a previous numerical computation) and slowly varying, and the target is
int f(x) j_l(a x) dx or int f(x) j_k(a x) j_l(b x) dx over a span with
thousands of oscillations.  A piecewise polynomial stands in for f, and
every piece reduces to monomial antiderivatives.
"""

import math

import numpy as np

from besselquad import build_interpolant, integrate_product, integrate_single

# A smooth, slowly decaying prefactor sampled on a coarse grid.
f = lambda x: 1.0 / (1.0 + (x / 50.0) ** 2)
xs = np.linspace(0.0, 300.0, 121)
interp = build_interpolant(np.column_stack([xs, f(xs)]), degree=3)

print("samples:", len(xs), " span:", interp.span)
print("interpolant at 77.7:", interp(77.7), " exact:", f(77.7))

# Single-Bessel weighted integral over ~100 oscillations.
v = integrate_single(interp, 2, 1.0, 0.0, 300.0)
print("\nint_0^300 f(x) j_2(x) dx      =", v)

# Product of two Bessel factors with different orders and scales.
v = integrate_product(interp, 1, 3, 1.0, 2.0, 0.0, 300.0)
print("int_0^300 f(x) j_1(x) j_3(2x) =", v)

# Constant prefactor reproduces the known tails.
unit = build_interpolant([(0.0, 1.0), (1e4, 1.0)], degree=1)
v = integrate_product(unit, 1, 1, 1.0, 1.0, 0.0, 1e4)
print("\nunit prefactor, int_0^1e4 j_1^2 =", v, " (pi/6 =", math.pi / 6, ")")

# Refining the sample grid converges at the interpolation order
# (fourth, for the cubic): the integral barely moves once f is resolved.
for npts in (31, 61, 121):
    g = np.linspace(0.0, 300.0, npts)
    vi = integrate_single(
        build_interpolant(np.column_stack([g, f(g)]), degree=3), 2, 1.0, 0.0, 300.0
    )
    print(f"grid {npts:4d} points: integral = {vi:.12f}")
