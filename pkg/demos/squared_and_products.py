"""
Squared and product integrals
=============================

The H family handles int x^n j_l(x)^2 dx, K handles equal orders with
two scales, and L the fully general x^n j_k(a x) j_l(b x).  All three
reduce to order-zero trigonometric bases through their own recursions.
"""

import math

from besselquad import (
    EULER_GAMMA,
    IntegralSpec,
    definite_integral,
    eval_H,
    eval_K,
    eval_L,
    identity_residual,
)

# H^1_0 is the one base case with a logarithm; its small-x limit is a
# clean constant built from the Euler-Mascheroni number.
print("H^1_0(1e-4)      =", eval_H(1, 0, 1e-4).value)
print("-(gamma+ln2)/2   =", -(EULER_GAMMA + math.log(2)) / 2)

# Orthogonality of different orders at equal argument: the definite
# integral over [0, X] decays like 1/X.
for X in (1e2, 1e3):
    r = definite_integral(IntegralSpec("L", 0, 2, 1.0, k=0, beta=1.0), 0.0, X)
    print(f"int_0^{X:g} j_0 j_2 dx = {r.value:+.2e}")

# The classic tails: int_0^inf j_l^2 = pi/(2(2l+1)) and the two-scale
# version picks up a (k_min/k_max)^l / k_max factor.
for l in (0, 1, 5):
    r = definite_integral(IntegralSpec("H", 0, l), 0.0, 1e4)
    print(f"int_0^1e4 j_{l}^2 dx = {r.value:.8f}   pi/(2(2l+1)) = {math.pi / (2 * (2 * l + 1)):.8f}")
r = definite_integral(IntegralSpec("K", 0, 1, 1.0, beta=2.0), 0.0, 1e4)
print(f"int_0^1e4 j_1(x) j_1(2x) dx = {r.value:.8f}   pi/24 = {math.pi / 24:.8f}")

# K near equal scales approaches the H limit smoothly:
a, b = 1.0, 10.0
for eps in (1e-1, 1e-2, 1e-3):
    kv = eval_K(2, 1, b, 1.0, 1.0 + eps).value - eval_K(2, 1, a, 1.0, 1.0 + eps).value
    print(f"eps = {eps:.0e}:  K-difference = {kv:.8f}")
hv = (
    definite_integral(IntegralSpec("H", 2, 1), a, b, strategy="recursion").value
)
print(f"H limit          = {hv:.8f}")

# The one closed relation valid for general scales and orders ties L^2
# and L^0 to pure boundary terms; its residual is a library self-check.
res = identity_residual(1, 3, 1.0, 10.0, 0.7, 1.3)
print("\ngeneral-scale identity residual:", res)

# Mixed orders and scales, evaluated at a point:
print("L^1_{2,5}(9; 1.1, 0.6) =", eval_L(1, 2, 5, 9.0, 1.1, 0.6).value)
