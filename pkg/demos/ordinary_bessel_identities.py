"""
Ordinary Bessel translations
============================

Every spherical result has an ordinary Bessel (J_n) counterpart, but
those recursions do not terminate in elementary functions, so the J
forms live here as verifiable identities rather than an evaluation
engine.  Each one is checked numerically: closed forms by differencing
against quadrature, recursion relations by evaluating both sides.
"""

from besselquad import AppendixIdentity, besselJ, default_suite, verify_identity

print("J_0(1) =", besselJ(0, 1.0))
print("J_5(10) =", besselJ(5, 10.0))

# A closed form: int x^(l+1) J_l dx = x^(l+1) J_{l+1}(x)
r = verify_identity(AppendixIdentity("single-x^(l+1)", l=2), 1.0, 15.0)
print("\nresidual of int x^(l+1) J_l identity:", r)

# A recursion-type relation with integrals on both sides:
r = verify_identity(AppendixIdentity("same-recursion", n=2, l=1, alpha=1.0, beta=2.0), 1.0, 10.0)
print("residual of the same-order recursion relation:", r)

# The full default suite: 21 identities, three parameter settings each.
print("\nfull suite:")
worst = ("", 0.0)
for identity, (a, b) in default_suite():
    res = verify_identity(identity, a, b)
    if res > worst[1]:
        worst = (identity.id, res)
print("  cases run:", len(default_suite()))
print("  worst residual:", worst[1], "on", worst[0])
