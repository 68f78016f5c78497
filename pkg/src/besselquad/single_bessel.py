"""Antiderivatives of x^n j_l(x), the single spherical Bessel family.

Writing I^n_l(x) = int x^n j_l(x) dx, the derivative recursion for j_l
gives

    I^n_l = (l + n - 1) I^{n-1}_{l-1} - x^n j_{l-1}(x)

which walks (l - i, n - i) down to the l = 0 base I^m_0 = X_{m-1}.  The
walk truncates early when a coefficient (l + n - 1 - 2i) vanishes, which
needs l + n odd and 1 - l <= n <= l - 1.  Scaled arguments reduce via
int x^n j_l(a x) dx = a^(-n-1) I^n_l(a x), with parity folding the sign
of a negative scale out front.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .sph_bessel import j, j_array
from .trig_primitives import eval_pair
from .types import AntiderivativeValue


def _trig_X(m: int, x: float, constants: bool) -> float:
    if m == -1 and x == 0.0 and constants:
        return 0.0
    return eval_pair(m, x, constants=constants).X


def _I(n: int, l: int, x: float, truncate: bool = True, constants: bool = True) -> float:
    """Float core of I^n_l(x); assumes x > 0, l >= 0."""
    if l == 0:
        return _trig_X(n - 1, x, constants)
    jt = j_array(l - 1, x)
    total = 0.0
    coef = 1  # exact integer product of recursion coefficients
    for i in range(l):
        total -= coef * x ** (n - i) * jt[l - 1 - i]
        coef *= l + n - 1 - 2 * i
        if truncate and coef == 0:
            return total
    return total + coef * _trig_X(n - l - 1, x, constants)


def eval_I(
    n: int, l: int, x: float, truncate: bool = True, constants: bool = True
) -> AntiderivativeValue:
    """I^n_l(x) = int x^n j_l(x) dx under the frozen constant convention.

    Parameters
    ----------
    n : int
        Monomial exponent.
    l : int
        Bessel order, l >= 0.
    x : float
        Evaluation point, x > 0.
    truncate : bool
        Stop the recursion once a vanishing coefficient kills every
        deeper term (the default).  With truncate=False the walk always
        reaches the trigonometric base; the two paths agree because the
        skipped terms carry an exact zero factor.
    constants : bool
        constants=False drops the x-independent constants of
        integration; differences over an interval are unchanged but
        better conditioned.
    """
    if l < 0:
        raise DomainError("order must be nonnegative")
    if x <= 0:
        raise DomainError("antiderivative evaluation requires x > 0")
    path = "recursion" if l else "base"
    return AntiderivativeValue(_I(n, l, x, truncate, constants), path)


def eval_I_scaled(
    n: int, l: int, x: float, alpha: float, constants: bool = True
) -> AntiderivativeValue:
    """int x^n j_l(alpha x) dx = alpha^(-n-1) I^n_l(alpha x).

    Negative alpha folds through parity, j_l(-u) = (-1)^l j_l(u).
    """
    if alpha == 0:
        raise DomainError("alpha must be nonzero")
    if l < 0:
        raise DomainError("order must be nonnegative")
    if x <= 0:
        raise DomainError("antiderivative evaluation requires x > 0")
    a = abs(alpha)
    sign = 1.0 if alpha > 0 or l % 2 == 0 else -1.0
    return AntiderivativeValue(
        sign * a ** (-n - 1) * _I(n, l, a * x, constants=constants), "recursion"
    )


def truncates_early(n: int, l: int) -> bool:
    """True when the I^n_l recursion terminates before reaching l = 0."""
    return (l + n) % 2 == 1 and 1 - l <= n <= l - 1


def closed_I(kind: str, l: int, x: float) -> AntiderivativeValue:
    """Printed closed forms for special exponents.

    I1:  int x^(2+l) j_l dx = x^(2+l) j_{l+1}(x)
    I2:  int x^(4+l) j_l dx = x^(3+l) [(2l+3) j_{l+2}(x) - x j_{l+3}(x)]
    I3:  int x^(1-l) j_l dx = sqrt(pi) 2^(-l) / Gamma(l + 1/2)
                              - x^(1-l) j_{l-1}(x),   l >= 1

    I3 at l = 0 reduces to I^1_0, which the recursion base already
    covers, so it is rejected here.
    """
    if l < 0:
        raise DomainError("order must be nonnegative")
    if x <= 0:
        raise DomainError("closed forms require x > 0")
    if kind == "I1":
        v = x ** (2 + l) * j(l + 1, x)
    elif kind == "I2":
        jt = j_array(l + 3, x)
        v = x ** (3 + l) * ((2 * l + 3) * jt[l + 2] - x * jt[l + 3])
    elif kind == "I3":
        if l < 1:
            raise DomainError("I3 requires l >= 1; use the recursion for l = 0")
        v = math.sqrt(math.pi) * 2.0 ** (-l) / math.gamma(l + 0.5) - x ** (1 - l) * j(l - 1, x)
    else:
        raise DomainError(f"unknown closed form {kind!r}")
    return AntiderivativeValue(v, f"closed:{kind}")
