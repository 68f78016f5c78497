"""Antiderivatives of x^n j_l(a x) j_l(b x) with equal orders, a != b.

The K family.  Writing K^n_l(x; a, b) = int x^n j_l(a x) j_l(b x) dx,
the l = 0 base comes from the product-to-sum identity

    K^n_0 = [ int x^{n-2} cos((a-b)x) dx - int x^{n-2} cos((a+b)x) dx ] / (2ab)

and levels above it satisfy

    K^n_l = [ (a^2+b^2) K^n_{l-1} + (n-2)(n+2l-3) K^{n-2}_{l-1}
              + (2-n) x^{n-1} j_{l-1}(ax) j_{l-1}(bx)
              - x^n (b j_{l-1}(ax) j_l(bx) + a j_l(ax) j_{l-1}(bx)) ] / (2ab)

The only printed closed form is n = 2.

When |a - b| shrinks, the base terms divide a nearly flat cosine
primitive by a high power of (a - b); with n >= 2 the series route in
trig_primitives absorbs that, otherwise the evaluation refuses with
NearDegenerateError so callers can fall back to quadrature.
"""

from __future__ import annotations

from .errors import DomainError, NearDegenerateError
from .sph_bessel import j_array, j_extended
from .trig_primitives import int_pow_cos
from .types import AntiderivativeValue

#: relative |alpha - beta| guard below which the base case is hazardous
DEGENERACY_GUARD = 1e-6


def _canonical_scales(l: int, alpha: float, beta: float) -> tuple:
    """Fold parity signs and order the scales; returns (sign, a, b), a >= b."""
    sign = 1.0
    if alpha < 0:
        alpha = -alpha
        if l % 2:
            sign = -sign
    if beta < 0:
        beta = -beta
        if l % 2:
            sign = -sign
    if alpha < beta:
        alpha, beta = beta, alpha
    return sign, alpha, beta


def _check_degeneracy(n: int, l: int, a: float, b: float) -> None:
    if abs(a - b) < DEGENERACY_GUARD * (abs(a) + abs(b)):
        # base cells reach exponent n - 2l, trig index n - 2l - 2
        if n - 2 * l - 2 < 0:
            raise NearDegenerateError(
                f"|alpha - beta| = {abs(a - b):.3g} is below the degeneracy "
                f"guard and the n = {n}, l = {l} base terms admit no series; "
                "evaluate this integral by quadrature"
            )


def _K_base(m: int, x: float, a: float, b: float, constants: bool = True) -> float:
    return (
        int_pow_cos(m - 2, a - b, x, constants) - int_pow_cos(m - 2, a + b, x, constants)
    ) / (2.0 * a * b)


def _closed_K2(lam: int, x: float, a: float, b: float, jta, jtb) -> float:
    ja = jta[lam]
    jb = jtb[lam]
    jam = jta[lam - 1] if lam >= 1 else j_extended(-1, a * x)
    jbm = jtb[lam - 1] if lam >= 1 else j_extended(-1, b * x)
    return x * x / (a * a - b * b) * (b * ja * jbm - a * jam * jb)


def _K(
    n: int,
    l: int,
    x: float,
    a: float,
    b: float,
    closed_forms: bool = True,
    constants: bool = True,
) -> tuple:
    """Float core of K^n_l(x; a, b); a > b > 0 canonical.  Returns (value, path)."""
    jta = j_array(l, a * x)
    jtb = j_array(l, b * x)
    memo: dict = {}
    used_closed = False

    def cell(m: int, lam: int) -> float:
        nonlocal used_closed
        key = (m, lam)
        if key in memo:
            return memo[key]
        if lam == 0:
            v = _K_base(m, x, a, b, constants)
        elif closed_forms and m == 2:
            v = _closed_K2(lam, x, a, b, jta, jtb)
            used_closed = True
        else:
            jam, jal = jta[lam - 1], jta[lam]
            jbm, jbl = jtb[lam - 1], jtb[lam]
            v = (
                (a * a + b * b) * cell(m, lam - 1)
                + (m - 2) * (m + 2 * lam - 3) * cell(m - 2, lam - 1)
                + (2 - m) * x ** (m - 1) * jam * jbm
                - x**m * (b * jam * jbl + a * jal * jbm)
            ) / (2.0 * a * b)
        memo[key] = v
        return v

    v = cell(n, l)
    if l == 0:
        return v, "base"
    return v, "recursion+closed" if used_closed else "recursion"


def eval_K(
    n: int,
    l: int,
    x: float,
    alpha: float,
    beta: float,
    closed_forms: bool = True,
    constants: bool = True,
) -> AntiderivativeValue:
    """K^n_l(x; alpha, beta) = int x^n j_l(alpha x) j_l(beta x) dx.

    Symmetric in (alpha, beta); the implementation canonicalizes the
    order so swapped calls return bit-identical values.  Equal scales
    (after parity folding) belong to the squared family and are
    rejected.

    Raises
    ------
    DomainError
        x <= 0, zero scale, or |alpha| = |beta|.
    NearDegenerateError
        Scales under the degeneracy guard with no series route.
    """
    if l < 0:
        raise DomainError("order must be nonnegative")
    if x <= 0:
        raise DomainError("antiderivative evaluation requires x > 0")
    if alpha == 0 or beta == 0:
        raise DomainError("scale factors must be nonzero")
    sign, a, b = _canonical_scales(l, alpha, beta)
    if a == b:
        raise DomainError(
            "equal scale magnitudes reduce to the squared family; use eval_H_scaled"
        )
    _check_degeneracy(n, l, a, b)
    v, path = _K(n, l, x, a, b, closed_forms, constants)
    return AntiderivativeValue(sign * v, path)


def closed_K2(l: int, x: float, alpha: float, beta: float) -> AntiderivativeValue:
    """The one printed closed form,

        K^2_l = x^2 / (a^2 - b^2) [b j_l(ax) j_{l-1}(bx) - a j_{l-1}(ax) j_l(bx)]

    valid for l >= 1 directly and for l = 0 with j_{-1}(x) = cos(x)/x.
    """
    if l < 0:
        raise DomainError("order must be nonnegative")
    if x <= 0:
        raise DomainError("closed forms require x > 0")
    if alpha == 0 or beta == 0:
        raise DomainError("scale factors must be nonzero")
    sign, a, b = _canonical_scales(l, alpha, beta)
    if a == b:
        raise DomainError("closed_K2 requires distinct scale magnitudes")
    jta = j_array(l, a * x)
    jtb = j_array(l, b * x)
    return AntiderivativeValue(sign * _closed_K2(l, x, a, b, jta, jtb), "closed:K2")
