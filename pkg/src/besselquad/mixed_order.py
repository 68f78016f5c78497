"""Antiderivatives of x^n j_k(a x) j_l(b x) with different orders.

The L family.  The larger order is lowered with

    L^n_{kl}(x; a, b) = (2l-1)/b * L^{n-1}_{k,l-1}(x; a, b) - L^n_{k,l-2}(x; a, b)

until the orders meet (the K family applies) or become adjacent.  For
adjacent orders and n != 1,

    L^n_{l-1,l} = [x^{n+1} j_{l-1}(ax) j_l(bx) + a K^{n+1}_l - b K^{n+1}_{l-1}] / (n-1)

while n = 1 descends the printed order-lowering ladder to the explicit
trigonometric base

    L^n_{01}(x; a, b) = [int x^{n-3} cos((a-b)x) - int x^{n-3} cos((a+b)x)] / (2ab^2)
                      - [int x^{n-2} sin((a-b)x) + int x^{n-2} sin((a+b)x)] / (2ab)

(the same ladder also serves as the pure-recursion reference path for
the closure).  Equal arguments a = b get their own engine with five
printed closed forms, the simpler adjacent-order rule through the
squared family, and the equal-argument base.

Canonicalization: parity signs of negative scales are folded out front
(j_m(-u) = (-1)^m j_m(u)) and (k, a) is swapped with (l, b) when k > l,
so symmetry under the joint swap is exact.
"""

from __future__ import annotations

import math

from .errors import DomainError, NearDegenerateError
from .same_order import DEGENERACY_GUARD, _check_degeneracy, _K
from .sph_bessel import j_array, j_extended
from .squared_bessel import _H
from .trig_primitives import eval_pair, int_pow_cos, int_pow_sin
from .types import AntiderivativeValue

_EQUAL_CLOSED_KINDS = ("L1", "L2", "L3", "L4", "L5")


# ---------------------------------------------------------------------------
# general scales
# ---------------------------------------------------------------------------

def _K_value(
    m: int, order: int, x: float, a: float, b: float, closed_forms: bool, constants: bool = True
) -> float:
    aa, bb = (a, b) if a >= b else (b, a)
    _check_degeneracy(m, order, aa, bb)
    return _K(m, order, x, aa, bb, closed_forms, constants)[0]


def _base_L01(n: int, x: float, a: float, b: float, constants: bool = True) -> float:
    for c in (a - b, a + b):
        if c == 0:
            raise DomainError("base_L01 requires |alpha| != |beta|; use the equal-argument path")
        if abs(c) < DEGENERACY_GUARD * (abs(a) + abs(b)) and n - 3 < 0:
            raise NearDegenerateError(
                f"scale combination {c:.3g} under the degeneracy guard with "
                f"n = {n} < 3; evaluate by quadrature"
            )
    cos_part = (
        int_pow_cos(n - 3, a - b, x, constants) - int_pow_cos(n - 3, a + b, x, constants)
    ) / (2.0 * a * b * b)
    sin_part = (
        int_pow_sin(n - 2, a - b, x, constants) + int_pow_sin(n - 2, a + b, x, constants)
    ) / (2.0 * a * b)
    return cos_part - sin_part


def base_L01(n: int, x: float, alpha: float, beta: float) -> AntiderivativeValue:
    """The terminal case L^n_{01}(x; alpha, beta) = int x^n j_0(ax) j_1(bx) dx.

    Derived purely from product-to-sum trig identities, so any nonzero
    scales with |alpha| != |beta| are accepted.
    """
    if x <= 0:
        raise DomainError("antiderivative evaluation requires x > 0")
    if alpha == 0 or beta == 0:
        raise DomainError("scale factors must be nonzero")
    return AntiderivativeValue(_base_L01(n, x, alpha, beta), "base")


def adjacent_closure(
    n: int, l: int, x: float, alpha: float, beta: float, closed_forms: bool = True
) -> AntiderivativeValue:
    """Closure for adjacent orders, L^n_{l-1,l}(x; alpha, beta), n != 1.

    Requires positive scales (eval_L folds parity before landing here)
    and l >= 1.
    """
    if n == 1:
        raise DomainError("adjacent closure divides by n - 1; use the n = 1 ladder")
    if l < 1:
        raise DomainError("adjacent closure requires l >= 1")
    if x <= 0:
        raise DomainError("antiderivative evaluation requires x > 0")
    if alpha <= 0 or beta <= 0:
        raise DomainError("adjacent_closure expects positive scales")
    jkm = j_array(l - 1, alpha * x)[l - 1]
    jl = j_array(l, beta * x)[l]
    v = (
        x ** (n + 1) * jkm * jl
        + alpha * _K_value(n + 1, l, x, alpha, beta, closed_forms)
        - beta * _K_value(n + 1, l - 1, x, alpha, beta, closed_forms)
    ) / (n - 1)
    return AntiderivativeValue(v, "closure")


def _adjacent_ladder(
    m: int, k: int, x: float, a: float, b: float, closed_forms: bool, constants: bool = True
) -> float:
    """L^m_{k,k+1}(x; a, b) by repeated order lowering down to L^m_{01}.

    Each step swaps the scale order through L^m_{k,k-1}(x;a,b) =
    L^m_{k-1,k}(x;b,a).
    """
    if k == 0:
        return _base_L01(m, x, a, b, constants)
    return (2 * k + 1) / b * _K_value(
        m - 1, k, x, a, b, closed_forms, constants
    ) - _adjacent_ladder(m, k - 1, x, b, a, closed_forms, constants)


def adjacent_by_recursion(
    n: int, l: int, x: float, alpha: float, beta: float
) -> AntiderivativeValue:
    """Pure-recursion reference for the adjacent-order case (no closure,
    no closed forms inside K); used to validate adjacent_closure."""
    if l < 1:
        raise DomainError("adjacent orders require l >= 1")
    if x <= 0:
        raise DomainError("antiderivative evaluation requires x > 0")
    if alpha <= 0 or beta <= 0:
        raise DomainError("adjacent_by_recursion expects positive scales")
    return AntiderivativeValue(
        _adjacent_ladder(n, l - 1, x, alpha, beta, False), "ladder"
    )


def _L_general(
    n: int, k: int, l: int, x: float, a: float, b: float, closed_forms: bool, constants: bool = True
) -> float:
    """Float core for k < l, positive distinct-order scales."""
    jta = j_array(max(k, l), a * x)
    jtb = j_array(max(k, l), b * x)
    memo: dict = {}

    def cell(m: int, lam: int) -> float:
        key = (m, lam)
        if key in memo:
            return memo[key]
        if lam == k:
            v = _K_value(m, k, x, a, b, closed_forms, constants)
        elif lam == k + 1:
            if k == 0:
                v = _base_L01(m, x, a, b, constants)
            elif m != 1 and closed_forms:
                v = (
                    x ** (m + 1) * jta[k] * jtb[lam]
                    + a * _K_value(m + 1, lam, x, a, b, closed_forms, constants)
                    - b * _K_value(m + 1, k, x, a, b, closed_forms, constants)
                ) / (m - 1)
            else:
                v = _adjacent_ladder(m, k, x, a, b, closed_forms, constants)
        else:
            v = (2 * lam - 1) / b * cell(m - 1, lam - 1) - cell(m, lam - 2)
        memo[key] = v
        return v

    return cell(n, l)


# ---------------------------------------------------------------------------
# equal arguments
# ---------------------------------------------------------------------------

def base_L01_equal(n: int, x: float, constants: bool = True) -> AntiderivativeValue:
    """Equal-argument base L^n_{01}(x) = int x^n j_0(x) j_1(x) dx,

        (1/2) int x^{n-3} dx - 2^{1-n} Y_{n-3}(2x) - 2^{-n} X_{n-2}(2x)

    with the power-rule integral turning into (ln x)/2 at n = 2.
    """
    if x <= 0:
        raise DomainError("antiderivative evaluation requires x > 0")
    if n == 2:
        poly = 0.5 * math.log(x)
    else:
        poly = 0.5 * x ** (n - 2) / (n - 2)
    pair_y = eval_pair(n - 3, 2.0 * x, constants=constants)
    pair_x = eval_pair(n - 2, 2.0 * x, constants=constants)
    v = poly - 2.0 ** (1 - n) * pair_y.Y - 2.0 ** (-n) * pair_x.X
    return AntiderivativeValue(v, "base")


def _closed_L_equal(kind: str, k: int, l: int, x: float, jt, constants: bool = True) -> float:
    """Printed equal-argument closed forms; cells assume k <= l."""
    jk, jl = jt[k], jt[l]
    jkm = jt[k - 1] if k >= 1 else j_extended(-1, x)
    jlm = jt[l - 1] if l >= 1 else j_extended(-1, x)
    jkp, jlp = jt[k + 1], jt[l + 1]
    if kind == "L1":  # n = 0
        if k == l:
            raise DomainError("L1 needs k != l (k = l is the squared family)")
        return (
            x
            / (k * (k + 1) - l * (l + 1))
            * (x * (jkm * jl - jk * jlm) + (l - k) * jk * jl)
        )
    if kind == "L2":  # n = -1
        if k + l == 0 or abs(k - l) == 1:
            raise DomainError("L2 denominators vanish for k + l = 0 or |k - l| = 1")
        return (
            jk * jl / (k + l)
            - x * jkp * jl / ((1 + k - l) * (k + l))
            - x * jk * jlp / ((1 + l - k) * (k + l))
            + 2.0
            * x
            * x
            * (jkp * jlp + jk * jl)
            / ((k + l) * (2 + k + l) * (1 + k - l) * (1 + l - k))
        )
    if kind == "L3":  # n = 1 - k - l
        if k + l == 0:
            raise DomainError("L3 requires k + l >= 1")
        const = 0.0
        if constants:
            const = math.pi / (
                2.0 ** (k + l + 1) * (k + l) * math.gamma(k + 0.5) * math.gamma(l + 0.5)
            )
        return const - x ** (2 - k - l) * (jkm * jlm + jk * jl) / (2.0 * (k + l))
    if kind == "L4":  # n = l - k + 2
        return x ** (l - k + 3) / (2.0 * (k - l - 1)) * (jkm * jlp - jk * jl)
    if kind == "L5":  # n = k + l + 3
        return x ** (k + l + 4) / (2.0 * (k + l + 2)) * (jkp * jlp + jk * jl)
    raise DomainError(f"unknown closed form {kind!r}")


def closed_L_equal(kind: str, k: int, l: int, x: float) -> AntiderivativeValue:
    """Equal-argument closed forms for L^n_{kl}(x) at special exponents:

    L1: n = 0          L2: n = -1         L3: n = 1 - k - l
    L4: n = l - k + 2  L5: n = k + l + 3
    """
    if kind not in _EQUAL_CLOSED_KINDS:
        raise DomainError(f"unknown closed form {kind!r}")
    if k < 0 or l < 0:
        raise DomainError("orders must be nonnegative")
    if x <= 0:
        raise DomainError("closed forms require x > 0")
    if k > l:
        k, l = l, k
    jt = j_array(l + 1, x)
    return AntiderivativeValue(_closed_L_equal(kind, k, l, x, jt), f"closed:{kind}")


def _equal_closed_kind(m: int, k: int, lam: int) -> str | None:
    if m == 0 and k != lam:
        return "L1"
    if m == -1 and k + lam >= 1 and abs(k - lam) != 1:
        return "L2"
    if m == 1 - k - lam and k + lam >= 1:
        return "L3"
    if m == lam - k + 2:
        return "L4"
    if m == k + lam + 3:
        return "L5"
    return None


def _L_equal(n: int, k: int, l: int, u: float, closed_forms: bool, constants: bool = True) -> float:
    """Float core of L^n_{kl}(u) at equal unit scales; assumes k <= l."""
    if k == l:
        return _H(n, k, u, closed_forms, constants)[0]
    jt = j_array(l + 1, u)
    memo: dict = {}

    def cell(m: int, lam: int) -> float:
        key = (m, lam)
        if key in memo:
            return memo[key]
        if lam == k:
            v = _H(m, k, u, closed_forms, constants)[0]
        else:
            kind = _equal_closed_kind(m, k, lam) if closed_forms else None
            if kind is not None:
                v = _closed_L_equal(kind, k, lam, u, jt, constants)
            elif lam == k + 1:
                # adjacent orders through the squared family
                v = (k + 0.5 * m) * _H(m - 1, k, u, closed_forms, constants)[0] - 0.5 * u**m * jt[k] ** 2
            else:
                v = (2 * lam - 1) * cell(m - 1, lam - 1) - cell(m, lam - 2)
        memo[key] = v
        return v

    return cell(n, l)


def eval_L_equal_args(
    n: int, k: int, l: int, x: float, closed_forms: bool = True, constants: bool = True
) -> AntiderivativeValue:
    """L^n_{kl}(x) = int x^n j_k(x) j_l(x) dx (equal unit arguments).

    Dispatch priority: printed closed form where the exponent pattern
    matches, the adjacent-order rule through H when l = k + 1, plain
    order lowering otherwise.  Symmetric under k <-> l.
    """
    if k < 0 or l < 0:
        raise DomainError("orders must be nonnegative")
    if x <= 0:
        raise DomainError("antiderivative evaluation requires x > 0")
    if k > l:
        k, l = l, k
    return AntiderivativeValue(_L_equal(n, k, l, x, closed_forms, constants), "equal-args")


# ---------------------------------------------------------------------------
# top-level dispatch
# ---------------------------------------------------------------------------

def eval_L(
    n: int,
    k: int,
    l: int,
    x: float,
    alpha: float,
    beta: float,
    closed_forms: bool = True,
    constants: bool = True,
) -> AntiderivativeValue:
    """L^n_{kl}(x; alpha, beta) = int x^n j_k(alpha x) j_l(beta x) dx.

    Handles every order/scale combination: equal scales route through
    the equal-argument engine (scaled by alpha^{-1-n}), equal orders
    route through K, and the general case runs the order-lowering
    recursion down to K, the adjacent closure, or the L01 base.

    Raises
    ------
    DomainError
        x <= 0, a zero scale, or a negative order.
    NearDegenerateError
        |alpha - beta| under the degeneracy guard where the base terms
        admit no series route.
    """
    if k < 0 or l < 0:
        raise DomainError("orders must be nonnegative")
    if x <= 0:
        raise DomainError("antiderivative evaluation requires x > 0")
    if alpha == 0 or beta == 0:
        raise DomainError("scale factors must be nonzero")
    sign = 1.0
    if alpha < 0:
        alpha = -alpha
        if k % 2:
            sign = -sign
    if beta < 0:
        beta = -beta
        if l % 2:
            sign = -sign
    if k > l:
        k, l = l, k
        alpha, beta = beta, alpha
    if alpha == beta:
        v = alpha ** (-1 - n) * _L_equal(n, k, l, alpha * x, closed_forms, constants)
        return AntiderivativeValue(sign * v, "equal-args")
    if k == l:
        return AntiderivativeValue(
            sign * _K_value(n, k, x, alpha, beta, closed_forms, constants), "same-order"
        )
    return AntiderivativeValue(
        sign * _L_general(n, k, l, x, alpha, beta, closed_forms, constants), "recursion"
    )


def identity_residual(
    k: int, l: int, a: float, b: float, alpha: float, beta: float
) -> float:
    """Relative residual of the one general-scale closed relation,

        (alpha^2 - beta^2) L^2_{kl} + [l(l+1) - k(k+1)] L^0_{kl}
            = beta x^2 j_k(ax) j_{l-1}(bx) - alpha x^2 j_{k-1}(ax) j_l(bx)
              + (k - l) x j_k(ax) j_l(bx)

    evaluated as a definite integral over [a, b].  Returns
    |LHS - RHS| / max(1, |RHS|); expected below 1e-9 when the library is
    consistent.  Degenerate parameter combinations make both sides
    vanish identically.
    """
    if not 0 < a < b:
        raise DomainError("need 0 < a < b")
    c2 = alpha * alpha - beta * beta
    c0 = l * (l + 1) - k * (k + 1)
    lhs = 0.0
    if c2 != 0.0:
        lhs += c2 * (
            eval_L(2, k, l, b, alpha, beta).value - eval_L(2, k, l, a, alpha, beta).value
        )
    if c0 != 0:
        lhs += c0 * (
            eval_L(0, k, l, b, alpha, beta).value - eval_L(0, k, l, a, alpha, beta).value
        )

    def boundary(x: float) -> float:
        jk = j_array(k, alpha * x)[k]
        jl = j_array(l, beta * x)[l]
        jlm = j_extended(l - 1, beta * x)
        jkm = j_extended(k - 1, alpha * x)
        return (
            beta * x * x * jk * jlm
            - alpha * x * x * jkm * jl
            + (k - l) * x * jk * jl
        )

    rhs = boundary(b) - boundary(a)
    return abs(lhs - rhs) / max(1.0, abs(rhs))
