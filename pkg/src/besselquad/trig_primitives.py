"""Antiderivatives of x^n sin(x) and x^n cos(x) for integer n.

The pair

    X_n(x) = int x^n sin(x) dx        Y_n(x) = int x^n cos(x) dx

satisfies, by integration by parts,

    X_n = n Y_{n-1} - x^n cos(x)      Y_n = x^n sin(x) - n X_{n-1}

stepping down to the anchors X_0 = -cos(x), Y_0 = sin(x).  For n < 0 the
inverted relations

    X_n = (x^{n+1} sin(x) - Y_{n+1}) / (n+1)
    Y_n = (x^{n+1} cos(x) + X_{n+1}) / (n+1)

step away from the anchors X_{-1} = Si(x), Y_{-1} = Ci(x).  Fixing these
four anchors fixes every constant of integration, so the values returned
here are reproducible, not merely correct up to a constant.

Si and Ci are implemented locally: a convergent power series below
``SI_CI_SWITCH`` and rational approximations of the auxiliary functions
f, g above it, with Si = pi/2 - f cos - g sin and Ci = f sin - g cos.

For scaled arguments, X_n(a x)/a^{n+1} = int x^n sin(a x) dx admits a
power series for n >= 0 that is preferred at small |a x|, where the
plain recursion would bury the x dependence under the integration
constant.  No comparable expansion exists for n < -1, so arguments below
``SMALL_ARG_HAZARD`` with n < -1 raise QuadratureRecommendedError rather
than return a value of unknown quality.
"""

from __future__ import annotations

import math

from .errors import DomainError, QuadratureRecommendedError
from .types import TrigPrimitive

EULER_GAMMA = 0.5772156649015328606065120900824024

#: switch between the power series and the asymptotic auxiliary functions
SI_CI_SWITCH = 6.0

#: scaled series is used for |alpha x| at or below this
SERIES_ARG_MAX = 0.5

#: below this argument, primitives with n < -1 refuse to evaluate
SMALL_ARG_HAZARD = 0.1

# cos(n pi / 2) and sin(n pi / 2) for n mod 4 = 0, 1, 2, 3
_COS_HALF = (1, 0, -1, 0)
_SIN_HALF = (0, 1, 0, -1)

# Rational (Pade) approximations for the auxiliary functions
#   f(x) ~ int_0^inf sin(t)/(t + x) dt,  g(x) ~ int_0^inf cos(t)/(t + x) dt
# in powers of y = 1/x^2, accurate to ~1e-16 for x >= 4.  These are the
# classic double precision fits used throughout open source Si/Ci code.
_F_NUM = (
    1.0,
    7.44437068161936700618e2,
    1.96396372895146869801e5,
    2.37750310125431834034e7,
    1.43073403821274636888e9,
    4.33736238870432522765e10,
    6.40533830574022022911e11,
    4.20968180571076940208e12,
    1.00795182980368574617e13,
    4.94816688199951963482e12,
    -4.94701168645415959931e11,
)
_F_DEN = (
    1.0,
    7.46437068161927678031e2,
    1.97865247031583951450e5,
    2.41535670165126845144e7,
    1.47478952192985464958e9,
    4.58595115847765779830e10,
    7.08501308149515401563e11,
    5.06084464593475076774e12,
    1.43468549171581016479e13,
    1.11535493509914254097e13,
)
_G_NUM = (
    1.0,
    8.1359520115168615e2,
    2.35239181626478200e5,
    3.12557570795778731e7,
    2.06297595146763354e9,
    6.83052205423625007e10,
    1.09049528450362786e12,
    7.57664583257834349e12,
    1.81004487464664575e13,
    6.43291613143049485e12,
    -1.36517137670871689e12,
)
_G_DEN = (
    1.0,
    8.19595201151451564e2,
    2.40036752835578777e5,
    3.26026661647090822e7,
    2.23355543278099360e9,
    7.87465017341829930e10,
    1.39866710696414565e12,
    1.17164723371736605e13,
    4.01839087307656620e13,
    3.99653257887490811e13,
)


def _poly(coeffs, y):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * y + c
    return acc


def _aux_fg(x: float) -> tuple:
    y = 1.0 / (x * x)
    f = _poly(_F_NUM, y) / (x * _poly(_F_DEN, y))
    g = y * _poly(_G_NUM, y) / _poly(_G_DEN, y)
    return f, g


def si(x: float) -> float:
    """Sine integral Si(x) = int_0^x sin(t)/t dt for x >= 0."""
    if x < 0:
        raise DomainError("si requires x >= 0")
    if x <= SI_CI_SWITCH:
        # sum (-1)^k x^(2k+1) / ((2k+1) (2k+1)!)
        acc = 0.0
        f = x
        k = 0
        while True:
            term = f / (2 * k + 1)
            acc += term
            k += 1
            f *= -(x * x) / ((2 * k) * (2 * k + 1))
            if abs(f) < 1e-18 * (abs(acc) + 1e-300):
                return acc
    f, g = _aux_fg(x)
    return 0.5 * math.pi - f * math.cos(x) - g * math.sin(x)


def ci(x: float) -> float:
    """Cosine integral Ci(x) = -int_x^inf cos(t)/t dt for x > 0."""
    if x <= 0:
        raise DomainError("ci requires x > 0 (logarithmic divergence at 0)")
    if x <= SI_CI_SWITCH:
        # gamma + ln x + sum (-1)^k x^(2k) / ((2k) (2k)!)
        acc = EULER_GAMMA + math.log(x)
        g = 1.0
        k = 0
        while True:
            k += 1
            g *= -(x * x) / ((2 * k - 1) * (2 * k))
            term = g / (2 * k)
            acc += term
            if abs(g) < 1e-18 * (abs(acc) + 1e-300):
                return acc
    f, g = _aux_fg(x)
    return f * math.sin(x) - g * math.cos(x)


def _si_minus_half_pi(x: float) -> float:
    # Si(x) - pi/2 without forming the near-pi/2 value first
    if x > SI_CI_SWITCH:
        f, g = _aux_fg(x)
        return -f * math.cos(x) - g * math.sin(x)
    return si(x) - 0.5 * math.pi


def eval_pair(
    n: int, x: float, small_arg_check: bool = True, constants: bool = True
) -> TrigPrimitive:
    """Evaluate (X_n(x), Y_n(x)) jointly.

    The two sequences are coupled by the recursions, so computing them
    together costs the same as computing either one.

    Parameters
    ----------
    n : int
        Monomial exponent.
    x : float
        Argument; x > 0, or x = 0 when n >= 0.
    small_arg_check : bool
        With the default True, n < -1 at x < SMALL_ARG_HAZARD raises
        instead of returning a value the caller probably should not
        difference.  The scaled helpers below disable the check: their
        hazard policy lives with the degeneracy guards of the product
        families, and the upward recursion itself stays relatively
        accurate at small arguments (the divergent leading terms are
        real, not canceling).
    constants : bool
        With constants=False the x-independent parts of the frozen
        convention are dropped: the downward chain is anchored at
        X_0 + 1 = 1 - cos(x) (removing the Gamma(n+1) terms) and the
        upward chain at Si(x) - pi/2.  Differences of such values equal
        differences of the full values exactly, but without the large
        constants swamping the x dependence, which is what the definite
        integral evaluators need.

    Raises
    ------
    DomainError
        For x < 0, or x = 0 with n < 0.
    QuadratureRecommendedError
        For n < -1 with 0 < x < SMALL_ARG_HAZARD (see above).
    """
    if x < 0:
        raise DomainError("trig primitives require x >= 0")
    if x == 0 and n < 0:
        raise DomainError("Y_n(0) diverges for n < 0 (and X_n(0) for n < -1)")
    if small_arg_check and n < -1 and x < SMALL_ARG_HAZARD:
        raise QuadratureRecommendedError(
            f"X_{n}/Y_{n} at x={x:g}: no small-argument expansion below "
            f"{SMALL_ARG_HAZARD}; integrate this region by quadrature"
        )
    c = math.cos(x)
    s = math.sin(x)
    if n >= 0:
        X = -c if constants else 2.0 * math.sin(0.5 * x) ** 2
        Y = s
        xk = 1.0
        for k in range(1, n + 1):
            xk *= x
            X, Y = k * Y - xk * c, xk * s - k * X
    else:
        X = si(x) if constants else _si_minus_half_pi(x)
        Y = ci(x)
        for k in range(-2, n - 1, -1):
            p = x ** (k + 1)
            X, Y = (p * s - Y) / (k + 1), (p * c + X) / (k + 1)
    return TrigPrimitive(n=n, x=x, X=X, Y=Y)


def eval_X(n: int, x: float) -> float:
    """X_n(x) = int x^n sin(x) dx under the frozen constant convention."""
    if x == 0 and n == -1:
        return 0.0  # Si(0)
    if x == 0 and n < -1:
        raise DomainError(f"X_{n}(0) is divergent")
    return eval_pair(n, x).X


def eval_Y(n: int, x: float) -> float:
    """Y_n(x) = int x^n cos(x) dx under the frozen constant convention."""
    return eval_pair(n, x).Y


def eval_scaled_X_series(n: int, alpha: float, x: float, constants: bool = True) -> float:
    """Series evaluation of X_n(alpha x) / alpha^(n+1) for n >= 0.

    Returns the same antiderivative of x^n sin(alpha x) as the recursion
    route, constant of integration included:

        -Gamma(n+1) cos(n pi/2) / alpha^(n+1)
        + alpha x^(n+2) sum_m (-(alpha x)^2)^m / ((2m+1)! (n+2m+2))

    Intended for |alpha x| <= SERIES_ARG_MAX; the sum is taken to
    convergence at machine precision, so it stays accurate slightly
    beyond that.  constants=False drops the Gamma term (see eval_pair).
    """
    if n < 0:
        raise DomainError("scaled series requires n >= 0")
    if alpha == 0:
        raise DomainError("alpha must be nonzero")
    u2 = (alpha * x) ** 2
    cos_half = _COS_HALF[n % 4]
    const = 0.0
    if cos_half and constants:
        const = -float(math.factorial(n)) * cos_half / alpha ** (n + 1)
    acc = 0.0
    f = 1.0
    m = 0
    while True:
        acc += f / (n + 2 * m + 2)
        m += 1
        f *= -u2 / ((2 * m) * (2 * m + 1))
        if abs(f) < 1e-18 * (abs(acc) + 1e-300) or m > 60:
            break
    return const + alpha * x ** (n + 2) * acc


def eval_scaled_Y_series(n: int, alpha: float, x: float, constants: bool = True) -> float:
    """Series evaluation of Y_n(alpha x) / alpha^(n+1) for n >= 0.

    Constant term +Gamma(n+1) sin(n pi/2) / alpha^(n+1); see
    eval_scaled_X_series.
    """
    if n < 0:
        raise DomainError("scaled series requires n >= 0")
    if alpha == 0:
        raise DomainError("alpha must be nonzero")
    u2 = (alpha * x) ** 2
    sin_half = _SIN_HALF[n % 4]
    const = 0.0
    if sin_half and constants:
        const = float(math.factorial(n)) * sin_half / alpha ** (n + 1)
    acc = 0.0
    f = 1.0
    m = 0
    while True:
        acc += f / (n + 2 * m + 1)
        m += 1
        f *= -u2 / ((2 * m - 1) * (2 * m))
        if abs(f) < 1e-18 * (abs(acc) + 1e-300) or m > 60:
            break
    return const + x ** (n + 1) * acc


def int_pow_sin(m: int, c: float, x: float, constants: bool = True) -> float:
    """int x^m sin(c x) dx for c != 0 under the frozen convention.

    Equals sign(c) |c|^(-m-1) X_m(|c| x); routed through the power series
    when m >= 0 and |c x| <= SERIES_ARG_MAX.
    """
    if c == 0:
        raise DomainError("c must be nonzero")
    u = abs(c) * x
    if m >= 0 and u <= SERIES_ARG_MAX:
        return eval_scaled_X_series(m, c, x, constants)
    if m == -1 and u == 0.0:
        xv = 0.0 if constants else -0.5 * math.pi
    else:
        xv = eval_pair(m, u, small_arg_check=False, constants=constants).X
    v = abs(c) ** (-m - 1) * xv
    return v if c > 0 else -v


def int_pow_cos(m: int, c: float, x: float, constants: bool = True) -> float:
    """int x^m cos(c x) dx for c != 0; equals |c|^(-m-1) Y_m(|c| x)."""
    if c == 0:
        raise DomainError("c must be nonzero")
    u = abs(c) * x
    if m >= 0 and u <= SERIES_ARG_MAX:
        return eval_scaled_Y_series(m, c, x, constants)
    return abs(c) ** (-m - 1) * eval_pair(m, u, small_arg_check=False, constants=constants).Y
