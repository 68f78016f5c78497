"""Stable evaluation of spherical Bessel functions of the first kind.

j_l(x) satisfies the three-term recursion

    j_l(x) = (2l - 1)/x * j_{l-1}(x) - j_{l-2}(x)

which is stable upward only while the order stays below the argument.
Above the argument the minimal solution j_l is swamped by the second
kind y_l, so for x < l + 2 we recurse downward from a starting order
well above l with arbitrary seed values and normalize afterwards
(Miller's algorithm).  The normalization reference is j_0 = sinc or j_1,
whichever is larger in magnitude, so zeros of either do not poison it.

Very small arguments (x < SMALL_X_SERIES) go straight to the ascending
series to avoid 0/0 in the sinc-based seeds.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

#: below this argument the ascending series is used directly
SMALL_X_SERIES = 1e-4

#: upward recursion is used for x >= l + UPWARD_MARGIN
UPWARD_MARGIN = 2.0

#: rescaling threshold inside the downward recursion
_RESCALE_AT = 1e250


def first_zero_estimate(l: int) -> float:
    """Rough location of the first zero of j_l, from a linear fit over
    0 <= l <= 100.  An overestimate for very low l (j_0 vanishes at pi)."""
    return 4.75 + 1.05 * l


def _series_value(l: int, x: float) -> float:
    # x^l / (2l+1)!! * (1 - t/(2l+3) + t^2/(2 (2l+3)(2l+5)) - ...), t = x^2/2
    lead = 1.0
    for m in range(1, l + 1):
        lead *= x / (2 * m + 1)
        if lead == 0.0:
            return 0.0
    t = 0.5 * x * x
    c1 = -t / (2 * l + 3)
    c2 = t * t / (2.0 * (2 * l + 3) * (2 * l + 5))
    return lead * (1.0 + c1 + c2)


def small_x_leading(l: int, x: float) -> float:
    """Leading small-x behavior x^l sqrt(pi) / (2^(l+1) Gamma(l + 3/2)),
    i.e. x^l / (2l+1)!!."""
    if l < 0:
        raise DomainError("order must be nonnegative")
    out = 1.0
    for m in range(1, l + 1):
        out *= x / (2 * m + 1)
    return out


def j_array(lmax: int, x: float) -> np.ndarray:
    """Table of j_0(x) .. j_lmax(x) at a scalar argument x >= 0."""
    if lmax < 0:
        raise DomainError("order must be nonnegative")
    if x < 0:
        raise DomainError("j_array requires x >= 0; use j_parity_extend")
    out = np.empty(lmax + 1)
    if x < SMALL_X_SERIES:
        for l in range(lmax + 1):
            out[l] = _series_value(l, x)
        return out
    s = math.sin(x)
    c = math.cos(x)
    if lmax == 0:
        out[0] = s / x
        return out
    if x >= lmax + UPWARD_MARGIN:
        out[0] = s / x
        out[1] = s / (x * x) - c / x
        for m in range(2, lmax + 1):
            out[m] = (2 * m - 1) / x * out[m - 1] - out[m - 2]
        return out
    # downward (Miller) from a safety margin above lmax
    lstart = lmax + max(20, math.ceil(1.5 * lmax))
    jp = 0.0  # j_{m+1}, unnormalized
    jc = 1.0  # j_m, unnormalized
    for m in range(lstart, 0, -1):
        jm = (2 * m + 1) / x * jc - jp
        jp, jc = jc, jm
        idx = m - 1
        if idx <= lmax:
            out[idx] = jm
        if abs(jm) > _RESCALE_AT:
            jp /= _RESCALE_AT
            jc /= _RESCALE_AT
            if idx <= lmax:
                out[idx : lmax + 1] /= _RESCALE_AT
    j0_true = s / x
    j1_true = s / (x * x) - c / x
    if abs(j0_true) >= abs(j1_true):
        scale = j0_true / out[0]
    else:
        scale = j1_true / out[1]
    out *= scale
    return out


def j(l: int, x: float) -> float:
    """j_l(x) for integer l >= 0 and x >= 0."""
    if l < 0:
        raise DomainError("order must be nonnegative")
    if x < 0:
        raise DomainError("j requires x >= 0; use j_parity_extend")
    if l == 0:
        if x < SMALL_X_SERIES:
            return _series_value(0, x)
        return math.sin(x) / x
    return float(j_array(l, x)[l])


def j_parity_extend(l: int, x: float) -> float:
    """j_l extended to negative arguments via j_l(-x) = (-1)^l j_l(x)."""
    if x < 0:
        v = j(l, -x)
        return -v if l % 2 else v
    return j(l, x)


def j_many(l: int, xs) -> np.ndarray:
    """Vectorized j_l over an array of nonnegative arguments.

    Arguments at or above l + UPWARD_MARGIN are handled with vectorized
    upward recursion; the rest fall back to per-point evaluation.
    """
    xs = np.asarray(xs, dtype=float)
    if np.any(xs < 0):
        raise DomainError("j_many requires x >= 0")
    out = np.empty_like(xs)
    up = xs >= l + UPWARD_MARGIN
    if np.any(up):
        xu = xs[up]
        s = np.sin(xu)
        c = np.cos(xu)
        j0 = s / xu
        if l == 0:
            out[up] = j0
        else:
            j1 = s / (xu * xu) - c / xu
            if l == 1:
                out[up] = j1
            else:
                for m in range(2, l + 1):
                    j0, j1 = j1, (2 * m - 1) / xu * j1 - j0
                out[up] = j1
    rest = ~up
    if np.any(rest):
        out[rest] = [j(l, float(xv)) for xv in xs[rest]]
    return out


def j_extended(order: int, x: float) -> float:
    """j at integer order >= -1; j_{-1}(x) = cos(x)/x.

    The order -1 continuation is what the closed forms need when a
    formula written for l >= 1 is evaluated at l = 0.
    """
    if order == -1:
        if x == 0:
            raise DomainError("j_{-1} diverges at x = 0")
        return math.cos(x) / x
    return j(order, x)
