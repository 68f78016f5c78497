"""Adaptive quadrature and strategy selection for definite integrals.

The quadrature is a nested Gauss-Kronrod 7/15 rule with bisection of the
interval carrying the largest error estimate.  It serves two roles: the
honest fallback where the recursion engine loses precision (few or no
oscillations, small arguments), and the independent brute-force oracle
the analytic paths are tested against.

Strategy selection follows the first-zero heuristic: below roughly
4.75 + 1.05 l (pi exactly for l = 0) the integrand of order l has not
started oscillating, quadrature is cheap and the recursion values
suffer cancellation; above it the recursion differences are exact and
fast while quadrature cost grows with the number of oscillations.
Intervals straddling the threshold are split there.
"""

from __future__ import annotations

import heapq
import math

import numpy as np

from .errors import DomainError, NearDegenerateError, NotConvergedError, QuadratureRecommendedError
from .mixed_order import eval_L
from .same_order import eval_K
from .single_bessel import eval_I_scaled
from .sph_bessel import first_zero_estimate, j_many, small_x_leading
from .squared_bessel import eval_H_scaled
from .types import DefiniteResult, IntegralSpec, QuadratureResult, Strategy

#: default mixed absolute/relative tolerance
DEFAULT_TOL = 1e-10

#: hard cap on integrand evaluations per adaptive run
MAX_EVALS = 10**6

# 15-point Kronrod nodes (positive half) and weights, with the embedded
# 7-point Gauss weights on the odd-indexed nodes.  QUADPACK dqk15 values.
_XGK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144838258730,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.0,
    ]
)
_WGK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

# full 15-node arrays on [-1, 1]
_NODES = np.concatenate([-_XGK[:7], _XGK[::-1]])  # ascending
_K_WEIGHTS = np.concatenate([_WGK[:7], _WGK[::-1]])
_G_FULL = np.zeros(15)
_G_FULL[1:14:2] = np.concatenate([_WG[:3], _WG[::-1]])


def _gk15(f, a: float, b: float, vectorized: bool):
    half = 0.5 * (b - a)
    center = 0.5 * (a + b)
    xs = center + half * _NODES
    if vectorized:
        fs = np.asarray(f(xs), dtype=float)
    else:
        fs = np.array([f(float(x)) for x in xs], dtype=float)
    vk = half * float(np.dot(_K_WEIGHTS, fs))
    vg = half * float(np.dot(_G_FULL, fs))
    # QUADPACK-style error model: scale |K - G| by the smoothness measure
    mean = vk / (b - a)
    resasc = half * float(np.dot(_K_WEIGHTS, np.abs(fs - mean)))
    err = abs(vk - vg)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    return vk, err


def adaptive_quad(
    integrand,
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    rtol: float | None = None,
    max_evals: int = MAX_EVALS,
    vectorized: bool = False,
    initial_max_width: float | None = None,
) -> QuadratureResult:
    """Adaptively integrate ``integrand`` over [a, b].

    Parameters
    ----------
    integrand : callable
        Real function of one real variable; must be finite on [a, b].
        With vectorized=True it is called with a numpy array of nodes
        instead and must return the corresponding array.
    a, b : float
        Interval, a < b.
    tol : float
        Absolute tolerance target.
    rtol : float, optional
        Relative tolerance; defaults to ``tol`` (mixed criterion
        err <= max(tol, rtol |value|)).
    max_evals : int
        Cap on integrand evaluations; on hitting it the best estimate is
        returned with converged=False (no exception).
    initial_max_width : float, optional
        Pre-split [a, b] into pieces no wider than this before adapting.
        For oscillatory integrands a width of pi over the fastest scale
        keeps each half-oscillation resolved by the base rule.

    Notes
    -----
    Pure function; when the caller runs it from several threads the
    integrand must itself be safe to call concurrently.
    """
    if not a < b:
        raise DomainError("adaptive_quad requires a < b")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if rtol is None:
        rtol = tol
    if initial_max_width is not None and initial_max_width > 0:
        npieces = min(int(math.ceil((b - a) / initial_max_width)), max(1, max_evals // 30))
    else:
        npieces = 1
    edges = np.linspace(a, b, npieces + 1)
    heap = []
    total = 0.0
    total_err = 0.0
    evals = 0
    for i in range(npieces):
        v, e = _gk15(integrand, float(edges[i]), float(edges[i + 1]), vectorized)
        evals += 15
        total += v
        total_err += e
        heapq.heappush(heap, (-e, float(edges[i]), float(edges[i + 1]), v, e))
    min_width = 1e-14 * max(1.0, abs(a), abs(b))
    while total_err > max(tol, rtol * abs(total)) and evals + 30 <= max_evals:
        neg_e, lo, hi, v, e = heapq.heappop(heap)
        if hi - lo < min_width:
            # cannot refine further; put it back and stop
            heapq.heappush(heap, (neg_e, lo, hi, v, e))
            break
        mid = 0.5 * (lo + hi)
        v1, e1 = _gk15(integrand, lo, mid, vectorized)
        v2, e2 = _gk15(integrand, mid, hi, vectorized)
        evals += 30
        total += (v1 + v2) - v
        total_err += (e1 + e2) - e
        heapq.heappush(heap, (-e1, lo, mid, v1, e1))
        heapq.heappush(heap, (-e2, mid, hi, v2, e2))
    converged = total_err <= max(tol, rtol * abs(total))
    return QuadratureResult(total, total_err, evals, converged)


def oscillation_threshold(spec: IntegralSpec) -> float:
    """Argument below which the slowest factor of the integrand has not
    yet crossed its first zero: first_zero(max order) / min |scale|,
    with pi replacing the linear estimate at order 0."""
    lmax = spec.max_order
    fz = math.pi if lmax == 0 else first_zero_estimate(lmax)
    return fz / spec.min_scale


#: recursion amplification beyond which auto evaluation prefers quadrature
AMPLIFICATION_GUARD = 1e6


def recursion_amplification(spec: IntegralSpec) -> float:
    """Rough growth factor of the two-scale recursions.

    Each order-lowering step of the K and L recursions multiplies by
    roughly (alpha^2 + beta^2) / (2 alpha beta), so widely separated
    scales lose about max_order * log10(r) digits between the
    trigonometric bases and the result.  Single-scale families have no
    such channel.
    """
    if spec.family not in ("K", "L") or spec.beta is None:
        return 1.0
    a, b = abs(spec.alpha), abs(spec.beta)
    r = (a * a + b * b) / (2.0 * a * b)
    try:
        return r**spec.max_order
    except OverflowError:
        return math.inf


def choose_strategy(spec: IntegralSpec, a: float, b: float, c_switch: float = 1.0) -> Strategy:
    """Pick the evaluation strategy for the definite integral of ``spec``
    over [a, b].

    Quadrature below the oscillation threshold, recursion above it, and
    a split at the threshold (recorded in split_at) when the interval
    straddles it.  c_switch rescales the threshold.
    """
    if not a < b:
        raise DomainError("need a < b")
    t = oscillation_threshold(spec) * c_switch
    if b <= t:
        return Strategy(
            kind="Quadrature",
            reason=f"interval entirely below the first-zero threshold {t:.6g}",
            threshold_x=t,
        )
    if a >= t:
        return Strategy(
            kind="Recursion",
            reason=f"interval entirely above the first-zero threshold {t:.6g}",
            threshold_x=t,
        )
    return Strategy(
        kind="Recursion",
        reason=(
            f"interval straddles the first-zero threshold {t:.6g}; "
            "quadrature below it, recursion above"
        ),
        threshold_x=t,
        split_at=t,
    )


def _zero_limit(spec: IntegralSpec) -> float:
    """lim_{x->0} x^n * product of j's, finite when the family finiteness
    condition holds (integer exponents make the power n + sum(orders)
    either positive or zero)."""

    if spec.family == "I":
        factors = [(spec.l, spec.alpha)]
    elif spec.family == "H":
        factors = [(spec.l, spec.alpha)] * 2
    elif spec.family == "K":
        factors = [(spec.l, spec.alpha), (spec.l, spec.beta)]
    else:
        k = spec.k if spec.k is not None else spec.l
        factors = [(k, spec.alpha), (spec.l, spec.beta)]
    if spec.n + sum(order for order, _ in factors) > 0:
        return 0.0
    lead = 1.0
    for order, scale in factors:
        lead *= small_x_leading(order, 1.0) * scale**order
    return lead


def integrand(spec: IntegralSpec):
    """Vectorized integrand x^n * (product of spherical Bessels) for the
    quadrature routes.  At x = 0 the analytic limit is substituted; it is
    finite whenever the family finiteness condition holds."""
    n = spec.n

    if spec.family == "I":
        l, al = spec.l, spec.alpha

        def raw(xs):
            return _pow(xs, n) * _j_signed(l, al, xs)

    elif spec.family == "H":
        l, al = spec.l, spec.alpha

        def raw(xs):
            return _pow(xs, n) * _j_signed(l, al, xs) ** 2

    elif spec.family == "K":
        l, al, be = spec.l, spec.alpha, spec.beta

        def raw(xs):
            return _pow(xs, n) * _j_signed(l, al, xs) * _j_signed(l, be, xs)

    else:
        k = spec.k if spec.k is not None else spec.l
        l, al, be = spec.l, spec.alpha, spec.beta

        def raw(xs):
            return _pow(xs, n) * _j_signed(k, al, xs) * _j_signed(l, be, xs)

    def f(xs):
        xs = np.atleast_1d(np.asarray(xs, dtype=float))
        with np.errstate(invalid="ignore"):
            out = raw(xs)
        zero = xs == 0.0
        if np.any(zero):
            out[zero] = _zero_limit(spec)
        return out

    return f


def _pow(xs: np.ndarray, n: int) -> np.ndarray:
    if n >= 0:
        return xs**n
    out = np.empty_like(xs)
    nz = xs != 0
    out[nz] = xs[nz] ** n
    out[~nz] = np.inf  # patched to the analytic limit by integrand()
    return out


def _j_signed(l: int, scale: float, xs: np.ndarray) -> np.ndarray:
    v = j_many(l, abs(scale) * xs)
    if scale < 0 and l % 2:
        return -v
    return v


def antiderivative(
    spec: IntegralSpec, x: float, closed_forms: bool = True, constants: bool = True
) -> float:
    """Antiderivative value of the spec's integrand at x, by recursion.

    constants=False drops the x-independent constants of integration
    (definite differences are unchanged, but conditioned on the genuine
    oscillation scale rather than the constants; the definite evaluators
    difference in that mode).
    """
    if spec.family == "I":
        return eval_I_scaled(spec.n, spec.l, x, spec.alpha, constants).value
    if spec.family == "H":
        return eval_H_scaled(spec.n, spec.l, x, spec.alpha, closed_forms, constants).value
    if spec.family == "K":
        a, b = abs(spec.alpha), abs(spec.beta)
        if a == b:
            sign = 1.0
            if (spec.alpha < 0) != (spec.beta < 0) and spec.l % 2:
                sign = -1.0
            return sign * eval_H_scaled(spec.n, spec.l, x, a, closed_forms, constants).value
        return eval_K(spec.n, spec.l, x, spec.alpha, spec.beta, closed_forms, constants).value
    k = spec.k if spec.k is not None else spec.l
    return eval_L(spec.n, k, spec.l, x, spec.alpha, spec.beta, closed_forms, constants).value


def definite_integral(
    spec: IntegralSpec,
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    strategy: str = "auto",
    closed_forms: bool = True,
    max_evals: int = MAX_EVALS,
    c_switch: float = 1.0,
    raise_on_nonconverged: bool = False,
) -> DefiniteResult:
    """Definite integral of ``spec`` over [a, b] with strategy dispatch.

    strategy is "auto" (split at the first-zero threshold), "recursion"
    (antiderivative differences only; degenerate or hazardous analytic
    paths raise instead of falling back) or "quadrature".

    A lower limit of exactly 0 is accepted only when the family's
    finiteness condition holds; auto evaluation then covers [0, t] by
    quadrature, so the antiderivative limit at 0 is never needed.
    """
    if not 0 <= a < b:
        raise DomainError("need 0 <= a < b")
    if a == 0 and not spec.finite_at_zero:
        raise DomainError(
            f"integral from 0 diverges: family {spec.family} requires "
            f"{spec.finiteness_condition} (got n={spec.n}, orders={spec.orders})"
        )
    chosen = choose_strategy(spec, a, b, c_switch)
    segments = []
    if strategy == "quadrature":
        segments.append(("quadrature", a, b))
    elif strategy == "recursion":
        if a == 0:
            raise QuadratureRecommendedError(
                "the antiderivative value at 0 is not evaluated directly; "
                "use auto strategy, which covers [0, threshold] by quadrature"
            )
        segments.append(("recursion", a, b))
    elif strategy == "auto":
        t = chosen.split_at
        analytic = "recursion"
        if recursion_amplification(spec) > AMPLIFICATION_GUARD:
            # widely separated scales: the recursion sheds too many
            # digits between its trig bases and the result
            analytic = "quadrature"
        if chosen.kind == "Quadrature":
            segments.append(("quadrature", a, b))
        elif t is None:
            segments.append((analytic, a, b))
        else:
            segments.append(("quadrature", a, t))
            segments.append((analytic, t, b))
    else:
        raise DomainError(f"unknown strategy {strategy!r}")

    f = None
    osc_width = math.pi / max(abs(s) for s in spec.scales)
    value = 0.0
    err = 0.0
    evals = 0
    converged = True
    done = []
    for kind, lo, hi in segments:
        if kind == "recursion":
            try:
                value += antiderivative(spec, hi, closed_forms, constants=False) - antiderivative(
                    spec, lo, closed_forms, constants=False
                )
                done.append(("recursion", lo, hi))
                continue
            except (NearDegenerateError, QuadratureRecommendedError):
                if strategy == "recursion":
                    raise
                kind = "quadrature"  # analytic route refused; fall back
        if f is None:
            f = integrand(spec)
        q = adaptive_quad(
            f, lo, hi, tol=tol, max_evals=max_evals - evals, vectorized=True,
            initial_max_width=osc_width,
        )
        value += q.value
        err += q.error_estimate
        evals += q.evaluations
        converged = converged and q.converged
        done.append(("quadrature", lo, hi))
    result = DefiniteResult(
        value=value,
        error_estimate=err,
        evaluations=evals,
        converged=converged,
        strategy=chosen,
        segments=tuple(done),
    )
    if raise_on_nonconverged and not converged:
        raise NotConvergedError(
            f"quadrature error estimate {err:.3g} above tolerance {tol:.3g}",
            result=result,
        )
    return result
