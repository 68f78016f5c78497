import math

import numpy as np
import pytest

from besselquad import (
    AMPLIFICATION_GUARD,
    DomainError,
    IntegralSpec,
    NotConvergedError,
    QuadratureRecommendedError,
    adaptive_quad,
    choose_strategy,
    definite_integral,
    integrand,
    recursion_amplification,
)
from helpers import si_series

SI_PI = 1.8519370519824663


class TestAdaptiveQuad:
    def test_sine(self):
        r = adaptive_quad(math.sin, 0.0, math.pi)
        assert r.converged
        assert r.value == pytest.approx(2.0, abs=1e-12)

    def test_sinc_against_series(self):
        r = adaptive_quad(lambda t: math.sin(t) / t if t else 1.0, 1e-300, math.pi)
        assert r.value == pytest.approx(si_series(math.pi), abs=1e-12)
        assert r.value == pytest.approx(SI_PI, abs=1e-10)

    def test_unit_constant(self):
        r = adaptive_quad(lambda t: 1.0, 0.0, 1.0)
        assert r.value == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("deg", range(0, 14))
    def test_polynomials_exact(self, deg):
        # a single Kronrod panel integrates these exactly
        r = adaptive_quad(lambda t: (2 * t - 1) ** deg, 0.0, 1.0)
        expect = (1.0 - (-1.0) ** (deg + 1)) / (2.0 * (deg + 1))
        assert r.value == pytest.approx(expect, abs=1e-13)

    def test_vectorized_matches_scalar(self):
        f_s = lambda t: math.exp(-t) * math.sin(3 * t)
        f_v = lambda ts: np.exp(-ts) * np.sin(3 * ts)
        r1 = adaptive_quad(f_s, 0.0, 5.0)
        r2 = adaptive_quad(f_v, 0.0, 5.0, vectorized=True)
        assert r1.value == pytest.approx(r2.value, abs=1e-14)

    def test_error_estimate_is_honest(self):
        r = adaptive_quad(lambda t: math.cos(7.3 * t), 0.0, 20.0, tol=1e-11)
        exact = math.sin(7.3 * 20.0) / 7.3
        assert abs(r.value - exact) <= max(r.error_estimate, 1e-11)

    def test_nonconvergence_flag(self):
        r = adaptive_quad(lambda t: math.sin(50 * t) ** 2, 0.0, 50.0, tol=1e-16, max_evals=120)
        assert not r.converged
        assert r.evaluations <= 120

    def test_oscillation_hint_subdivides(self):
        f = lambda ts: np.sin(40.0 * ts)
        r = adaptive_quad(f, 0.0, 10.0, vectorized=True, initial_max_width=math.pi / 40.0)
        assert r.converged
        assert r.value == pytest.approx((1 - math.cos(400.0)) / 40.0, abs=1e-10)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            adaptive_quad(math.sin, 1.0, 1.0)
        with pytest.raises(DomainError):
            adaptive_quad(math.sin, 0.0, 1.0, tol=0.0)


class TestChooseStrategy:
    def test_below_threshold_goes_quadrature(self):
        s = choose_strategy(IntegralSpec("I", 0, 10), 0.0, 2.0)
        assert s.kind == "Quadrature"
        assert s.threshold_x == pytest.approx(15.25)

    def test_above_threshold_goes_recursion(self):
        s = choose_strategy(IntegralSpec("I", 0, 0), 10.0, 100.0)
        assert s.kind == "Recursion"
        assert s.split_at is None

    def test_straddling_splits_at_threshold(self):
        s = choose_strategy(IntegralSpec("H", 2, 5), 1.0, 50.0)
        assert s.split_at == pytest.approx(10.0)

    def test_order_zero_threshold_is_pi(self):
        s = choose_strategy(IntegralSpec("I", 0, 0), 0.0, 1.0)
        assert s.threshold_x == pytest.approx(math.pi)

    def test_scales_shift_threshold(self):
        s = choose_strategy(IntegralSpec("K", 0, 4, 2.0, beta=0.5), 1.0, 100.0)
        assert s.threshold_x == pytest.approx((4.75 + 1.05 * 4) / 0.5)

    def test_c_switch_rescales(self):
        s = choose_strategy(IntegralSpec("I", 0, 5), 1.0, 100.0, c_switch=0.5)
        assert s.threshold_x == pytest.approx(0.5 * (4.75 + 1.05 * 5))


class TestDefiniteIntegral:
    def test_split_equals_single_strategy(self):
        # both pure strategies are valid above the threshold; the split
        # machinery must agree with them
        spec = IntegralSpec("I", 1, 2)
        a, b = 9.0, 60.0
        r_rec = definite_integral(spec, a, b, strategy="recursion")
        r_quad = definite_integral(spec, a, b, strategy="quadrature")
        r_auto = definite_integral(spec, a, b)
        assert r_rec.value == pytest.approx(r_quad.value, rel=1e-9)
        assert r_auto.value == pytest.approx(r_quad.value, rel=1e-9)

    def test_auto_splits_interval(self):
        spec = IntegralSpec("H", 0, 5)
        r = definite_integral(spec, 0.0, 100.0)
        kinds = [seg[0] for seg in r.segments]
        assert kinds == ["quadrature", "recursion"]
        assert r.segments[0][2] == pytest.approx(10.0)

    def test_zero_lower_limit_needs_finiteness(self):
        with pytest.raises(DomainError, match="l \\+ n > -1"):
            definite_integral(IntegralSpec("I", -2, 0), 0.0, 10.0)
        with pytest.raises(DomainError, match="2l \\+ n > -1"):
            definite_integral(IntegralSpec("H", -1, 0), 0.0, 10.0)
        with pytest.raises(DomainError, match="k \\+ l \\+ n > -1"):
            definite_integral(IntegralSpec("L", -3, 1, k=1, beta=2.0), 0.0, 10.0)

    def test_forced_recursion_from_zero_refuses(self):
        with pytest.raises(QuadratureRecommendedError):
            definite_integral(IntegralSpec("I", 0, 0), 0.0, 10.0, strategy="recursion")

    def test_degenerate_scales_fall_back_to_quadrature(self):
        spec = IntegralSpec("K", 0, 1, 1.0, beta=1.0 + 1e-8)
        r = definite_integral(spec, 6.0, 20.0)
        assert all(seg[0] == "quadrature" for seg in r.segments)
        ref = definite_integral(IntegralSpec("H", 0, 1), 6.0, 20.0)
        assert r.value == pytest.approx(ref.value, rel=1e-4)

    def test_nonconverged_raises_when_asked(self):
        # a long oscillatory stretch with a tiny evaluation budget
        spec = IntegralSpec("I", 0, 0)
        with pytest.raises(NotConvergedError) as err:
            definite_integral(
                spec, 0.0, 400.0, tol=1e-12, max_evals=300,
                strategy="quadrature", raise_on_nonconverged=True,
            )
        assert err.value.result is not None
        assert not err.value.result.converged

    def test_extreme_scale_ratio_diverts_to_quadrature(self):
        # the two-scale recursions lose ~max_order * log10 of
        # (a^2+b^2)/(2ab) digits; widely separated scales go to
        # quadrature even above the oscillation threshold
        spec = IntegralSpec("L", -3, 13, 3.82, k=12, beta=0.51)
        assert recursion_amplification(spec) > AMPLIFICATION_GUARD
        r = definite_integral(spec, 38.3, 51.0)
        assert all(seg[0] == "quadrature" for seg in r.segments)
        # single-scale families have no such channel
        assert recursion_amplification(IntegralSpec("H", 0, 13)) == 1.0
        # moderately separated scales keep the analytic route
        mild = IntegralSpec("K", 0, 10, 0.5, beta=3.0)
        assert recursion_amplification(mild) < AMPLIFICATION_GUARD
        r = definite_integral(mild, 31.0, 70.0)
        assert r.segments == (("recursion", 31.0, 70.0),)

    def test_K_with_equal_scales_delegates_to_H(self):
        r1 = definite_integral(IntegralSpec("K", 0, 1, 1.0, beta=1.0), 5.0, 40.0)
        r2 = definite_integral(IntegralSpec("H", 0, 1, 1.0), 5.0, 40.0)
        assert r1.value == pytest.approx(r2.value, rel=1e-12)


class TestIntegrandBuilder:
    def test_finite_at_zero_when_condition_holds(self):
        f = integrand(IntegralSpec("L", -2, 2, 1.0, k=1, beta=2.0))
        vals = f(np.array([0.0, 1e-8, 0.5]))
        assert np.all(np.isfinite(vals))

    def test_zero_limit_value(self):
        # n + k + l = 0: the limit is the product of leading coefficients
        f = integrand(IntegralSpec("L", -3, 2, 1.0, k=1, beta=2.0))
        expect = (1.0 / 3.0) * (2.0**2 / 15.0)
        assert f(np.array([0.0]))[0] == pytest.approx(expect, rel=1e-12)

    def test_matches_direct_product(self):
        from besselquad import j

        spec = IntegralSpec("K", 2, 3, 1.5, beta=0.5)
        f = integrand(spec)
        xs = np.array([0.3, 2.0, 11.0])
        expect = [x**2 * j(3, 1.5 * x) * j(3, 0.5 * x) for x in xs]
        assert np.allclose(f(xs), expect, rtol=1e-13)

    def test_negative_scale_parity(self):
        from besselquad import j

        f = integrand(IntegralSpec("I", 0, 1, -2.0))
        xs = np.array([0.7, 3.0])
        expect = [-j(1, 2.0 * x) for x in xs]
        assert np.allclose(f(xs), expect, rtol=1e-13)
