import math

import numpy as np
import pytest

mpmath = pytest.importorskip("mpmath")

# large enough that rounding in sums of ~2^18 unit terms stays below it at |t| = 500
ORACLE_STABILITY_EPS = 1e-5

from zetabound import (
    DomainError,
    HypothesisViolation,
    PoleError,
    PrecisionUnreachable,
    ZetaPoint,
    approx_zeta,
    dirichlet_sum,
    error_radius,
    theorem_constant,
    verify_point,
    zeta_oracle,
)


def mp_dirichlet(sigma, t, n_max, dps=32):
    with mpmath.workdps(dps):
        s = mpmath.mpc(sigma, t)
        total = mpmath.fsum(mpmath.power(n, -s) for n in range(1, n_max + 1))
        return complex(total)


class TestDirichletSum:
    def test_single_term(self):
        assert dirichlet_sum((2.0, 0.0), 1.0) == 1.0

    def test_unit_terms(self):
        assert dirichlet_sum((0.0, 0.0), 10.7) == 10.0

    def test_against_extended_precision(self):
        got = dirichlet_sum((0.5, 14.0), 1000)
        assert abs(got - mp_dirichlet(0.5, 14.0, 1000)) <= 1e-10

    def test_integer_x_includes_endpoint(self):
        assert dirichlet_sum((0.0, 0.0), 7.0) == 7.0

    def test_empty_below_one(self):
        assert dirichlet_sum((0.5, 3.0), 0.5) == 0

    def test_negative_x(self):
        with pytest.raises(DomainError):
            dirichlet_sum((0.5, 3.0), -1.0)

    def test_conjugate_in_t_is_exact(self):
        assert dirichlet_sum((0.3, -17.0), 500) == dirichlet_sum((0.3, 17.0), 500).conjugate()

    def test_term_level_conjugation(self):
        n = np.arange(1, 301, dtype=float)
        plus_sin = np.sum(n ** -0.7 * (np.cos(25.0 * np.log(n)) + 1j * np.sin(25.0 * np.log(n))))
        assert abs(dirichlet_sum((0.7, 25.0), 300) - plus_sin.conjugate()) <= 1e-12


class TestConstants:
    def test_matches_printed_decimal(self):
        assert abs(theorem_constant() - 2.070795) < 5e-7

    def test_chain(self):
        c = theorem_constant()
        assert c < 29 / 14 < 3

    def test_formula_entry(self):
        g = float(mpmath.euler)
        expected = (math.pi + 3 * g + 3 * math.log(1 + 1 / (2 * math.pi))
                    + 2 * math.pi / (2 * math.pi - 1)) / math.pi
        assert theorem_constant() == pytest.approx(expected, rel=1e-15)


class TestErrorRadius:
    def test_sigma_zero(self):
        assert error_radius((0.0, 5.0), 100.0) == pytest.approx(29 / 14, rel=1e-15)

    def test_sigma_one(self):
        assert error_radius((1.0, 5.0), 10.0) == pytest.approx(29 / 140, rel=1e-15)

    def test_memorable(self):
        assert error_radius((0.5, 5.0), 400.0, "memorable") == pytest.approx(0.15, rel=1e-15)

    def test_sharp_below_published(self):
        assert error_radius((0.4, 1.0), 7.0, "sharp") < error_radius((0.4, 1.0), 7.0)

    @pytest.mark.parametrize("s,x", [((-0.1, 1.0), 2.0), ((0.5, 1.0), 0.0), ((0.5, 1.0), -3.0)])
    def test_domain(self, s, x):
        with pytest.raises(DomainError):
            error_radius(s, x)

    def test_unknown_mode(self):
        with pytest.raises(DomainError):
            error_radius((0.5, 1.0), 2.0, "loose")

    def test_monotone_in_x(self):
        xs = np.linspace(1.0, 1000.0, 200)
        r = [error_radius((0.3, 1.0), x) for x in xs]
        assert all(b < a for a, b in zip(r, r[1:]))
        r0 = {error_radius((0.0, 1.0), x) for x in xs}
        assert r0 == {29 / 14}


class TestApproxZeta:
    def test_near_first_zero(self):
        s = (0.5, 14.134725)
        res = approx_zeta(s, 100)
        assert res.radius == pytest.approx(29 / 14 / 10, rel=1e-15)
        ratio = abs(res.value - zeta_oracle(s, res.radius / 1000).value) / res.radius
        assert ratio <= 1.0

    def test_x_one_closed_form(self):
        res = approx_zeta((0.0, 1.0), 1.0)
        assert abs(res.value - (0.5 - 0.5j)) <= 1e-15
        assert res.radius == pytest.approx(29 / 14)
        assert res.terms == 1

    def test_high_sigma(self):
        res = approx_zeta((2.0, 5.0), 5.0)
        assert res.radius == pytest.approx(29 / 14 / 25)
        assert abs(res.value - complex(mpmath.zeta(complex(2, 5)))) <= res.radius

    def test_result_fields(self):
        res = approx_zeta((0.25, 3.0), 12.5)
        assert res.terms == 12 and res.x == 12.5
        assert res.radius >= res.sharp_radius > 0

    @pytest.mark.parametrize("s,x,cond", [
        ((-0.5, 1.0), 2.0, "sigma >= 0"),
        ((0.5, 0.0), 2.0, "t > 0"),
        ((0.5, -1.0), 2.0, "t > 0"),
        ((0.5, 200.0), 100.0, "t <= x"),
    ])
    def test_hypotheses(self, s, x, cond):
        with pytest.raises(HypothesisViolation) as info:
            approx_zeta(s, x)
        assert info.value.condition == cond

    def test_tie_t_equals_x_allowed(self):
        assert approx_zeta((0.5, 7.0), 7.0).terms == 7

    def test_x_below_one_flagged(self):
        res = approx_zeta((0.5, 0.3), 0.5)
        assert res.terms == 0 and "empty_sum" in res.flags

    @pytest.mark.parametrize("t", [0.01, 0.001])
    @pytest.mark.parametrize("sigma", [0.0, 0.5, 1.0])
    def test_near_pole(self, sigma, t):
        res = approx_zeta((sigma, t), 1.0)
        assert np.isfinite(res.value.real) and np.isfinite(res.value.imag)
        assert verify_point((sigma, t), 1.0).passed


class TestZetaOracle:
    def test_zeta_two(self):
        r = zeta_oracle((2.0, 0.0), 1e-10)
        assert abs(r.value - math.pi ** 2 / 6) <= 1e-10
        assert r.error_bound <= 1e-10

    def test_zeta_four(self):
        assert abs(zeta_oracle((4.0, 0.0), 1e-10).value - math.pi ** 4 / 90) <= 1e-10

    @pytest.mark.parametrize("s,eps", [((0.5, 14.134725), 1e-9), ((0.0, 30.0), 1e-7),
                                       ((1.0, 2.0), 1e-9), ((2.5, -40.0), 1e-9),
                                       ((-0.5, 8.0), 1e-6), ((0.5, 400.0), 1e-7),
                                       ((0.02, 480.0), 1e-5)])
    def test_against_mpmath(self, s, eps):
        r = zeta_oracle(s, eps)
        assert r.error_bound <= eps
        assert abs(r.value - complex(mpmath.zeta(complex(*s)))) <= r.error_bound

    def test_rounding_term_included(self):
        r = zeta_oracle((0.5, 100.0), 1e-8)
        assert 0 < r.rounding < r.error_bound

    def test_self_consistency_m_and_4m(self):
        r = zeta_oracle((0.5, 50.0), 1e-9)
        r4 = zeta_oracle((0.5, 50.0), 1e-9, M=4 * r.M)
        assert abs(r.value - r4.value) <= r.error_bound + r4.error_bound

    def test_order_zero_agrees_with_order_one(self):
        s = (1.0, 3.0)
        r0 = zeta_oracle(s, 1e-6, order=0)
        r1 = zeta_oracle(s, 1e-10, order=1)
        assert abs(r0.value - r1.value) <= r0.error_bound + r1.error_bound
        assert r0.M > r1.M

    def test_m_is_power_of_two_above_min_terms(self):
        r = zeta_oracle((2.0, 1.0), 1e-6, min_terms=1000)
        assert r.M > 1000 and r.M & (r.M - 1) == 0

    def test_m_stability_random(self):
        rng = np.random.default_rng(0x5EED)
        for _ in range(200):
            s = (float(rng.uniform(1e-3, 3.0)), float(rng.uniform(-500.0, 500.0)))
            r = zeta_oracle(s, ORACLE_STABILITY_EPS)
            r4 = zeta_oracle(s, ORACLE_STABILITY_EPS, M=4 * r.M)
            assert abs(r.value - r4.value) <= r.error_bound + r4.error_bound

    def test_pole(self):
        with pytest.raises(PoleError):
            zeta_oracle((1.0, 0.0), 1e-8)

    def test_order_zero_needs_positive_sigma(self):
        with pytest.raises(DomainError):
            zeta_oracle((0.0, 3.0), 1e-8, order=0)

    def test_unreachable(self):
        with pytest.raises(PrecisionUnreachable) as info:
            zeta_oracle((0.0, 1000.0), 1e-12)
        assert info.value.achievable > 1e-12

    def test_rounding_limits_negative_sigma(self):
        with pytest.raises(PrecisionUnreachable):
            zeta_oracle((-0.5, 8.0), 1e-9)

    def test_point_coercion(self):
        assert ZetaPoint.coerce(2 + 3j) == ZetaPoint(2.0, 3.0)


class TestVerifyPoint:
    def test_boundary_sigma_zero(self):
        row = verify_point((0.0, 10.0), 10.0)
        assert row.passed and row.ratio <= 1.0

    def test_ratio_strictly_below_one(self):
        row = verify_point((1.0, 2.0), 4.0)
        assert row.passed and row.ratio < 1.0
        assert row.oracle_M > 4

    def test_slack_recorded(self):
        row = verify_point((0.5, 3.0), 9.0)
        (slack,) = [f for f in row.flags if f.startswith("slack=")]
        assert float(slack[6:]) == pytest.approx((row.radius / 1000 + 1e-9) / row.radius, rel=1e-6)

    def test_theorem_grid(self):
        failures = []
        for sigma in (0.0, 0.1, 0.5, 1.0, 2.0):
            for t in (0.5, 1.0, 5.0, 14.1, 50.0, 200.0):
                for m in (1.0, 1.3, 2.0, 10.0, 100.0):
                    x = max(m * t, 1.0)
                    row = verify_point((sigma, t), x)
                    if not row.passed:
                        failures.append(row)
        assert not failures

    def test_propagates_hypothesis_errors(self):
        with pytest.raises(HypothesisViolation):
            verify_point((0.5, 20.0), 10.0)
