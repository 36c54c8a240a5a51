import math
import random
import statistics

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ecometab.errors import (
    AlignmentError,
    DegenerateRegressorError,
    DomainError,
    InsufficientDataError,
)
from ecometab.ledger import Series
from ecometab.stats import (
    betainc,
    descriptives,
    ols_fit,
    p_value_f,
    p_value_t,
    significance_stars,
    t_critical,
)
import oracles


def year_series(first, values):
    years = tuple(range(first, first + len(values)))
    return (
        Series(years, tuple(float(y) for y in years)),
        Series(years, tuple(float(v) for v in values)),
    )


def noisy_dataset(seed, n=19, slope=5e6, noise_sd=1e7, first_year=1997):
    rng = random.Random(seed)
    half = noise_sd * math.sqrt(3.0)
    return [slope * (i + 1) + rng.uniform(-half, half) for i in range(n)]


class TestOlsFit:
    def test_perfect_line(self):
        x, y = year_series(2000, [2 * y + 1 for y in range(2000, 2010)])
        fit = ols_fit(x, y)
        assert fit.slope == pytest.approx(2.0, abs=1e-12)
        assert fit.intercept == pytest.approx(1.0, abs=1e-9)
        assert fit.r_squared == 1.0
        assert fit.exact_fit
        assert all(r == pytest.approx(0.0, abs=1e-9) for r in fit.residuals)
        assert fit.se_slope == 0.0
        assert fit.p_slope == 0.0

    def test_constant_response_is_degenerate(self):
        x, y = year_series(2000, [7.5] * 10)
        fit = ols_fit(x, y)
        assert fit.degenerate
        assert fit.slope == 0.0
        assert fit.r_squared == 0.0
        assert fit.f_statistic == 0.0
        assert fit.p_slope == 1.0

    def test_matches_grid_refinement_oracle(self):
        values = noisy_dataset(seed=42)
        x, y = year_series(1997, values)
        fit = ols_fit(x, y)
        oracle_intercept, oracle_slope = oracles.grid_ols(list(x.values), list(y.values))
        assert fit.slope == pytest.approx(oracle_slope, rel=1e-8)
        assert fit.intercept == pytest.approx(oracle_intercept, rel=1e-8)

    def test_alignment_error(self):
        x, _ = year_series(2000, [1, 2, 3])
        _, y = year_series(2001, [1, 2, 3])
        with pytest.raises(AlignmentError):
            ols_fit(x, y)

    def test_insufficient_data(self):
        x, y = year_series(2000, [1, 2])
        with pytest.raises(InsufficientDataError):
            ols_fit(x, y)

    def test_degenerate_regressor(self):
        years = (2000, 2001, 2002)
        x = Series(years, (3.0, 3.0, 3.0))
        y = Series(years, (1.0, 2.0, 3.0))
        with pytest.raises(DegenerateRegressorError):
            ols_fit(x, y)

    def test_identity_suite_on_seeded_data(self):
        for seed in range(25):
            values = noisy_dataset(seed=seed)
            x, y = year_series(1997, values)
            fit = ols_fit(x, y)
            scale = max(abs(v) for v in y.values) * fit.n
            assert abs(math.fsum(fit.residuals)) <= 1e-9 * scale
            pearson = statistics.correlation(list(x.values), list(y.values))
            assert fit.standardized_slope == pytest.approx(pearson, rel=1e-10)
            assert fit.r_squared == pytest.approx(fit.standardized_slope**2, rel=1e-10)
            assert fit.f_statistic == pytest.approx(
                (fit.slope / fit.se_slope) ** 2, rel=1e-10
            )
            assert fit.p_f == pytest.approx(fit.p_slope, rel=1e-8)

    def test_affine_equivariance(self):
        values = noisy_dataset(seed=7)
        x, y = year_series(1997, values)
        base = ols_fit(x, y)
        for a, b in ((2.5, 1e9), (-0.75, -3e8), (1e-6, 0.0)):
            scaled = Series(y.years, tuple(a * v + b for v in y.values))
            fit = ols_fit(x, scaled)
            assert fit.slope == pytest.approx(a * base.slope, rel=1e-9)
            assert fit.se_slope == pytest.approx(abs(a) * base.se_slope, rel=1e-9)
            assert abs(fit.standardized_slope) == pytest.approx(
                abs(base.standardized_slope), rel=1e-9
            )
            assert fit.r_squared == pytest.approx(base.r_squared, rel=1e-9)
            assert fit.f_statistic == pytest.approx(base.f_statistic, rel=1e-9)
            assert fit.p_slope == pytest.approx(base.p_slope, rel=1e-9)

    def test_regressor_shift(self):
        values = noisy_dataset(seed=8)
        x, y = year_series(1997, values)
        base = ols_fit(x, y)
        for shift in (-1996.0, 100.0, 2500.0):
            shifted = Series(x.years, tuple(v + shift for v in x.values))
            fit = ols_fit(shifted, y)
            assert fit.slope == pytest.approx(base.slope, rel=1e-9)
            assert fit.r_squared == pytest.approx(base.r_squared, rel=1e-9)
            assert fit.f_statistic == pytest.approx(base.f_statistic, rel=1e-9)
            assert fit.intercept == pytest.approx(
                base.intercept - base.slope * shift, rel=1e-7
            )


class TestDescriptives:
    def test_textbook_case(self):
        d = descriptives([1.0, 2.0, 3.0])
        assert (d.n, d.mean, d.sd, d.minimum, d.maximum) == (3, 2.0, 1.0, 1.0, 3.0)

    def test_singleton(self):
        d = descriptives([5.0])
        assert d.mean == 5.0
        assert d.sd == 0.0

    def test_empty_is_an_error(self):
        with pytest.raises(InsufficientDataError):
            descriptives([])

    def test_thousand_uniform_values_match_two_pass_oracle(self):
        rng = random.Random(123)
        values = [rng.random() for _ in range(1000)]
        d = descriptives(values)
        mean, sd = oracles.two_pass_mean_sd(values)
        assert d.mean == pytest.approx(mean, rel=1e-12)
        assert d.sd == pytest.approx(sd, rel=1e-12)

    @given(st.lists(st.floats(min_value=-1e9, max_value=1e9, allow_nan=False),
                    min_size=2, max_size=50))
    def test_matches_statistics_module(self, values):
        d = descriptives(values)
        assert d.mean == pytest.approx(statistics.fmean(values), rel=1e-9, abs=1e-9)
        assert d.sd == pytest.approx(statistics.stdev(values), rel=1e-6, abs=1e-6)
        assert d.minimum <= d.mean <= d.maximum


class TestPValues:
    def test_t_at_zero_is_one(self):
        for df in (1, 5, 17, 100):
            assert p_value_t(0.0, df) == 1.0

    def test_t_large_sample_normal_limit(self):
        assert p_value_t(1.96, 10000) == pytest.approx(0.0500, abs=5e-4)

    def test_paper_scale_statistic_is_highly_significant(self):
        assert p_value_t(6.038, 17) < 0.001

    def test_f_at_zero_is_one(self):
        assert p_value_f(0.0, 1, 17) == 1.0

    def test_f_t_duality(self):
        t = 2.5
        assert p_value_f(t * t, 1, 17) == pytest.approx(p_value_t(t, 17), rel=1e-8)

    def test_f_matches_integration_oracle(self):
        assert p_value_f(4.0, 1, 30) == pytest.approx(
            oracles.p_f_upper(4.0, 1, 30), abs=1e-6
        )

    def test_t_matches_integration_oracle_on_grid(self):
        for df in (1, 5, 17, 100):
            for t in (0.25, 0.8, 1.5, 2.2, 4.0, 6.5, 9.0):
                assert p_value_t(t, df) == pytest.approx(
                    oracles.p_t_two_sided(t, df), abs=1e-6
                )

    def test_t_strictly_decreasing_in_statistic(self):
        for df in (1, 5, 17, 100):
            grid = [i * 0.25 for i in range(41)]
            values = [p_value_t(t, df) for t in grid]
            assert all(a > b for a, b in zip(values, values[1:]))

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            p_value_t(1.0, 0)
        with pytest.raises(DomainError):
            p_value_t(math.nan, 5)
        with pytest.raises(DomainError):
            p_value_f(-1.0, 1, 5)
        with pytest.raises(DomainError):
            p_value_f(1.0, 0, 5)
        with pytest.raises(DomainError):
            betainc(0.0, 1.0, 0.5)
        with pytest.raises(DomainError):
            betainc(1.0, 1.0, 1.5)

    def test_betainc_symmetry(self):
        assert betainc(2.0, 3.0, 0.4) == pytest.approx(
            1.0 - betainc(3.0, 2.0, 0.6), rel=1e-12
        )

    def test_t_critical_matches_oracle(self):
        for alpha, df in ((0.05, 17), (0.01, 17), (0.05, 5), (0.001, 100)):
            assert t_critical(alpha, df) == pytest.approx(
                oracles.t_critical(alpha, df), abs=1e-6
            )

    def test_t_critical_round_trips(self):
        crit = t_critical(0.05, 17)
        assert p_value_t(crit, 17) == pytest.approx(0.05, abs=1e-10)


class TestSignificanceStars:
    @pytest.mark.parametrize("p,stars", [
        (0.0004, "***"),
        (0.004, "**"),
        (0.04, "*"),
        (0.2, ""),
        (0.05, ""),
    ])
    def test_star_rule(self, p, stars):
        assert significance_stars(p) == stars
