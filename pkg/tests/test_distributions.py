"""Tests for the parametric lifetime families."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from stochord.distributions import (
    GE,
    ExpScale,
    Frechet,
    GenGamma,
    ScaleFamily,
    StdExponential,
    StdWeibull,
    Weibull,
    es_q,
    evaluate,
    ge_h,
    parse_baseline,
    parse_distribution,
)
from stochord.errors import (
    DegeneratePointError,
    InvalidParameterError,
    SpecParseError,
)

FAMILIES = [
    Frechet(0.0, 1.0, 1.0),
    Frechet(1.5, 2.0, 0.7),
    ScaleFamily(StdExponential(), 2.0),
    ScaleFamily(StdWeibull(1.7), 0.8),
    ScaleFamily(GenGamma(2.0, 2.0), 1.3),
    ExpScale(StdExponential(), 2.0, 1.0),
    ExpScale(StdWeibull(0.6), 0.4, 2.2),
    GE(0.6, 1.0),
    GE(3.0, 0.5),
    Weibull(2.0, 1.5),
    Weibull(0.5, 3.0),
]


def interior_grid(dist, n=60):
    return dist.quantile(np.linspace(0.02, 0.98, n))


class TestPointValues:
    def test_frechet_cdf_at_one(self):
        assert Frechet(0, 1, 1).cdf(1.0) == pytest.approx(math.exp(-1), rel=1e-14)

    def test_ge_alpha_one_is_exponential(self):
        assert GE(1, 2).cdf(1.0) == pytest.approx(-math.expm1(-2.0), rel=1e-14)

    def test_expscale_squared_exponential(self):
        # oracle: square the independently computed standard exponential cdf
        oracle = (1.0 - math.exp(-1.0)) ** 2
        assert ExpScale(StdExponential(), 2, 1).cdf(1.0) == pytest.approx(
            oracle, rel=1e-13
        )

    def test_quantile_point_examples(self):
        assert Frechet(0, 1, 1).quantile(math.exp(-1)) == pytest.approx(1.0, rel=1e-12)
        assert GE(1, 2).quantile(-math.expm1(-2.0)) == pytest.approx(1.0, rel=1e-12)
        p = (1.0 - math.exp(-1.0)) ** 2
        assert ExpScale(StdExponential(), 2, 1).quantile(p) == pytest.approx(
            1.0, rel=1e-9
        )


@pytest.mark.parametrize("dist", FAMILIES, ids=lambda d: d.label())
class TestFamilyInvariants:
    def test_sf_complements_cdf(self, dist):
        xs = interior_grid(dist)
        assert_allclose(dist.sf(xs), 1.0 - dist.cdf(xs), atol=1e-12)

    def test_cdf_monotone_and_bounded(self, dist):
        xs = interior_grid(dist, 200)
        c = dist.cdf(xs)
        assert np.all(np.diff(c) >= -1e-15)
        assert np.all((c >= 0) & (c <= 1))

    def test_hazard_identities(self, dist):
        xs = interior_grid(dist)
        pdf = dist.pdf(xs)
        assert_allclose(dist.hazard(xs), pdf / dist.sf(xs), rtol=1e-9)
        assert_allclose(dist.rev_hazard(xs), pdf / dist.cdf(xs), rtol=1e-9)

    def test_quantile_inverts_cdf(self, dist):
        xs = interior_grid(dist, 40)
        assert_allclose(dist.quantile(dist.cdf(xs)), xs, rtol=1e-9)

    def test_quantile_monotone(self, dist):
        ps = np.linspace(0.01, 0.99, 50)
        qs = dist.quantile(ps)
        assert np.all(np.diff(qs) > 0)

    def test_pdf_matches_cdf_derivative(self, dist):
        xs = interior_grid(dist, 40)
        h = 1e-5 * np.maximum(1.0, np.abs(xs))
        # the step rule is only meaningful where it stays well inside the
        # support (heavy left tails put low quantiles at x << h)
        ok = (xs - dist.support[0]) > 1e3 * h
        xs, h = xs[ok], h[ok]
        assert len(xs) >= 10
        fd = (dist.cdf(xs + h) - dist.cdf(xs - h)) / (2 * h)
        assert_allclose(dist.pdf(xs), fd, rtol=1e-4)

    def test_boundary_conventions(self, dist):
        lo = dist.support[0]
        left = lo - 1.0
        assert dist.cdf(left) == 0.0
        assert dist.sf(left) == 1.0
        assert dist.pdf(left) == 0.0
        with pytest.raises(DegeneratePointError):
            dist.hazard(left)
        with pytest.raises(DegeneratePointError):
            dist.rev_hazard(left)
        # array evaluation marks the same point NaN instead of raising
        vals = dist.hazard(np.array([left, dist.quantile(0.5)]))
        assert math.isnan(vals[0]) and math.isfinite(vals[1])

    def test_quantile_domain(self, dist):
        with pytest.raises(InvalidParameterError):
            dist.quantile(0.0)
        with pytest.raises(InvalidParameterError):
            dist.quantile(1.0)


class TestCrossFamilyIdentities:
    def test_scale_model_self_consistency(self):
        base = StdWeibull(1.3)
        d = ScaleFamily(base, 2.5)
        xs = np.linspace(0.05, 4.0, 50)
        assert np.array_equal(d.cdf(xs), base.cdf(2.5 * xs))

    def test_expscale_alpha_one_equals_scale(self):
        for base in (StdExponential(), StdWeibull(0.8), GenGamma(2.0, 2.0)):
            es = ExpScale(base, 1.0, 1.7)
            sc = ScaleFamily(base, 1.7)
            xs = np.linspace(0.05, 5.0, 80)
            for fn in ("cdf", "sf", "pdf"):
                assert_allclose(
                    evaluate(es, fn, xs), evaluate(sc, fn, xs), atol=1e-12
                )

    def test_ge_equals_expscale_over_exponential(self):
        ge = GE(2.3, 1.4)
        es = ExpScale(StdExponential(), 2.3, 1.4)
        xs = np.linspace(0.05, 6.0, 80)
        for fn in ("cdf", "sf", "pdf", "hazard", "rev_hazard"):
            assert_allclose(evaluate(ge, fn, xs), evaluate(es, fn, xs), atol=1e-12)

    def test_frechet_rev_hazard_closed_form(self):
        d = Frechet(0.5, 2.0, 1.5)
        xs = d.quantile(np.linspace(0.05, 0.95, 40))
        closed = (d.alpha / d.lam) * ((xs - d.mu) / d.lam) ** (-d.alpha - 1.0)
        assert_allclose(d.rev_hazard(xs), closed, rtol=1e-12)
        assert_allclose(d.pdf(xs) / d.cdf(xs), closed, rtol=1e-9)


class TestGenGammaHypothesisFacts:
    def grid(self, hi):
        return np.geomspace(1e-3, hi, 2000)

    def xr_and_x2rp(self, p, q, hi):
        base = GenGamma(p, q)
        xs = self.grid(hi)
        r = base.hazard(xs)
        rp = base.hazard_derivative(xs)
        good = np.isfinite(r) & np.isfinite(rp)
        xs, r, rp = xs[good], r[good], rp[good]
        return xs * r, xs * xs * rp

    def test_pq_two_increasing(self):
        xr, x2rp = self.xr_and_x2rp(2.0, 2.0, 20.0)
        assert np.all(np.diff(xr) >= -1e-8 * np.maximum(1, np.abs(xr[:-1])))
        assert np.all(np.diff(x2rp) >= -1e-6 * np.maximum(1, np.abs(x2rp[:-1])))

    def test_pq_half_decreasing(self):
        xr, x2rp = self.xr_and_x2rp(0.5, 0.5, 100.0)
        assert np.all(np.diff(xr) >= -1e-8 * np.maximum(1, np.abs(xr[:-1])))
        assert np.all(np.diff(x2rp) <= 1e-6 * np.maximum(1, np.abs(x2rp[:-1])))


class TestGeH:
    def test_alpha_one_is_constant_one(self):
        ts = np.linspace(1e-6, 1 - 1e-6, 101)
        assert_allclose(ge_h(1.0, ts), 1.0, atol=1e-12)

    def test_hand_value(self):
        assert ge_h(2.0, 0.5) == pytest.approx(2.0 / 3.0, rel=1e-14)

    def test_monotone_decreasing_small_alpha(self):
        ts = np.linspace(1e-4, 1 - 1e-4, 10000)
        h = ge_h(0.5, ts)
        assert np.all(np.diff(h) <= 1e-10 * np.maximum(1, np.abs(h[:-1])))

    def test_monotone_increasing_large_alpha(self):
        ts = np.linspace(1e-4, 1 - 1e-4, 10000)
        h = ge_h(2.0, ts)
        assert np.all(np.diff(h) >= -1e-10 * np.maximum(1, np.abs(h[:-1])))

    def test_domain(self):
        with pytest.raises(InvalidParameterError):
            ge_h(2.0, 0.0)
        with pytest.raises(InvalidParameterError):
            ge_h(2.0, 1.0)
        with pytest.raises(InvalidParameterError):
            ge_h(-1.0, 0.5)


class TestEsQ:
    def test_alpha_one_collapse(self):
        # q(1, x) = rev_hazard * G / (1 - G) = pdf / sf = 1 for std exponential
        assert es_q(StdExponential(), 1.0, 1.0) == pytest.approx(1.0, rel=1e-12)

    def test_consistency_with_ge_h(self):
        # q(alpha, x) = h(alpha, 1 - exp(-x)) for the exponential baseline
        assert es_q(StdExponential(), 2.0, math.log(2.0)) == pytest.approx(
            2.0 / 3.0, rel=1e-12
        )
        xs = np.linspace(0.05, 6.0, 200)
        assert_allclose(
            es_q(StdExponential(), 0.7, xs),
            ge_h(0.7, -np.expm1(-xs)),
            rtol=1e-10,
        )

    def test_monotone_decreasing_alpha_small(self):
        xs = np.linspace(1e-3, 20.0, 5000)
        q = es_q(StdExponential(), 0.6, xs)
        good = np.isfinite(q)
        q = q[good]
        assert np.all(np.diff(q) <= 1e-10 * np.maximum(1, np.abs(q[:-1])))

    def test_degenerate_points(self):
        with pytest.raises(DegeneratePointError):
            es_q(StdExponential(), 2.0, 0.0)
        vals = es_q(StdExponential(), 2.0, np.array([0.0, 1.0]))
        assert math.isnan(vals[0]) and math.isfinite(vals[1])


class TestParsing:
    @pytest.mark.parametrize("dist", FAMILIES, ids=lambda d: d.label())
    def test_roundtrip(self, dist):
        assert parse_distribution(dist.label()) == dist

    def test_examples_from_interface(self):
        d = parse_distribution("frechet:mu=0,lambda=2,alpha=1.5")
        assert d == Frechet(0.0, 2.0, 1.5)
        d = parse_distribution("ge:alpha=0.6,lambda=1")
        assert d == GE(0.6, 1.0)
        d = parse_distribution("es:base=exp,alpha=2,lambda=3")
        assert d == ExpScale(StdExponential(), 2.0, 3.0)

    def test_unknown_keys_rejected(self):
        with pytest.raises(SpecParseError):
            parse_distribution("ge:alpha=0.6,lambda=1,mu=0")
        with pytest.raises(SpecParseError):
            parse_distribution("ge:alpha=0.6")
        with pytest.raises(SpecParseError):
            parse_distribution("gamma:p=1,q=1")

    def test_baseline_tokens(self):
        assert parse_baseline("exp") == StdExponential()
        assert parse_baseline("weibull(2)") == StdWeibull(2.0)
        assert parse_baseline("gg(0.5,0.5)") == GenGamma(0.5, 0.5)
        with pytest.raises(SpecParseError):
            parse_baseline("cauchy")

    def test_invalid_parameters_rejected_at_construction(self):
        with pytest.raises(InvalidParameterError):
            Frechet(0.0, -1.0, 1.0)
        with pytest.raises(InvalidParameterError):
            GE(0.0, 1.0)
        with pytest.raises(InvalidParameterError):
            GenGamma(1.0, -2.0)
