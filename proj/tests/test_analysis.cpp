#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <tuple>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "rissec/analysis.hpp"

using namespace rissec;

namespace
{
// Reference values from tests/oracle/frozen_values.py.
std::vector<std::tuple<int, double, double>> const moment_table{
    {1, 1.0, 4.0},
    {2, 3.2337005501361698, 25.103304951225528},
    {4, 11.402203300817019, 216.57837160159513},
    {16, 164.04406601634038, 31172.524297196321},
    {100, 6206.8177231740406, 39484897.961029234},
    {256, 40523.985956444583, 1658151953.518131},
};

// x, I_single(x), I_multi(x) at the default system
std::vector<std::tuple<double, double, double>> const integral_table{
    {0.01, 38561.714053920841, 35949.489247618476},
    {0.1, 11940.314961241236, 11623.040164280768},
    {1.0, 399.29661130761889, 443.27970297351567},
    {10.0, 12.622605516387132, 14.013003531911787},
    {100.0, 0.39914836252083774, 0.44311512440913409},
};

std::vector<std::pair<double, double>> const cond_table{
    {0.1, 0.046215671670050584},
    {0.5, 0.29048393920347371},
    {1.0, 0.58532088927416592},
    {2.0, 0.89816477692602148},
};

double const capacity_single_ref = 0.15535311867365684;
double const capacity_multi_ref = 0.83634661693187173;

SystemParams multi_defaults()
{
    auto p = SystemParams::defaults();
    p.n_ant = 200;
    return p;
}

std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> xs;
    for (int i = 0; i < n; ++i)
        xs.push_back(lo * std::pow(hi / lo, i / double(n - 1)));
    return xs;
}

void expect_valid_cdf(SnrCdf const& f)
{
    double prev = 0;
    for (double x : log_grid(1e-6, 1e6, 200))
    {
        double const v = f(x);
        EXPECT_GE(v, prev) << f.label << " x=" << x;
        EXPECT_LE(v, 1.0);
        EXPECT_NEAR(v + f.complement(x), 1.0, 1e-12);
        prev = v;
    }
    EXPECT_GE(f(0), 0.0);
    EXPECT_NEAR(f(1e12), 1.0, 1e-9) << f.label;
}
}  // namespace

TEST(Moments, Constants)
{
    double const pi2 = std::numbers::pi * std::numbers::pi;
    EXPECT_EQ(MomentSet::a1, 1.0);
    EXPECT_DOUBLE_EQ(MomentSet::a2, pi2 / 16);
    EXPECT_DOUBLE_EQ(MomentSet::b1, pi2 * pi2 / 256);
    EXPECT_DOUBLE_EQ(MomentSet::b2, 3 * pi2 / 16);
    EXPECT_EQ(MomentSet::b3, 3.0);
    EXPECT_EQ(MomentSet::b4, 1.0);
}

TEST(Moments, FrozenMultinomialOracle)
{
    for (auto [n, m1, m2] : moment_table)
    {
        auto const m = z_moments(n);
        EXPECT_NEAR(m.m1 / m1, 1.0, 1e-14) << n;
        EXPECT_NEAR(m.m2 / m2, 1.0, 1e-14) << n;
        EXPECT_GT(m.variance(), 0) << n;
    }
    EXPECT_THROW(z_moments(0), DomainError);
}

TEST(Moments, MonteCarloOracle)
{
    // brute-force Z = (sum |g||h|)^2 with independent Rayleigh amplitudes
    std::mt19937_64 rng(21);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    int const n = 16;
    int const draws = 200000;
    double s1 = 0, s2 = 0;
    for (int t = 0; t < draws; ++t)
    {
        double amp = 0;
        for (int i = 0; i < n; ++i)
        {
            double const g = std::hypot(normal(rng), normal(rng));
            double const h = std::hypot(normal(rng), normal(rng));
            amp += g * h;
        }
        double const z = amp * amp;
        s1 += z;
        s2 += z * z;
    }
    auto const m = z_moments(n);
    EXPECT_NEAR(s1 / draws / m.m1, 1.0, 0.01);
    EXPECT_NEAR(s2 / draws / m.m2, 1.0, 0.02);
}

TEST(GammaApproximation, Examples)
{
    MomentSet m;
    m.m1 = 1;
    m.m2 = 2;
    auto g = gamma_approx(m);
    EXPECT_DOUBLE_EQ(g.shape, 1.0);
    EXPECT_DOUBLE_EQ(g.scale, 1.0);
    m.m1 = 4;
    m.m2 = 24;
    g = gamma_approx(m);
    EXPECT_DOUBLE_EQ(g.shape, 2.0);
    EXPECT_DOUBLE_EQ(g.scale, 2.0);
    m.m2 = 16;
    EXPECT_THROW(gamma_approx(m), DomainError);

    auto const z = z_moments(100);
    g = gamma_approx(z);
    EXPECT_NEAR(g.shape * g.scale / z.m1, 1.0, 1e-12);
    EXPECT_NEAR(g.shape * g.scale * g.scale / z.variance(), 1.0, 1e-12);
}

TEST(BobCdf, SingleAntenna)
{
    auto const p = SystemParams::defaults();
    auto const f = cdf_bob_single(p);
    EXPECT_EQ(f(0), 0.0);
    EXPECT_GE(f(1e12), 0.999999);
    expect_valid_cdf(f);
    auto const ga = gamma_approx(z_moments(100));
    double const unit = p.rho_linear() * p.bob_pathloss() * ga.scale;
    for (double x : {0.1, 0.5, 1.0, 3.0})
    {
        EXPECT_NEAR(f(x), boost::math::gamma_p(ga.shape, x / unit), 1e-12);
    }
}

TEST(BobCdf, MultiAntenna)
{
    auto p = multi_defaults();
    auto f = cdf_bob_multi(p);
    EXPECT_EQ(f(0), 0.0);
    expect_valid_cdf(f);
    p.n_ant = 1;
    f = cdf_bob_multi(p);
    double const mean = p.n_ris * p.rho_linear() * p.bob_pathloss();
    for (double x : {0.001, 0.01, 0.1})
        EXPECT_NEAR(f(x), -std::expm1(-x / mean), 1e-14);
}

TEST(EveCdf, ConditionalSingle)
{
    auto const p = SystemParams::defaults();
    for (auto [x, expected] : cond_table)
        EXPECT_NEAR(cdf_eve_cond_single(x, 10.0, p), expected, 1e-12) << x;
    EXPECT_EQ(cdf_eve_cond_single(0.0, 10.0, p), 0.0);
    EXPECT_NEAR(cdf_eve_cond_single(1e12, 10.0, p), 1.0, 1e-9);
    EXPECT_THROW(cdf_eve_cond_single(1.0, 0.0, p), DomainError);
    EXPECT_THROW(cdf_eve_cond_single(-1.0, 5.0, p), DomainError);
}

TEST(EveIntegral, QuadratureFrozen)
{
    auto const p = SystemParams::defaults();
    for (auto [x, single, multi] : integral_table)
    {
        EXPECT_NEAR(i_single_quadrature(x, p) / single, 1.0, 1e-8) << x;
        EXPECT_NEAR(i_multi_quadrature(x, p) / multi, 1.0, 1e-9) << x;
    }
    double const void_int = p.radius * p.radius * p.radius / 3;
    EXPECT_DOUBLE_EQ(i_single_quadrature(0.0, p), void_int);
    EXPECT_LE(i_single_quadrature(1e12, p), 1e-6 * void_int);
}

TEST(EveIntegral, SeriesMatchesQuadrature)
{
    auto const p = SystemParams::defaults();
    for (double x : log_grid(1e-2, 1e2, 20))
    {
        double const q = i_single_quadrature(x, p);
        EXPECT_NEAR(i_single_series(x, p, {10, 20}) / q, 1.0, 0.01) << x;
    }
    EXPECT_DOUBLE_EQ(i_single_series(0.0, p), p.radius * p.radius * p.radius / 3);
    EXPECT_LT(i_single_series(1e12, p), 1e-6);
    EXPECT_THROW(i_single_series(-1.0, p), DomainError);
}

TEST(EveIntegral, SeriesCollapsesWithoutLos)
{
    // beta = 0 and n_bar = 0 leave the (0, 0, 0) term only
    auto p = SystemParams::defaults();
    p.rician_bs_eve = 0;
    p.rician_ris_eve = 0;
    double const a = p.pathloss_exp;
    for (double x : {0.05, 1.0, 20.0})
    {
        double const c = x / p.rho_linear();
        double const s = 3 / a;
        double const expected = (1 / a) * std::pow(c, -s)
                                * boost::math::tgamma_lower(s, c * std::pow(p.radius, a));
        EXPECT_NEAR(i_single_series(x, p, {0, 20}) / expected, 1.0, 1e-12) << x;
    }
}

TEST(EveIntegral, MultiClosedForm)
{
    auto const p = SystemParams::defaults();
    for (double x : log_grid(1e-2, 1e2, 20))
    {
        EXPECT_NEAR(i_multi_closed(x, p) / i_multi_quadrature(x, p), 1.0, 0.05)
            << x;
    }
    EXPECT_DOUBLE_EQ(i_multi_closed(0.0, p), p.radius * p.radius * p.radius / 3);
}

TEST(EveCdf, VoidProbability)
{
    auto const p = SystemParams::defaults();
    double const void_prob = std::exp(-p.eve_density * 2.0 / 3.0
                                      * std::numbers::pi * std::pow(p.radius, 3));
    for (auto method : {EveMethod::series, EveMethod::quadrature})
        EXPECT_NEAR(cdf_eve_single(p, {}, method)(0.0), void_prob, 1e-10);
    for (auto method : {EveMethod::closed, EveMethod::quadrature})
        EXPECT_NEAR(cdf_eve_multi(p, method)(0.0), void_prob, 1e-10);
}

TEST(EveCdf, EmptyProcess)
{
    auto p = SystemParams::defaults();
    p.eve_density = 0;
    for (double x : {0.0, 0.1, 10.0})
    {
        EXPECT_EQ(cdf_eve_single(p)(x), 1.0);
        EXPECT_EQ(cdf_eve_multi(p)(x), 1.0);
        EXPECT_EQ(cdf_eve_single(p).complement(x), 0.0);
    }
}

TEST(EveCdf, ValidCdfs)
{
    auto const p = SystemParams::defaults();
    expect_valid_cdf(cdf_eve_single(p));
    expect_valid_cdf(cdf_eve_single(p, {}, EveMethod::quadrature));
    expect_valid_cdf(cdf_eve_multi(p));
    expect_valid_cdf(cdf_eve_multi(p, EveMethod::quadrature));
}

TEST(EveCdf, NonincreasingInDensity)
{
    auto p = SystemParams::defaults();
    for (double x : log_grid(1e-3, 1e3, 25))
    {
        double prev = 2;
        for (double dens : {1e-6, 1e-5, 1e-4})
        {
            p.eve_density = dens;
            double const f = cdf_eve_single(p)(x);
            EXPECT_LE(f, prev) << x << " " << dens;
            prev = f;
        }
    }
}

TEST(EveCdf, MethodErrors)
{
    auto const p = SystemParams::defaults();
    EXPECT_THROW(cdf_eve_single(p, {}, EveMethod::closed), DomainError);
    EXPECT_THROW(cdf_eve_multi(p, EveMethod::series), DomainError);
}

TEST(Capacity, MatchesAdaptiveQuadrature)
{
    auto const p = SystemParams::defaults();
    double const single = ergodic_secrecy_capacity(
        cdf_bob_single(p), cdf_eve_single(p, {}, EveMethod::quadrature),
        {10, 400});
    EXPECT_NEAR(single / capacity_single_ref, 1.0, 1e-4);

    auto const pm = multi_defaults();
    double const multi = ergodic_secrecy_capacity(
        cdf_bob_multi(pm), cdf_eve_multi(pm, EveMethod::quadrature), {10, 400});
    EXPECT_NEAR(multi / capacity_multi_ref, 1.0, 1e-4);
}

TEST(Capacity, NodeCountConvergesAtDefaults)
{
    auto const p = SystemParams::defaults();
    double const w20 = analytic_secrecy_capacity(p, AntennaMode::single, {10, 20});
    double const w40 = analytic_secrecy_capacity(p, AntennaMode::single, {10, 40});
    EXPECT_LT(std::fabs(w20 - w40), 1e-3);
}

TEST(Capacity, NoEavesdroppersGivesBobRate)
{
    auto p = SystemParams::defaults();
    p.eve_density = 0;
    auto const bob = cdf_bob_single(p);
    double const cs = ergodic_secrecy_capacity(bob, cdf_eve_single(p), {10, 400});
    boost::math::quadrature::exp_sinh<double> integrator;
    double const rate = integrator.integrate(
                            [&](double x) { return bob.complement(x) / (1 + x); },
                            0.0, std::numeric_limits<double>::infinity())
                        / std::numbers::ln2;
    EXPECT_NEAR(cs / rate, 1.0, 1e-4);
}

TEST(Capacity, AlwaysEavesdroppedGivesZero)
{
    auto const p = SystemParams::defaults();
    SnrCdf const saturated{"saturated", [](double) { return 0.0; },
                           [](double) { return 1.0; }};
    EXPECT_EQ(ergodic_secrecy_capacity(cdf_bob_single(p), saturated), 0.0);
}

TEST(Capacity, Trends)
{
    auto p = SystemParams::defaults();
    for (int n : {36, 100, 256})
    {
        p.set_ris_elements(n);
        double prev = -1;
        for (double rho = 0; rho <= 30; rho += 5)
        {
            p.rho_db = rho;
            double const cs
                = analytic_secrecy_capacity(p, AntennaMode::single, {10, 400});
            EXPECT_GT(cs, prev) << n << " " << rho;
            prev = cs;
        }
    }

    p = multi_defaults();
    double prev = -1;
    for (int k : {50, 100, 200, 400})
    {
        p.n_ant = k;
        double const cs = analytic_secrecy_capacity(p, AntennaMode::multi, {10, 400});
        EXPECT_GT(cs, prev) << k;
        prev = cs;
    }

    p = SystemParams::defaults();
    prev = 10;
    for (double dens : {1e-6, 1e-5, 1e-4, 1e-3})
    {
        p.eve_density = dens;
        double const cs = analytic_secrecy_capacity(p, AntennaMode::single, {10, 400});
        EXPECT_GE(cs, 0.0);
        EXPECT_LT(cs, prev) << dens;
        prev = cs;
    }
}
