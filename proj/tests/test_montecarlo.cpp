#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "rissec/montecarlo.hpp"

using namespace rissec;

TEST(Trials, DeterministicAcrossWorkers)
{
    auto const p = SystemParams::defaults();
    auto const one = run_trials(p, AntennaMode::single, 200, 42, 1);
    auto const eight = run_trials(p, AntennaMode::single, 200, 42, 8);
    EXPECT_EQ(one, eight);

    auto pm = p;
    pm.n_ant = 4;
    EXPECT_EQ(run_trials(pm, AntennaMode::multi, 50, 7, 1),
              run_trials(pm, AntennaMode::multi, 50, 7, 8));
}

TEST(Trials, SeedsDiffer)
{
    auto const p = SystemParams::defaults();
    auto const a = run_trials(p, AntennaMode::single, 20, 1, 1);
    auto const b = run_trials(p, AntennaMode::single, 20, 2, 1);
    EXPECT_NE(a, b);
    EXPECT_NE(trial_rng(1, 0)(), trial_rng(1, 1)());
    EXPECT_NE(trial_rng(1, 0)(), trial_rng(2, 0)());
}

TEST(Trials, PrefixStable)
{
    // trial i does not depend on how many trials run
    auto const p = SystemParams::defaults();
    auto const short_run = run_trials(p, AntennaMode::single, 10, 5, 1);
    auto const long_run = run_trials(p, AntennaMode::single, 30, 5, 3);
    for (std::size_t i = 0; i < short_run.size(); ++i)
        EXPECT_EQ(short_run[i], long_run[i]);
}

TEST(Trials, NoEavesdroppers)
{
    auto p = SystemParams::defaults();
    p.eve_density = 0;
    for (auto const& r : run_trials(p, AntennaMode::single, 100, 3, 1))
    {
        EXPECT_EQ(r.eve_count, 0);
        EXPECT_EQ(r.eve_snr, 0.0);
        EXPECT_GT(r.bob_snr, 0.0);
    }
}

TEST(Trials, Errors)
{
    auto p = SystemParams::defaults();
    p.n_ant = 2;
    EXPECT_THROW(run_trials(p, AntennaMode::single, 10, 1), ModeError);
    p.n_ant = 1;
    EXPECT_THROW(run_trials(p, AntennaMode::single, 0, 1), DomainError);
    p.radius = 200;
    EXPECT_THROW(run_trials(p, AntennaMode::single, 10, 1), DomainError);
}

TEST(Trials, EveCountIsPoisson)
{
    auto const p = SystemParams::defaults();
    auto const recs = run_trials(p, AntennaMode::single, 2000, 9, 1);
    double sum = 0;
    for (auto const& r : recs)
        sum += r.eve_count;
    double const mean = p.mean_eve_count();
    EXPECT_NEAR(sum / recs.size(), mean, 4 * std::sqrt(mean / recs.size()));
}

TEST(EmpiricalCdfTest, StepFunction)
{
    auto const f = empirical_cdf({3.0, 1.0, 2.0, 2.0});
    EXPECT_EQ(f.size(), 4u);
    EXPECT_EQ(f(0.5), 0.0);
    EXPECT_EQ(f(1.0), 0.25);
    EXPECT_EQ(f(1.5), 0.25);
    EXPECT_EQ(f(2.0), 0.75);
    EXPECT_EQ(f(3.0), 1.0);
    EXPECT_EQ(f(100.0), 1.0);
    EXPECT_EQ(f.as_snr_cdf("emp")(2.0), 0.75);
    EXPECT_THROW(empirical_cdf({}), DomainError);
}

TEST(EmpiricalCdfTest, KsDistance)
{
    auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
    EXPECT_DOUBLE_EQ(ks_distance(uniform, empirical_cdf({0.5})), 0.5);
    EXPECT_DOUBLE_EQ(ks_distance(uniform, empirical_cdf({0.25, 0.75})), 0.25);
    // ties: both samples at 0.5 jump the empirical CDF from 0 to 1
    EXPECT_DOUBLE_EQ(ks_distance(uniform, empirical_cdf({0.5, 0.5})), 0.5);

    std::mt19937_64 rng(4);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> xs(10000);
    for (auto& x : xs)
        x = expo(rng);
    double const d = ks_distance([](double x) { return -std::expm1(-x); },
                                 empirical_cdf(xs));
    EXPECT_LT(d, 1.95 / std::sqrt(10000.0));
}

TEST(Capacity, Estimator)
{
    std::vector<TrialRecord> recs{{3.0, 1.0, 1}, {1.0, 3.0, 1}};
    auto const c = mc_secrecy_capacity(recs);
    EXPECT_DOUBLE_EQ(c.mean, 0.5);
    // sample variance 0.5, standard error sqrt(0.5 / 2)
    EXPECT_DOUBLE_EQ(c.std_error, 0.5);

    std::vector<TrialRecord> const one{{7.0, 0.0, 0}};
    EXPECT_DOUBLE_EQ(mc_secrecy_capacity(one).mean, 3.0);
    EXPECT_EQ(mc_secrecy_capacity(one).std_error, 0.0);
    EXPECT_THROW(mc_secrecy_capacity(std::vector<TrialRecord>{}), DomainError);
}

TEST(Capacity, MatchesAnalyticAtDefaults)
{
    auto const p = SystemParams::defaults();
    auto const recs = run_trials(p, AntennaMode::single, 5000, 17);
    auto const mc = mc_secrecy_capacity(recs);
    double const analytic
        = analytic_secrecy_capacity(p, AntennaMode::single, {10, 400});
    EXPECT_NEAR(mc.mean, analytic, 5 * mc.std_error + 0.01);
}
