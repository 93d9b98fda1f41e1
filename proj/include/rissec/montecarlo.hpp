//---------------------------------------------------------------------------//
//! \file rissec/montecarlo.hpp
//! Monte-Carlo oracle: PPP + channel draws, empirical CDFs and capacity.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <thread>
#include <vector>

#include "analysis.hpp"
#include "channel.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "params.hpp"

namespace rissec
{
//---------------------------------------------------------------------------//
//! One Monte-Carlo draw.
struct TrialRecord
{
    double bob_snr{0};
    double eve_snr{0};  //!< strongest UAV; zero when none were drawn
    int eve_count{0};

    friend bool operator==(TrialRecord const&, TrialRecord const&) = default;
};

namespace detail
{
// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}
}  // namespace detail

//! Independent generator for trial \c index of the run seeded by \c seed.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index)
{
    return std::mt19937_64(detail::mix64(detail::mix64(seed) ^ index));
}

/*!
 * Simulate one trial.
 *
 * Single mode applies the Bob-optimal RIS phases; multi mode draws uniform
 * phases and uses MRT at the BS. Bob and all UAVs share h and Phi.
 */
template<class Rng>
TrialRecord
simulate_trial(SystemParams const& params, AntennaMode mode, Rng& rng)
{
    auto const points = sample_ppp_hemisphere(params, rng);
    auto real = sample_realization(params, points, rng);
    TrialRecord rec;
    rec.eve_count = static_cast<int>(points.size());
    if (mode == AntennaMode::single)
    {
        real.phases = optimal_phase_shifts(real);
        rec.bob_snr = bob_snr_single(real, params);
        cplx const one{1.0};
        auto const beam
            = reflected_beam(real, std::span<cplx const>(&one, 1));
        for (std::size_t k = 0; k < real.eves.size(); ++k)
            rec.eve_snr = std::max(rec.eve_snr,
                                   eve_snr_single(real, k, beam, params));
    }
    else
    {
        randomize_phases(real, rng);
        auto const w = mrt_beamformer(real);
        rec.bob_snr = bob_snr_multi(real, params);
        auto const beam = reflected_beam(real, w);
        for (std::size_t k = 0; k < real.eves.size(); ++k)
            rec.eve_snr = std::max(rec.eve_snr,
                                   eve_snr_multi(real, k, w, beam, params));
    }
    return rec;
}

/*!
 * Run \c n_trials independent trials.
 *
 * Trial i draws from its own stream seeded by (seed, i), so the output is
 * identical for every worker count. \c workers = 0 uses the hardware
 * concurrency.
 */
inline std::vector<TrialRecord> run_trials(SystemParams const& params,
                                           AntennaMode mode, int n_trials,
                                           std::uint64_t seed,
                                           unsigned workers = 0)
{
    if (n_trials < 1)
        throw DomainError("run_trials: n_trials must be >= 1");
    params.validate();
    if (mode == AntennaMode::single && params.n_ant != 1)
        throw ModeError("run_trials: single mode requires n_ant = 1");

    std::vector<TrialRecord> out(static_cast<std::size_t>(n_trials));
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
        {
            auto rng = trial_rng(seed, i);
            out[i] = simulate_trial(params, mode, rng);
        }
    };

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n_trials));
    if (workers == 1)
    {
        work(0, out.size());
        return out;
    }
    std::vector<std::jthread> pool;
    std::size_t const chunk = (out.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < out.size(); begin += chunk)
        pool.emplace_back(work, begin, std::min(out.size(), begin + chunk));
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Empirical CDF: eval(x) = #{samples <= x} / n.
 */
class EmpiricalCdf
{
  public:
    explicit EmpiricalCdf(std::vector<double> samples)
        : sorted_(std::move(samples))
    {
        if (sorted_.empty())
            throw DomainError("empirical_cdf: no samples");
        std::sort(sorted_.begin(), sorted_.end());
    }

    double operator()(double x) const
    {
        auto const it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
        return static_cast<double>(it - sorted_.begin())
               / static_cast<double>(sorted_.size());
    }

    std::size_t size() const { return sorted_.size(); }
    std::span<double const> sorted_samples() const { return sorted_; }

    SnrCdf as_snr_cdf(std::string label) const
    {
        auto self = *this;
        return {std::move(label), [self](double x) { return self(x); }, {}};
    }

  private:
    std::vector<double> sorted_;
};

inline EmpiricalCdf empirical_cdf(std::vector<double> samples)
{
    return EmpiricalCdf(std::move(samples));
}

inline std::vector<double> bob_samples(std::span<TrialRecord const> records)
{
    std::vector<double> out;
    out.reserve(records.size());
    for (auto const& r : records)
        out.push_back(r.bob_snr);
    return out;
}

inline std::vector<double> eve_samples(std::span<TrialRecord const> records)
{
    std::vector<double> out;
    out.reserve(records.size());
    for (auto const& r : records)
        out.push_back(r.eve_snr);
    return out;
}

//! Kolmogorov-Smirnov distance sup_x |F(x) - F_n(x)|.
template<class Cdf>
double ks_distance(Cdf const& model, EmpiricalCdf const& emp)
{
    auto const xs = emp.sorted_samples();
    double const n = static_cast<double>(xs.size());
    double d = 0;
    std::size_t i = 0;
    while (i < xs.size())
    {
        // step over ties so both sides of each jump are compared
        std::size_t j = i;
        while (j < xs.size() && xs[j] == xs[i])
            ++j;
        double const f = model(xs[i]);
        d = std::max({d, std::fabs(f - static_cast<double>(i) / n),
                      std::fabs(f - static_cast<double>(j) / n)});
        i = j;
    }
    return d;
}

//---------------------------------------------------------------------------//
struct CapacityEstimate
{
    double mean{0};
    double std_error{0};
};

//! Sample mean of [log2(1 + bob) - log2(1 + eve)]^+ and its standard error.
inline CapacityEstimate
mc_secrecy_capacity(std::span<TrialRecord const> records)
{
    if (records.empty())
        throw DomainError("mc_secrecy_capacity: no records");
    double sum = 0;
    double sum_sq = 0;
    for (auto const& r : records)
    {
        double const c
            = std::fmax(std::log2(1 + r.bob_snr) - std::log2(1 + r.eve_snr),
                        0.0);
        sum += c;
        sum_sq += c * c;
    }
    double const n = static_cast<double>(records.size());
    double const mean = sum / n;
    double se = 0;
    if (records.size() > 1)
    {
        double const var = std::fmax(sum_sq / n - mean * mean, 0.0) * n
                           / (n - 1);
        se = std::sqrt(var / n);
    }
    return {mean, se};
}

}  // namespace rissec
