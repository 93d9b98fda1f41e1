//---------------------------------------------------------------------------//
//! \file rissec/analysis.hpp
//! Closed-form and approximate SNR distributions and the ergodic secrecy
//! capacity.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "params.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace rissec
{
//---------------------------------------------------------------------------//
// TYPES
//---------------------------------------------------------------------------//
/*!
 * First two moments of Z = (sum_i |g_i||h_i|)^2 for Rayleigh g, h.
 */
struct MomentSet
{
    static constexpr double a1 = 1.0;
    static constexpr double a2 = std::numbers::pi * std::numbers::pi / 16;
    static constexpr double b1 = a2 * a2;
    static constexpr double b2 = 3 * a2;
    static constexpr double b3 = 3.0;
    static constexpr double b4 = 1.0;

    double m1{0};
    double m2{0};

    double variance() const { return m2 - m1 * m1; }
};

//! Moment-matched Gamma(shape, scale).
struct GammaApprox
{
    double shape{1};
    double scale{1};
};

/*!
 * A named CDF over SNR values.
 *
 * \c ccdf is carried separately so that tails keep relative accuracy where
 * 1 - cdf would cancel.
 */
struct SnrCdf
{
    std::string label;
    std::function<double(double)> cdf;
    std::function<double(double)> ccdf;

    double operator()(double x) const { return cdf(x); }
    double complement(double x) const
    {
        return ccdf ? ccdf(x) : 1.0 - cdf(x);
    }
};

enum class EveMethod
{
    series,
    quadrature,
    closed,
};

//---------------------------------------------------------------------------//
// LEGITIMATE LINK
//---------------------------------------------------------------------------//
inline MomentSet z_moments(int n_ris)
{
    if (n_ris < 1)
        throw DomainError("z_moments: n_ris must be >= 1");
    double const n = n_ris;
    MomentSet m;
    m.m1 = MomentSet::a1 * n + MomentSet::a2 * n * (n - 1);
    m.m2 = MomentSet::b1 * n * (n - 1) * (n - 2) * (n - 3)
           + MomentSet::b2 * n * (n - 1) * (2 * n - 1) + MomentSet::b3 * n * n
           + MomentSet::b4 * n;
    return m;
}

inline GammaApprox gamma_approx(MomentSet const& m)
{
    double const var = m.variance();
    if (!(var > 0) || !(m.m1 > 0))
        throw DomainError("gamma_approx: degenerate variance (m2 <= m1^2)");
    return {m.m1 * m.m1 / var, var / m.m1};
}

//! Gamma CDF of Bob's single-antenna SNR, scaled by rho (D d_B)^{-alpha}.
inline SnrCdf cdf_bob_single(SystemParams const& params, GammaApprox const& ga)
{
    double const unit = params.rho_linear() * params.bob_pathloss() * ga.scale;
    double const shape = ga.shape;
    return {"bob_single",
            [=](double x) { return gamma_p(shape, x / unit); },
            [=](double x) { return gamma_q(shape, x / unit); }};
}

inline SnrCdf cdf_bob_single(SystemParams const& params)
{
    return cdf_bob_single(params, gamma_approx(z_moments(params.n_ris)));
}

//! Gamma(K, N rho (D d_B)^{-alpha}) CDF of Bob's SNR with K antennas and MRT.
inline SnrCdf cdf_bob_multi(SystemParams const& params)
{
    if (params.n_ant < 1)
        throw DomainError("cdf_bob_multi: n_ant must be >= 1");
    double const unit
        = params.n_ris * params.rho_linear() * params.bob_pathloss();
    double const shape = params.n_ant;
    return {"bob_multi",
            [=](double x) { return gamma_p(shape, x / unit); },
            [=](double x) { return gamma_q(shape, x / unit); }};
}

//---------------------------------------------------------------------------//
// EAVESDROPPING LINK, SINGLE ANTENNA
//---------------------------------------------------------------------------//
/*!
 * CDF of one UAV's SNR at distance \c r: noncentral chi-square with two
 * degrees of freedom after the CLT and d_{RIS,E} = D approximations.
 */
inline double
cdf_eve_cond_single(double x, double r, SystemParams const& params)
{
    if (!(r > 0))
        throw DomainError("cdf_eve_cond_single: r must be > 0");
    if (!(x >= 0))
        throw DomainError("cdf_eve_cond_single: x must be >= 0");
    double const beta = params.rician_bs_eve;
    double const r_gain = std::pow(r, -params.pathloss_exp);
    double const mu = r_gain * beta / (beta + 1);
    double const sigma = std::sqrt(params.reflected_gain()
                                   + r_gain / (beta + 1));
    double const a = std::sqrt(2 * mu) / sigma;
    double const b = std::sqrt(2 * x) / (std::sqrt(params.rho_linear()) * sigma);
    return 1.0 - marcum_q1(a, b);
}

namespace detail
{
// r^2 Q_1(a(r), b(r)), the radial integrand of I(x).
inline double
i_single_integrand(double r, double x, SystemParams const& params)
{
    double const alpha = params.pathloss_exp;
    double const beta = params.rician_bs_eve;
    double const d2 = params.dist_bs_ris * params.dist_bs_ris;
    double const a = std::sqrt(2 * beta / (beta + 1))
                     / std::sqrt(params.n_ris * std::pow(r / d2, alpha)
                                 + 1 / (beta + 1));
    double const var = params.reflected_gain()
                       + std::pow(r, -alpha) / (beta + 1);
    double const b = std::sqrt(2 * x) / std::sqrt(params.rho_linear() * var);
    return r * r * marcum_q1(a, b);
}

inline double void_integral(SystemParams const& params)
{
    return params.radius * params.radius * params.radius / 3;
}

// Breakpoints on [0, R] bracketing the radius r_c below which a UAV's
// direct link dominates. At large x the radial integrand lives almost
// entirely inside [0, r_c], which a single rule on [0, R] would miss.
inline std::vector<double> radial_breakpoints(double r_c, double radius)
{
    std::vector<double> points{0.0};
    for (double f : {1.0 / 16, 1.0 / 4, 1.0, 4.0, 16.0})
    {
        double const r = f * r_c;
        if (r > points.back() && r < radius)
            points.push_back(r);
    }
    points.push_back(radius);
    return points;
}
}  // namespace detail

/*!
 * I(x) = int_0^R r^2 Q_1(a(r), b(r)) dr by adaptive quadrature.
 */
inline double i_single_quadrature(double x, SystemParams const& params)
{
    if (!(x >= 0))
        throw DomainError("i_single_quadrature: x must be >= 0");
    if (x == 0)
        return detail::void_integral(params);
    QuadratureOptions opts;
    opts.rel_tol = 1e-10;
    double const beta = params.rician_bs_eve;
    double const r_c = std::pow(params.rho_linear() * (beta + 1) / (2 * x),
                                1 / params.pathloss_exp);
    auto const points = detail::radial_breakpoints(r_c, params.radius);
    return integrate_adaptive_pieces(
        [&](double r) { return detail::i_single_integrand(r, x, params); },
        points, opts);
}

/*!
 * I(x) by the truncated triple series.
 *
 * Outer Poisson order n runs to \c trunc.n_bar; the inner sums over k <= n
 * and l <= k are complete. For x below 1e-12 rho the power
 * (x/rho)^{-3/alpha - l} overwhelms the incomplete gammas, so the
 * quadrature path is used there; x = 0 gives R^3/3.
 */
inline double i_single_series(double x, SystemParams const& params,
                              Truncation const& trunc = {})
{
    trunc.validate();
    if (!(x >= 0))
        throw DomainError("i_single_series: x must be >= 0");
    double const rho = params.rho_linear();
    if (x == 0)
        return detail::void_integral(params);
    if (x < 1e-12 * rho)
        return i_single_quadrature(x, params);

    double const alpha = params.pathloss_exp;
    double const beta = params.rician_bs_eve;
    double const c = x / rho;
    double const s0 = 3 / alpha;
    double const g = params.reflected_gain();
    double const z = (beta + 1) * c * std::pow(params.radius, alpha);
    double const log_c = std::log(c);
    int const n_bar = trunc.n_bar;

    // gamma(m + 3/alpha, z) for m = k + l in [0, 2 n_bar]
    std::vector<double> low_gamma(static_cast<std::size_t>(2 * n_bar + 1));
    for (int m = 0; m <= 2 * n_bar; ++m)
        low_gamma[static_cast<std::size_t>(m)] = lower_inc_gamma(m + s0, z);

    // inner[k] = sum_l C(k,l) (-g)^l c^{-3/alpha-l} gamma(k+l+3/alpha, z) / k!
    std::vector<double> inner(static_cast<std::size_t>(n_bar + 1));
    double k_fact = 1;
    for (int k = 0; k <= n_bar; ++k)
    {
        if (k > 0)
            k_fact *= k;
        double sum = 0;
        for (int l = 0; l <= k; ++l)
        {
            double const sign = (l % 2 == 0) ? 1.0 : -1.0;
            double const mag = std::exp(l * std::log(g) + (-s0 - l) * log_c);
            sum += sign * binomial(k, l) * mag
                   * low_gamma[static_cast<std::size_t>(k + l)];
        }
        inner[static_cast<std::size_t>(k)] = sum / k_fact;
    }

    double total = 0;
    double poisson = 1;  // beta^n / n!
    double partial = 0;  // sum_{k <= n} inner[k]
    for (int n = 0; n <= n_bar; ++n)
    {
        if (n > 0)
            poisson *= beta / n;
        partial += inner[static_cast<std::size_t>(n)];
        total += poisson * partial;
    }
    double const pref
        = std::exp(-beta) / (alpha * std::pow(beta + 1, s0));
    return std::fmax(pref * total, 0.0);
}

/*!
 * CDF of the strongest of the non-colluding PPP eavesdroppers,
 * exp(-2 pi rho_S I(x)).
 */
inline SnrCdf cdf_eve_single(SystemParams const& params,
                             Truncation const& trunc = {},
                             EveMethod method = EveMethod::series)
{
    if (method == EveMethod::closed)
        throw DomainError("cdf_eve_single: method must be series or quadrature");
    auto integral = [=](double x) {
        return method == EveMethod::series ? i_single_series(x, params, trunc)
                                           : i_single_quadrature(x, params);
    };
    double const density = params.eve_density;
    auto exponent = [=](double x) {
        return -2 * std::numbers::pi * density * integral(x);
    };
    return {method == EveMethod::series ? "eve_single_series"
                                        : "eve_single_quadrature",
            [=](double x) { return density > 0 ? std::exp(exponent(x)) : 1.0; },
            [=](double x) {
                return density > 0 ? -std::expm1(exponent(x)) : 0.0;
            }};
}

//---------------------------------------------------------------------------//
// EAVESDROPPING LINK, MULTIPLE ANTENNAS
//---------------------------------------------------------------------------//
/*!
 * Closed-form approximation of
 * I(x) = int_0^R r^2 exp(-x / (rho (N / D^{2 alpha} + r^{-alpha}))) dr
 * keeping the first-order term in N / D^{2 alpha}.
 */
inline double i_multi_closed(double x, SystemParams const& params)
{
    if (!(x >= 0))
        throw DomainError("i_multi_closed: x must be >= 0");
    if (x == 0)
        return detail::void_integral(params);
    double const alpha = params.pathloss_exp;
    double const c = x / params.rho_linear();
    double const s0 = 3 / alpha;
    double const g = params.reflected_gain();
    double const z = c / (std::pow(params.radius, -alpha) + g);
    double const first = std::exp(-s0 * std::log(c)) / alpha
                         * lower_inc_gamma(s0, z);
    double const second = s0 * (s0 + 1) * g
                          * std::exp((-s0 - 1) * std::log(c))
                          * lower_inc_gamma(s0 + 1, z);
    return std::fmax(first + second, 0.0);
}

//! The same integral by adaptive quadrature.
inline double i_multi_quadrature(double x, SystemParams const& params)
{
    if (!(x >= 0))
        throw DomainError("i_multi_quadrature: x must be >= 0");
    if (x == 0)
        return detail::void_integral(params);
    double const alpha = params.pathloss_exp;
    double const rho = params.rho_linear();
    double const g = params.reflected_gain();
    QuadratureOptions opts;
    opts.rel_tol = 1e-12;
    auto const points = detail::radial_breakpoints(
        std::pow(rho / x, 1 / alpha), params.radius);
    return integrate_adaptive_pieces(
        [&](double r) {
            if (r == 0)
                return 0.0;
            return r * r * std::exp(-x / (rho * (g + std::pow(r, -alpha))));
        },
        points, opts);
}

inline SnrCdf
cdf_eve_multi(SystemParams const& params, EveMethod method = EveMethod::closed)
{
    if (method == EveMethod::series)
        throw DomainError("cdf_eve_multi: method must be closed or quadrature");
    double const density = params.eve_density;
    auto exponent = [=](double x) {
        double const i = method == EveMethod::closed
                             ? i_multi_closed(x, params)
                             : i_multi_quadrature(x, params);
        return -2 * std::numbers::pi * density * i;
    };
    return {method == EveMethod::closed ? "eve_multi_closed"
                                        : "eve_multi_quadrature",
            [=](double x) { return density > 0 ? std::exp(exponent(x)) : 1.0; },
            [=](double x) {
                return density > 0 ? -std::expm1(exponent(x)) : 0.0;
            }};
}

//---------------------------------------------------------------------------//
// SECRECY CAPACITY
//---------------------------------------------------------------------------//
/*!
 * Ergodic secrecy capacity in bits per channel use.
 *
 * \f[
 *   C_s = \frac{1}{\ln 2}\int_0^\infty
 *         \frac{\bar F_B(x)\,F_E(x)}{1+x}\,dx
 * \f]
 * which is the difference of the two integrals over F_B-bar and
 * F_B-bar F_E-bar. With x = tan(pi (t + 1) / 4) the integral maps to
 * [-1, 1] and is evaluated with the W-node Gauss-Chebyshev rule.
 */
inline double ergodic_secrecy_capacity(SnrCdf const& bob, SnrCdf const& eve,
                                       Truncation const& trunc = {})
{
    trunc.validate();
    double sum = 0;
    for (auto const& node : gauss_chebyshev_nodes(trunc.w_nodes))
    {
        double const angle = std::numbers::pi / 4 * (node.t + 1);
        double const x = std::tan(angle);
        double const sec = 1 / std::cos(angle);
        double const bob_ccdf = bob.complement(x);
        if (bob_ccdf == 0)
            continue;
        sum += node.weight_factor * sec * sec / (1 + x) * bob_ccdf * eve(x);
    }
    double const cs = std::numbers::pi * std::numbers::pi
                      / (4.0 * trunc.w_nodes) * sum / std::numbers::ln2;
    return std::fmax(cs, 0.0);
}

//! Analytical CDF pair for the configured antenna count.
struct AnalyticModel
{
    SnrCdf bob;
    SnrCdf eve;
};

enum class AntennaMode
{
    single,
    multi,
};

inline AnalyticModel analytic_model(SystemParams const& params,
                                    AntennaMode mode,
                                    Truncation const& trunc = {})
{
    if (mode == AntennaMode::single)
        return {cdf_bob_single(params), cdf_eve_single(params, trunc)};
    return {cdf_bob_multi(params), cdf_eve_multi(params)};
}

inline double analytic_secrecy_capacity(SystemParams const& params,
                                        AntennaMode mode,
                                        Truncation const& trunc = {})
{
    auto const model = analytic_model(params, mode, trunc);
    return ergodic_secrecy_capacity(model.bob, model.eve, trunc);
}

}  // namespace rissec
