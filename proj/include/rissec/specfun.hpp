//---------------------------------------------------------------------------//
//! \file rissec/specfun.hpp
//! Gamma family, first-order Marcum-Q and Gauss-Chebyshev nodes.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace rissec
{
//---------------------------------------------------------------------------//
/*!
 * Truncation controls shared by the series and quadrature paths.
 *
 * \c n_bar is the highest retained order of the outer Marcum-Q/Poisson
 * series; \c w_nodes is the number of Gauss-Chebyshev nodes used for the
 * capacity integral.
 */
struct Truncation
{
    int n_bar{10};
    int w_nodes{20};

    void validate() const
    {
        if (n_bar < 0)
            throw DomainError("Truncation: n_bar must be >= 0");
        if (w_nodes < 1)
            throw DomainError("Truncation: w_nodes must be >= 1");
    }
};

namespace detail
{
inline void require_finite_positive(double s, char const* who)
{
    if (!(s > 0) || !std::isfinite(s))
        throw DomainError(std::string(who) + ": shape must be finite and > 0");
}

inline void require_nonneg(double z, char const* who)
{
    if (!(z >= 0) || std::isnan(z))
        throw DomainError(std::string(who) + ": argument must be >= 0");
}

// log(z^s e^{-z} / Gamma(s)), the common prefactor of P and Q.
inline double log_gamma_prefactor(double s, double z)
{
    return s * std::log(z) - z - std::lgamma(s);
}

// Regularized lower incomplete gamma by power series; converges fast for
// z < s + 1.
inline double gamma_p_series(double s, double z)
{
    double ap = s;
    double term = 1.0 / s;
    double sum = term;
    for (int n = 0; n < 100000; ++n)
    {
        ap += 1.0;
        term *= z / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-17)
            break;
    }
    return sum * std::exp(log_gamma_prefactor(s, z));
}

// Regularized upper incomplete gamma by continued fraction (modified Lentz);
// used for z >= s + 1.
inline double gamma_q_contfrac(double s, double z)
{
    constexpr double tiny = 1e-300;
    double b = z + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i)
    {
        double const an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        double const delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16)
            break;
    }
    return std::exp(log_gamma_prefactor(s, z)) * h;
}
}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Gamma function.
 *
 * Overflows to +inf above s ~ 171.6; use \c log_gamma_fn there.
 */
inline double gamma_fn(double s)
{
    detail::require_finite_positive(s, "gamma_fn");
    return std::tgamma(s);
}

inline double log_gamma_fn(double s)
{
    detail::require_finite_positive(s, "log_gamma_fn");
    return std::lgamma(s);
}

//! Regularized lower incomplete gamma P(s, z) = gamma(s, z) / Gamma(s).
inline double gamma_p(double s, double z)
{
    detail::require_finite_positive(s, "gamma_p");
    detail::require_nonneg(z, "gamma_p");
    if (z == 0)
        return 0.0;
    if (std::isinf(z))
        return 1.0;
    if (z < s + 1.0)
        return detail::gamma_p_series(s, z);
    return 1.0 - detail::gamma_q_contfrac(s, z);
}

//! Regularized upper incomplete gamma Q(s, z) = Gamma(s, z) / Gamma(s).
inline double gamma_q(double s, double z)
{
    detail::require_finite_positive(s, "gamma_q");
    detail::require_nonneg(z, "gamma_q");
    if (z == 0)
        return 1.0;
    if (std::isinf(z))
        return 0.0;
    if (z < s + 1.0)
        return 1.0 - detail::gamma_p_series(s, z);
    return detail::gamma_q_contfrac(s, z);
}

//! Lower incomplete gamma function gamma(s, z).
inline double lower_inc_gamma(double s, double z)
{
    return gamma_fn(s) * gamma_p(s, z);
}

//! Upper incomplete gamma function Gamma(s, z).
inline double upper_inc_gamma(double s, double z)
{
    return gamma_fn(s) * gamma_q(s, z);
}

inline double binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return std::round(r);
}

//---------------------------------------------------------------------------//
/*!
 * Upper bound on the dropped tail of the Marcum-Q series after order \c n.
 *
 * Every Q(m+1, b^2/2) factor is at most one, so the remainder is bounded by
 * the Poisson(a^2/2) mass above \c n, which equals P(n + 1, a^2/2).
 */
inline double marcum_q1_tail_bound(double a, int n)
{
    detail::require_nonneg(a, "marcum_q1_tail_bound");
    double const lambda = 0.5 * a * a;
    if (lambda == 0)
        return 0.0;
    return gamma_p(n + 1.0, lambda);
}

//---------------------------------------------------------------------------//
/*!
 * First-order Marcum-Q function.
 *
 * \f[
 *   Q_1(a,b) = \sum_{n\ge 0} e^{-a^2/2}\frac{(a^2/2)^n}{n!}
 *              \frac{\Gamma(n+1, b^2/2)}{n!}
 * \f]
 *
 * At least \c trunc.n_bar + 1 terms are summed; summation continues past
 * that until a geometric bound on the remaining Poisson mass falls below
 * 1e-17, so the result is accurate to double precision for any a. For
 * b < a the small complement 1 - Q_1 is summed instead. The result is
 * clamped to [0, 1].
 */
inline double marcum_q1(double a, double b, Truncation const& trunc = {})
{
    detail::require_nonneg(a, "marcum_q1");
    detail::require_nonneg(b, "marcum_q1");
    trunc.validate();
    if (b == 0)
        return 1.0;
    double const lambda = 0.5 * a * a;
    double const z = 0.5 * b * b;
    if (lambda == 0)
        return std::exp(-z);

    double const log_lambda = std::log(lambda);
    double const log_z = std::log(z);
    constexpr int max_terms = 100000;

    if (z < lambda)
    {
        // Q_1 is close to one here, so sum the complement
        //   1 - Q_1 = sum_k Pois(k; z) Pr[Pois(lambda) < k]
        // whose terms are all positive and small.
        double below = 0;  // Pr[Pois(lambda) <= k - 1]
        double comp = 0;
        for (int k = 1; k < max_terms; ++k)
        {
            below += std::exp((k - 1) * log_lambda - lambda - std::lgamma(k));
            double const p
                = std::exp(k * log_z - z - std::lgamma(k + 1.0));
            comp += p * below;
            if (k + 1 > 2 * z && p * z / (k + 1 - z) <= 1e-17 * comp)
                break;
        }
        return std::clamp(1.0 - comp, 0.0, 1.0);
    }

    // Q(n+1, z) by upward recurrence from Q(1, z) = e^{-z}.
    double q_n = std::exp(-z);
    double result = 0;
    for (int n = 0; n < max_terms; ++n)
    {
        if (n > 0)
            q_n += std::exp(n * log_z - z - std::lgamma(n + 1.0));
        double const w
            = std::exp(n * log_lambda - lambda - std::lgamma(n + 1.0));
        result += w * std::min(q_n, 1.0);
        // Poisson tail past n is at most w * lambda / (n + 1 - lambda).
        if (n >= trunc.n_bar && n + 1 > 2 * lambda
            && w * lambda / (n + 1 - lambda) < 1e-17)
            break;
    }
    return std::clamp(result, 0.0, 1.0);
}

//---------------------------------------------------------------------------//
//! One Gauss-Chebyshev (first kind) node and its sqrt(1 - t^2) factor.
struct ChebyshevNode
{
    double t;
    double weight_factor;
};

/*!
 * Nodes t_j = cos((2j - 1) pi / 2W), j = 1..W.
 *
 * With these, \f$ \int_{-1}^{1} f(t)\,dt \approx \frac{\pi}{W}\sum_j
 * f(t_j)\sqrt{1-t_j^2} \f$.
 */
inline std::vector<ChebyshevNode> gauss_chebyshev_nodes(int w)
{
    if (w < 1)
        throw DomainError("gauss_chebyshev_nodes: W must be >= 1");
    std::vector<ChebyshevNode> nodes;
    nodes.reserve(static_cast<std::size_t>(w));
    for (int j = 1; j <= w; ++j)
    {
        double const angle = (2.0 * j - 1.0) * std::numbers::pi / (2.0 * w);
        // sin(angle) is the exact sqrt(1 - cos^2) and avoids cancellation
        nodes.push_back({std::cos(angle), std::sin(angle)});
    }
    return nodes;
}

//! Approximates the integral of \c f over [-1, 1] with the W-node rule.
template<class F>
double gauss_chebyshev_integrate(F&& f, int w)
{
    double sum = 0;
    for (auto const& node : gauss_chebyshev_nodes(w))
        sum += f(node.t) * node.weight_factor;
    return std::numbers::pi / w * sum;
}

}  // namespace rissec
