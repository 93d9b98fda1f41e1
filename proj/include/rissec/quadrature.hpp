//---------------------------------------------------------------------------//
//! \file rissec/quadrature.hpp
//! Adaptive Gauss-Kronrod (7-15) integration on finite intervals.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace rissec
{
struct QuadratureOptions
{
    double rel_tol{1e-10};
    double abs_tol{0};
    int max_depth{40};
    long max_subdivisions{100000};
};

namespace detail
{
// Kronrod abscissae (non-negative half) and weights, with the embedded
// 7-point Gauss weights on the odd-indexed abscissae.
inline constexpr std::array<double, 8> gk15_x{
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> gk15_wk{
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gk15_wg{
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

// Returns (kronrod estimate, |kronrod - gauss|).
template<class F>
std::pair<double, double> gk15(F& f, double a, double b)
{
    double const center = 0.5 * (a + b);
    double const half = 0.5 * (b - a);
    double const fc = f(center);
    double kronrod = fc * gk15_wk[7];
    double gauss = fc * gk15_wg[3];
    for (int i = 0; i < 7; ++i)
    {
        double const dx = half * gk15_x[i];
        double const fsum = f(center - dx) + f(center + dx);
        kronrod += gk15_wk[i] * fsum;
        if (i % 2 == 1)
            gauss += gk15_wg[i / 2] * fsum;
    }
    return {kronrod * half, std::fabs((kronrod - gauss) * half)};
}

template<class F>
double integrate_recursive(F& f, double a, double b, double whole,
                           double err, double tol, int depth, long& budget)
{
    if (err <= tol || err <= 1e-15 * std::fabs(whole) || depth <= 0
        || budget <= 0 || !(b - a > 0))
        return whole;
    --budget;
    double const mid = 0.5 * (a + b);
    auto [left, lerr] = gk15(f, a, mid);
    auto [right, rerr] = gk15(f, mid, b);
    return integrate_recursive(f, a, mid, left, lerr, 0.5 * tol, depth - 1,
                               budget)
           + integrate_recursive(f, mid, b, right, rerr, 0.5 * tol,
                                 depth - 1, budget);
}
}  // namespace detail

/*!
 * Integrate \c f over consecutive pieces [p_0, p_1], [p_1, p_2], ... by
 * recursive bisection.
 *
 * The absolute tolerance is fixed from the initial estimate of the whole
 * integral and shared between pieces in proportion to their length, so the
 * relative target refers to the full integral rather than to each piece.
 */
template<class F>
double integrate_adaptive_pieces(F&& f, std::span<double const> points,
                                 QuadratureOptions const& opts = {})
{
    if (points.size() < 2)
        return 0.0;
    std::vector<std::pair<double, double>> first;
    double total = 0;
    for (std::size_t i = 1; i < points.size(); ++i)
    {
        first.push_back(detail::gk15(f, points[i - 1], points[i]));
        total += first.back().first;
    }
    double const length = points.back() - points.front();
    if (!(length > 0))
        return 0.0;
    // the floor stops bisection on integrands that underflow to zero
    double const tol
        = std::max({opts.abs_tol, opts.rel_tol * std::fabs(total),
                    std::numeric_limits<double>::min()});
    long budget = opts.max_subdivisions;
    double sum = 0;
    for (std::size_t i = 1; i < points.size(); ++i)
    {
        auto const [whole, err] = first[i - 1];
        double const share = (points[i] - points[i - 1]) / length;
        sum += detail::integrate_recursive(f, points[i - 1], points[i], whole,
                                           err, tol * share, opts.max_depth,
                                           budget);
    }
    return sum;
}

//! Integrate \c f over [a, b]; see \c integrate_adaptive_pieces.
template<class F>
double integrate_adaptive(F&& f, double a, double b,
                          QuadratureOptions const& opts = {})
{
    if (a == b)
        return 0.0;
    double const points[] = {a, b};
    return integrate_adaptive_pieces(f, points, opts);
}

}  // namespace rissec
