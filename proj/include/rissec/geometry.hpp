//---------------------------------------------------------------------------//
//! \file rissec/geometry.hpp
//! UAV positions in the BS-centered hemisphere and LoS steering vectors.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "params.hpp"

namespace rissec
{
using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

//---------------------------------------------------------------------------//
/*!
 * UAV position in spherical coordinates about the BS.
 *
 * \c polar is measured from the zenith (z axis) and lies in [0, pi/2];
 * \c azimuth is measured from the x axis in the ground plane. The RIS is at
 * (r, polar, azimuth) = (D, pi/2, pi/2).
 */
struct SphericalPoint
{
    double r{0};
    double polar{0};
    double azimuth{0};

    std::array<double, 3> cartesian() const
    {
        double const s = std::sin(polar);
        return {r * s * std::cos(azimuth), r * s * std::sin(azimuth),
                r * std::cos(polar)};
    }

    bool in_hemisphere(double radius) const
    {
        return r >= 0 && r <= radius && polar >= 0
               && polar <= std::numbers::pi / 2 && azimuth >= 0
               && azimuth < 2 * std::numbers::pi;
    }
};

//! Uniform draw on [0, 1) from the top 53 bits of a 64-bit engine.
template<class Rng>
double uniform01(Rng& rng)
{
    static_assert(Rng::max() == 0xffffffffffffffffull
                      && Rng::min() == 0,
                  "uniform01 expects a full-range 64-bit engine");
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

//! Uniform draw on (0, 1].
template<class Rng>
double uniform_open_closed(Rng& rng)
{
    return 1.0 - uniform01(rng);
}

//---------------------------------------------------------------------------//
/*!
 * Sample a homogeneous PPP of intensity \c eve_density over the hemisphere.
 *
 * The count is Poisson with mean equal to intensity times the hemisphere
 * volume; given the count, points are uniform in volume.
 */
template<class Rng>
std::vector<SphericalPoint>
sample_ppp_hemisphere(SystemParams const& params, Rng& rng)
{
    std::vector<SphericalPoint> points;
    double const mean = params.mean_eve_count();
    if (!(mean > 0))
        return points;
    std::poisson_distribution<int> count_dist(mean);
    int const count = count_dist(rng);
    points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
    {
        SphericalPoint p;
        p.r = params.radius * std::cbrt(uniform_open_closed(rng));
        double const cos_polar = uniform01(rng);
        p.polar = std::acos(cos_polar);
        p.azimuth = 2 * std::numbers::pi
                    * uniform01(rng);
        points.push_back(p);
    }
    return points;
}

//! Exact RIS-to-UAV distance.
inline double dist_ris_eve(SphericalPoint const& p, SystemParams const& params)
{
    double const d = params.dist_bs_ris;
    double const sq = p.r * p.r + d * d
                      - 2 * p.r * d * std::sin(p.polar) * std::sin(p.azimuth);
    return std::sqrt(std::fmax(sq, 0.0));
}

//---------------------------------------------------------------------------//
/*!
 * Departure angles from the RIS toward a UAV.
 *
 * The RIS lies in the x-z plane at (0, D, 0) with its normal pointing back
 * toward the BS (-y). \c azimuth is the horizontal angle from that normal,
 * \c elevation the angle above the ground plane.
 */
struct DepartureAngles
{
    double azimuth;
    double elevation;
};

inline DepartureAngles
ris_departure_angles(SphericalPoint const& p, SystemParams const& params)
{
    auto [x, y, z] = p.cartesian();
    double const dx = x;
    double const dy = y - params.dist_bs_ris;
    double const horizontal = std::hypot(dx, dy);
    return {std::atan2(dx, -dy), std::atan2(z, horizontal)};
}

//---------------------------------------------------------------------------//
/*!
 * LoS component of the RIS-to-UAV channel.
 *
 * Element (m, n) of the ris_rows x ris_cols grid sits at flat index
 * m * ris_cols + n. Both the row and column progressions use the phase
 * slope sin(azimuth) cos(elevation).
 */
inline CVector
los_steering_ris(SphericalPoint const& p, SystemParams const& params)
{
    double const lambda = params.wavelength();
    double const dist = dist_ris_eve(p, params);
    auto const angles = ris_departure_angles(p, params);
    double const slope = std::sin(angles.azimuth) * std::cos(angles.elevation);
    double const k = 2 * std::numbers::pi / lambda;

    cplx const common = std::polar(1.0, -k * dist);
    CVector col(static_cast<std::size_t>(params.ris_cols));
    for (int n = 0; n < params.ris_cols; ++n)
        col[static_cast<std::size_t>(n)]
            = std::polar(1.0, -k * n * params.spacing_col * slope);

    CVector v;
    v.reserve(static_cast<std::size_t>(params.ris_rows * params.ris_cols));
    for (int m = 0; m < params.ris_rows; ++m)
    {
        cplx const row
            = common * std::polar(1.0, -k * m * params.spacing_row * slope);
        for (auto const& c : col)
            v.push_back(row * c);
    }
    return v;
}

/*!
 * LoS component of the BS-to-UAV channel: a half-wavelength ULA along x.
 *
 * With one antenna this is the scalar e^{-j 2 pi r / lambda}.
 */
inline CVector
los_steering_bs(SphericalPoint const& p, SystemParams const& params)
{
    double const lambda = params.wavelength();
    double const k = 2 * std::numbers::pi / lambda;
    double const dir_cos = std::sin(p.polar) * std::cos(p.azimuth);
    CVector u(static_cast<std::size_t>(params.n_ant));
    for (int j = 0; j < params.n_ant; ++j)
        u[static_cast<std::size_t>(j)]
            = std::polar(1.0, -(k * p.r + std::numbers::pi * j * dir_cos));
    return u;
}

}  // namespace rissec
