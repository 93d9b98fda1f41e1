//---------------------------------------------------------------------------//
//! \file rissec/channel.hpp
//! Fading realizations and per-trial SNRs for Bob and the eavesdroppers.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "params.hpp"

namespace rissec
{
//---------------------------------------------------------------------------//
//! Small-scale fading seen by one UAV.
struct EveChannel
{
    SphericalPoint point;
    CVector v;  //!< RIS elements -> UAV, length N
    CVector u;  //!< BS antennas -> UAV, length K
};

/*!
 * One draw of every small-scale fading coefficient plus the RIS phases.
 *
 * Coefficients are stored as they multiply the signal: Bob receives
 * sum_i g_i e^{j phi_i} h_{i,j} from antenna j. Conjugations in the
 * vector notation g^H, v^H, u^H are absorbed into the stored values, which
 * leaves every distribution unchanged since all fading is circular.
 */
struct ChannelRealization
{
    int n_ris{0};
    int n_ant{0};
    std::vector<cplx> h;  //!< N x K, row-major: h[i * K + j]
    CVector g;
    std::vector<double> phases;
    std::vector<EveChannel> eves;

    cplx h_at(int i, int j) const
    {
        return h[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ant)
                 + static_cast<std::size_t>(j)];
    }
};

namespace detail
{
// Standard circular complex Gaussian CN(0, 1) by Marsaglia's polar method:
// for (u, v) uniform in the unit disk, -ln(s) ~ Exp(1) and the direction
// (u, v) / sqrt(s) is uniform and independent of it.
template<class Rng>
cplx sample_cn(Rng& rng)
{
    double u, v, s;
    do
    {
        u = 2 * uniform01(rng) - 1;
        v = 2 * uniform01(rng) - 1;
        s = u * u + v * v;
    } while (s >= 1 || s == 0);
    double const scale = std::sqrt(-std::log(s) / s);
    return {u * scale, v * scale};
}

template<class Rng>
void fill_rician(CVector& out, CVector const& los, double factor, Rng& rng)
{
    double const los_amp = std::sqrt(factor / (factor + 1.0));
    double const nlos_amp = std::sqrt(1.0 / (factor + 1.0));
    out.resize(los.size());
    for (std::size_t i = 0; i < los.size(); ++i)
        out[i] = los_amp * los[i] + nlos_amp * sample_cn(rng);
}

inline void require_single(ChannelRealization const& real, char const* who)
{
    if (real.n_ant != 1)
        throw ModeError(std::string(who) + ": requires a single BS antenna");
}

inline EveChannel const&
eve_at(ChannelRealization const& real, std::size_t k, char const* who)
{
    if (k >= real.eves.size())
        throw std::out_of_range(std::string(who)
                                + ": eavesdropper index out of range");
    return real.eves[k];
}
}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Draw a channel realization.
 *
 * BS-RIS and RIS-Bob links are Rayleigh; RIS-UAV and BS-UAV links are
 * Rician with factors \c rician_ris_eve and \c rician_bs_eve. Phases are
 * left at zero.
 */
template<class Rng>
ChannelRealization sample_realization(SystemParams const& params,
                                      std::span<SphericalPoint const> eves,
                                      Rng& rng)
{
    ChannelRealization real;
    real.n_ris = params.n_ris;
    real.n_ant = params.n_ant;
    auto const n = static_cast<std::size_t>(params.n_ris);
    auto const k = static_cast<std::size_t>(params.n_ant);
    real.h.resize(n * k);
    for (auto& x : real.h)
        x = detail::sample_cn(rng);
    real.g.resize(n);
    for (auto& x : real.g)
        x = detail::sample_cn(rng);
    real.phases.assign(n, 0.0);
    real.eves.reserve(eves.size());
    for (auto const& p : eves)
    {
        EveChannel e;
        e.point = p;
        detail::fill_rician(e.v, los_steering_ris(p, params),
                            params.rician_ris_eve, rng);
        detail::fill_rician(e.u, los_steering_bs(p, params),
                            params.rician_bs_eve, rng);
        real.eves.push_back(std::move(e));
    }
    return real;
}

//! Draw i.i.d. uniform phases on [0, 2 pi) for the random-phase mode.
template<class Rng>
void randomize_phases(ChannelRealization& real, Rng& rng)
{
    for (auto& phi : real.phases)
        phi = 2 * std::numbers::pi * uniform01(rng);
}

inline double wrap_phase(double phi)
{
    double r = std::fmod(phi, 2 * std::numbers::pi);
    if (r < 0)
        r += 2 * std::numbers::pi;
    return r;
}

//! Phases that co-phase every reflected path at Bob (single antenna).
inline std::vector<double> optimal_phase_shifts(ChannelRealization const& real)
{
    detail::require_single(real, "optimal_phase_shifts");
    std::vector<double> phases(real.g.size());
    for (std::size_t i = 0; i < phases.size(); ++i)
        phases[i] = wrap_phase(-std::arg(real.g[i]) - std::arg(real.h[i]));
    return phases;
}

/*!
 * Effective BS-to-Bob channel g^T Phi H as a length-K vector:
 * entry j is sum_i g_i e^{j phi_i} h_{i,j}.
 */
inline CVector cascaded_channel(ChannelRealization const& real)
{
    auto const k = static_cast<std::size_t>(real.n_ant);
    CVector out(k, cplx{0});
    for (std::size_t i = 0; i < real.g.size(); ++i)
    {
        cplx const c = real.g[i] * std::polar(1.0, real.phases[i]);
        cplx const* row = real.h.data() + i * k;
        for (std::size_t j = 0; j < k; ++j)
            out[j] += c * row[j];
    }
    return out;
}

//! Phi H w, the beamformed signal leaving each RIS element.
inline CVector
reflected_beam(ChannelRealization const& real, std::span<cplx const> w)
{
    auto const k = static_cast<std::size_t>(real.n_ant);
    if (w.size() != k)
        throw DomainError("reflected_beam: beamformer length must equal K");
    CVector out(real.g.size());
    for (std::size_t i = 0; i < out.size(); ++i)
    {
        cplx const* row = real.h.data() + i * k;
        cplx acc = 0;
        for (std::size_t j = 0; j < k; ++j)
            acc += row[j] * w[j];
        out[i] = acc * std::polar(1.0, real.phases[i]);
    }
    return out;
}

//! Bob's SNR under optimal phases: rho (D d_B)^{-alpha} (sum |g_i||h_i|)^2.
inline double
bob_snr_single(ChannelRealization const& real, SystemParams const& params)
{
    detail::require_single(real, "bob_snr_single");
    double amp = 0;
    for (std::size_t i = 0; i < real.g.size(); ++i)
        amp += std::abs(real.g[i]) * std::abs(real.h[i]);
    return params.rho_linear() * params.bob_pathloss() * amp * amp;
}

/*!
 * SNR at UAV \c k with a single BS antenna.
 *
 * Uses the exact RIS-UAV distance for the reflected path. \c beam is
 * Phi h (see \c reflected_beam with w = 1), shared by every UAV in a trial.
 */
inline double eve_snr_single(ChannelRealization const& real, std::size_t k,
                             std::span<cplx const> beam,
                             SystemParams const& params)
{
    detail::require_single(real, "eve_snr_single");
    auto const& eve = detail::eve_at(real, k, "eve_snr_single");
    if (beam.size() != eve.v.size())
        throw DomainError("eve_snr_single: dimension mismatch");
    double const alpha = params.pathloss_exp;
    cplx reflected = 0;
    for (std::size_t i = 0; i < eve.v.size(); ++i)
        reflected += eve.v[i] * beam[i];
    double const d_ris = dist_ris_eve(eve.point, params);
    cplx const z = std::pow(params.dist_bs_ris * d_ris, -alpha / 2) * reflected
                   + std::pow(eve.point.r, -alpha / 2) * eve.u[0];
    return params.rho_linear() * std::norm(z);
}

inline double eve_snr_single(ChannelRealization const& real, std::size_t k,
                             SystemParams const& params)
{
    detail::require_single(real, "eve_snr_single");
    cplx const one{1.0};
    auto const beam = reflected_beam(real, std::span<cplx const>(&one, 1));
    return eve_snr_single(real, k, beam, params);
}

//---------------------------------------------------------------------------//
/*!
 * Maximum-ratio transmit beamformer for the cascaded channel g^T Phi H.
 *
 * Returns the unit-norm w with g^T Phi H w = ||g^T Phi H||.
 */
inline CVector mrt_beamformer(ChannelRealization const& real)
{
    CVector w = cascaded_channel(real);
    double norm_sq = 0;
    for (auto& x : w)
    {
        norm_sq += std::norm(x);
        x = std::conj(x);
    }
    if (!(norm_sq > 0))
        throw DegenerateChannelError(
            "mrt_beamformer: effective channel g^T Phi H is zero");
    double const scale = 1.0 / std::sqrt(norm_sq);
    for (auto& x : w)
        x *= scale;
    return w;
}

//! Bob's SNR with MRT: rho (D d_B)^{-alpha} sum_j |sum_i g_i h_ij e^{j phi_i}|^2.
inline double
bob_snr_multi(ChannelRealization const& real, SystemParams const& params)
{
    double sum = 0;
    for (auto const& e : cascaded_channel(real))
        sum += std::norm(e);
    return params.rho_linear() * params.bob_pathloss() * sum;
}

/*!
 * SNR at UAV \c k with K antennas and beamformer \c w, given the
 * precomputed \c beam = Phi H w.
 *
 * The reflected path uses the far-RIS approximation d_{RIS,E} = D.
 */
inline double eve_snr_multi(ChannelRealization const& real, std::size_t k,
                            std::span<cplx const> w,
                            std::span<cplx const> beam,
                            SystemParams const& params)
{
    auto const& eve = detail::eve_at(real, k, "eve_snr_multi");
    if (w.size() != eve.u.size() || beam.size() != eve.v.size())
        throw DomainError("eve_snr_multi: dimension mismatch");
    double const alpha = params.pathloss_exp;
    cplx reflected = 0;
    for (std::size_t i = 0; i < beam.size(); ++i)
        reflected += eve.v[i] * beam[i];
    cplx direct = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
        direct += eve.u[j] * w[j];
    cplx const z = std::pow(params.dist_bs_ris, -alpha) * reflected
                   + std::pow(eve.point.r, -alpha / 2) * direct;
    return params.rho_linear() * std::norm(z);
}

inline double eve_snr_multi(ChannelRealization const& real, std::size_t k,
                            std::span<cplx const> w,
                            SystemParams const& params)
{
    auto const beam = reflected_beam(real, w);
    return eve_snr_multi(real, k, w, beam, params);
}

}  // namespace rissec
