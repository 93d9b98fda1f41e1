//---------------------------------------------------------------------------//
//! \file rissec/params.hpp
//! System constants for the RIS-aided downlink.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace rissec
{
inline constexpr double speed_of_light = 299792458.0;

inline double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

//! Factor n into rows x cols with rows the largest divisor <= sqrt(n).
inline std::pair<int, int> ris_grid(int n)
{
    if (n < 1)
        throw DomainError("ris_grid: element count must be >= 1");
    int rows = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (rows * rows > n)
        --rows;
    while (n % rows != 0)
        --rows;
    return {rows, n / rows};
}

//---------------------------------------------------------------------------//
/*!
 * Scalar system constants.
 *
 * Distances are in meters. The BS sits at the origin, the RIS at (0, D, 0)
 * and eavesdropping UAVs fill the upper hemisphere of radius \c radius
 * around the BS.
 */
struct SystemParams
{
    int n_ris{100};
    int n_ant{1};
    double dist_bs_ris{100.0};
    double dist_ris_bob{10.0};
    double radius{50.0};
    double pathloss_exp{2.0};
    double rho_db{20.0};
    double eve_density{1e-4};
    double rician_ris_eve{db_to_linear(3.0)};
    double rician_bs_eve{db_to_linear(3.0)};
    double carrier_hz{2.4e9};
    double spacing_row{speed_of_light / 2.4e9 / 4};
    double spacing_col{speed_of_light / 2.4e9 / 4};
    int ris_rows{10};
    int ris_cols{10};

    //! Default operating point used throughout the figures.
    static SystemParams defaults() { return {}; }

    double wavelength() const { return speed_of_light / carrier_hz; }
    double rho_linear() const { return db_to_linear(rho_db); }
    //! (D d_B)^{-alpha}
    double bob_pathloss() const
    {
        return std::pow(dist_bs_ris * dist_ris_bob, -pathloss_exp);
    }
    //! N / D^{2 alpha}: variance of the reflected eavesdropper path.
    double reflected_gain() const
    {
        return n_ris * std::pow(dist_bs_ris, -2 * pathloss_exp);
    }
    //! Expected number of UAVs in the hemisphere.
    double mean_eve_count() const
    {
        return eve_density * 2.0 / 3.0 * std::numbers::pi * radius * radius
               * radius;
    }

    //! Set N and re-derive a near-square RIS grid.
    void set_ris_elements(int n)
    {
        n_ris = n;
        if (n >= 1)
            std::tie(ris_rows, ris_cols) = ris_grid(n);
    }

    //! Set the carrier and reset element spacing to a quarter wavelength.
    void set_carrier(double hz)
    {
        carrier_hz = hz;
        spacing_row = spacing_col = wavelength() / 4;
    }

    //! Every violated invariant, as "field: message" strings.
    std::vector<std::string> violations() const
    {
        std::vector<std::string> out;
        auto check = [&out](bool ok, char const* field, char const* msg) {
            if (!ok)
                out.push_back(std::string(field) + ": " + msg);
        };
        check(n_ris >= 1, "n_ris", "must be >= 1");
        check(n_ant >= 1, "n_ant", "must be >= 1");
        check(ris_rows >= 1, "ris_rows", "must be >= 1");
        check(ris_cols >= 1, "ris_cols", "must be >= 1");
        check(n_ris == ris_rows * ris_cols, "ris_rows",
              "ris_rows * ris_cols must equal n_ris");
        check(dist_bs_ris > 0, "dist_bs_ris", "must be > 0");
        check(dist_ris_bob > 0, "dist_ris_bob", "must be > 0");
        check(radius > 0, "radius", "must be > 0");
        check(radius < dist_bs_ris, "radius",
              "must be < dist_bs_ris (far-RIS regime: UAVs much closer to "
              "the BS than the RIS is)");
        check(pathloss_exp > 0, "pathloss_exp", "must be > 0");
        check(std::isfinite(rho_db), "rho_db", "must be finite");
        check(eve_density >= 0, "eve_density", "must be >= 0");
        check(rician_ris_eve >= 0, "rician_ris_eve", "must be >= 0");
        check(rician_bs_eve >= 0, "rician_bs_eve", "must be >= 0");
        check(carrier_hz > 0, "carrier_hz", "must be > 0");
        check(spacing_row > 0, "spacing_row", "must be > 0");
        check(spacing_col > 0, "spacing_col", "must be > 0");
        return out;
    }

    void validate() const
    {
        auto v = violations();
        if (v.empty())
            return;
        std::string msg = "invalid SystemParams:";
        for (auto const& s : v)
            msg += " " + s + ";";
        throw DomainError(msg);
    }
};

}  // namespace rissec
