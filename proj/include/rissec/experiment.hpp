//---------------------------------------------------------------------------//
//! \file rissec/experiment.hpp
//! Experiment configuration, figure tables and CSV/manifest output.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <vector>

#include "analysis.hpp"
#include "montecarlo.hpp"
#include "params.hpp"
#include "specfun.hpp"

#ifndef RISSEC_VERSION
#    define RISSEC_VERSION "0.1.0"
#endif

namespace rissec
{
inline constexpr char const* library_version = RISSEC_VERSION;

enum class Experiment
{
    fig1,
    fig2,
    fig3,
    fig4,
    sweep,
};

inline char const* to_string(Experiment e)
{
    switch (e)
    {
        case Experiment::fig1: return "fig1";
        case Experiment::fig2: return "fig2";
        case Experiment::fig3: return "fig3";
        case Experiment::fig4: return "fig4";
        case Experiment::sweep: return "sweep";
    }
    return "?";
}

inline std::optional<Experiment> parse_experiment(std::string_view s)
{
    for (auto e : {Experiment::fig1, Experiment::fig2, Experiment::fig3,
                   Experiment::fig4, Experiment::sweep})
    {
        if (s == to_string(e))
            return e;
    }
    return std::nullopt;
}

//---------------------------------------------------------------------------//
/*!
 * Fully resolved experiment configuration.
 *
 * \c params.n_ant is the BS array size used by multi-antenna runs;
 * single-antenna runs always use one antenna.
 */
struct ExperimentConfig
{
    Experiment experiment{Experiment::fig1};
    SystemParams params{[] {
        auto p = SystemParams::defaults();
        p.n_ant = 200;
        return p;
    }()};
    Truncation trunc{10, 400};
    int n_trials{10000};
    std::uint64_t seed{1};
    unsigned workers{0};
    std::string output_dir{"out"};

    std::string sweep_variable;
    std::vector<double> sweep_values;
    AntennaMode sweep_mode{AntennaMode::single};

    double fig1_x_min{1e-2};
    double fig1_x_max{1e2};
    int fig1_points{50};
    std::vector<double> fig2_rho_db{0, 5, 10, 15, 20, 25, 30};
    std::vector<double> fig2_n_ris{36, 100, 256};
    std::vector<double> fig3_n_ant{50, 100, 200, 400};
    std::vector<double> fig4_radius{10, 20, 30, 40, 50};
    std::vector<double> fig4_n_ris{36, 100, 256};
    //! Keep the expected UAV count of (params.eve_density, params.radius)
    //! while R varies, instead of the density.
    bool fig4_hold_eve_count{true};
};

//! One violated constraint, addressed by its dotted config key.
struct ConfigError
{
    std::string path;
    std::string message;
};

struct ValidationResult
{
    std::optional<ExperimentConfig> config;
    std::vector<ConfigError> errors;

    bool ok() const { return config.has_value(); }
};

//! Raw key=value settings; absent keys take their defaults.
using RawConfig = std::map<std::string, std::string>;

namespace detail
{
inline std::string trim(std::string_view s)
{
    auto const b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto const e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::optional<double> parse_double(std::string const& s)
{
    double v = 0;
    auto const* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        return std::nullopt;
    return v;
}

inline std::optional<long long> parse_int(std::string const& s)
{
    long long v = 0;
    auto const* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        return std::nullopt;
    return v;
}

inline std::optional<unsigned long long> parse_uint(std::string const& s)
{
    unsigned long long v = 0;
    auto const* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        return std::nullopt;
    return v;
}

inline std::optional<std::vector<double>> parse_list(std::string const& s)
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        auto v = parse_double(trim(item));
        if (!v)
            return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

//! Shortest decimal string that round-trips to the same double.
inline std::string format_double(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

inline std::string format_list(std::vector<double> const& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        if (i)
            out += ',';
        out += format_double(v[i]);
    }
    return out;
}

inline bool is_whole(double v)
{
    return std::isfinite(v) && v == std::floor(v);
}
}  // namespace detail

/*!
 * Parse flat "key=value" lines. Blank lines and lines starting with '#'
 * are skipped. Malformed lines are reported, not thrown.
 */
inline RawConfig parse_config_text(std::string_view text,
                                   std::vector<ConfigError>* errors = nullptr)
{
    RawConfig raw;
    std::stringstream ss{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line))
    {
        ++lineno;
        auto const t = detail::trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        auto const eq = t.find('=');
        if (eq == std::string::npos || eq == 0)
        {
            if (errors)
                errors->push_back({"line " + std::to_string(lineno),
                                   "expected key=value"});
            continue;
        }
        raw[detail::trim(t.substr(0, eq))] = detail::trim(t.substr(eq + 1));
    }
    return raw;
}

//---------------------------------------------------------------------------//
/*!
 * Resolve defaults and check every constraint.
 *
 * All violations are collected. Setting params.n_ris re-derives the RIS
 * grid and params.carrier_hz re-derives quarter-wavelength spacing, unless
 * those keys are given explicitly.
 */
inline ValidationResult validate_config(RawConfig const& raw)
{
    ExperimentConfig cfg;
    std::vector<ConfigError> errors;
    auto fail = [&errors](std::string path, std::string msg) {
        errors.push_back({std::move(path), std::move(msg)});
    };
    auto has = [&raw](char const* key) { return raw.count(key) > 0; };

    auto get_double = [&](std::string const& key, double& dst) {
        auto it = raw.find(key);
        if (it == raw.end())
            return;
        if (auto v = detail::parse_double(it->second))
            dst = *v;
        else
            fail(key, "expected a number, got '" + it->second + "'");
    };
    auto get_int = [&](std::string const& key, auto& dst) {
        using T = std::remove_reference_t<decltype(dst)>;
        auto it = raw.find(key);
        if (it == raw.end())
            return;
        if constexpr (std::is_unsigned_v<T>)
        {
            if (auto v = detail::parse_uint(it->second))
                dst = static_cast<T>(*v);
            else
                fail(key, "expected a non-negative integer, got '"
                              + it->second + "'");
        }
        else
        {
            if (auto v = detail::parse_int(it->second))
                dst = static_cast<T>(*v);
            else
                fail(key, "expected an integer, got '" + it->second + "'");
        }
    };
    auto get_list = [&](std::string const& key, std::vector<double>& dst) {
        auto it = raw.find(key);
        if (it == raw.end())
            return;
        if (auto v = detail::parse_list(it->second); v && !v->empty())
            dst = *v;
        else
            fail(key, "expected a nonempty comma-separated list of numbers");
    };

    static std::vector<std::string> const known{
        "experiment", "version", "seed", "n_trials", "workers", "output_dir",
        "params.n_ris", "params.n_ant", "params.dist_bs_ris",
        "params.dist_ris_bob", "params.radius", "params.pathloss_exp",
        "params.rho_db", "params.eve_density", "params.rician_ris_eve",
        "params.rician_bs_eve", "params.carrier_hz", "params.spacing_row",
        "params.spacing_col", "params.ris_rows", "params.ris_cols",
        "trunc.n_bar", "trunc.w_nodes", "sweep.variable", "sweep.values",
        "sweep.mode", "fig1.x_min", "fig1.x_max", "fig1.points",
        "fig2.rho_db_values", "fig2.n_ris_values", "fig3.n_ant_values",
        "fig4.radius_values", "fig4.n_ris_values", "fig4.hold_eve_count"};
    for (auto const& [key, value] : raw)
    {
        if (std::find(known.begin(), known.end(), key) == known.end())
            fail(key, "unknown key");
    }

    if (auto it = raw.find("experiment"); it != raw.end())
    {
        if (auto e = parse_experiment(it->second))
            cfg.experiment = *e;
        else
            fail("experiment", "must be one of fig1|fig2|fig3|fig4|sweep");
    }
    get_int("seed", cfg.seed);
    get_int("n_trials", cfg.n_trials);
    get_int("workers", cfg.workers);
    if (auto it = raw.find("output_dir"); it != raw.end())
        cfg.output_dir = it->second;

    auto& p = cfg.params;
    get_int("params.n_ris", p.n_ris);
    if (has("params.n_ris") && p.n_ris >= 1)
        p.set_ris_elements(p.n_ris);
    get_int("params.ris_rows", p.ris_rows);
    get_int("params.ris_cols", p.ris_cols);
    get_int("params.n_ant", p.n_ant);
    get_double("params.dist_bs_ris", p.dist_bs_ris);
    get_double("params.dist_ris_bob", p.dist_ris_bob);
    get_double("params.radius", p.radius);
    get_double("params.pathloss_exp", p.pathloss_exp);
    get_double("params.rho_db", p.rho_db);
    get_double("params.eve_density", p.eve_density);
    get_double("params.rician_ris_eve", p.rician_ris_eve);
    get_double("params.rician_bs_eve", p.rician_bs_eve);
    get_double("params.carrier_hz", p.carrier_hz);
    if (has("params.carrier_hz") && p.carrier_hz > 0)
        p.set_carrier(p.carrier_hz);
    get_double("params.spacing_row", p.spacing_row);
    get_double("params.spacing_col", p.spacing_col);
    for (auto const& v : p.violations())
        fail("params." + v.substr(0, v.find(':')), v.substr(v.find(':') + 2));

    get_int("trunc.n_bar", cfg.trunc.n_bar);
    get_int("trunc.w_nodes", cfg.trunc.w_nodes);
    if (cfg.trunc.n_bar < 0)
        fail("trunc.n_bar", "must be >= 0");
    if (cfg.trunc.w_nodes < 1)
        fail("trunc.w_nodes", "must be >= 1");
    if (cfg.n_trials < 1)
        fail("n_trials", "must be >= 1");

    get_double("fig1.x_min", cfg.fig1_x_min);
    get_double("fig1.x_max", cfg.fig1_x_max);
    get_int("fig1.points", cfg.fig1_points);
    if (!(cfg.fig1_x_min > 0 && cfg.fig1_x_max > cfg.fig1_x_min))
        fail("fig1.x_min", "need 0 < fig1.x_min < fig1.x_max");
    if (cfg.fig1_points < 2)
        fail("fig1.points", "must be >= 2");
    get_list("fig2.rho_db_values", cfg.fig2_rho_db);
    get_list("fig2.n_ris_values", cfg.fig2_n_ris);
    get_list("fig3.n_ant_values", cfg.fig3_n_ant);
    get_list("fig4.radius_values", cfg.fig4_radius);
    get_list("fig4.n_ris_values", cfg.fig4_n_ris);
    if (auto it = raw.find("fig4.hold_eve_count"); it != raw.end())
    {
        if (it->second == "true" || it->second == "1")
            cfg.fig4_hold_eve_count = true;
        else if (it->second == "false" || it->second == "0")
            cfg.fig4_hold_eve_count = false;
        else
            fail("fig4.hold_eve_count", "expected true or false");
    }

    auto check_counts = [&](char const* key, std::vector<double> const& v) {
        for (double x : v)
        {
            if (!detail::is_whole(x) || x < 1)
            {
                fail(key, "values must be positive integers");
                return;
            }
        }
    };
    auto check_radii = [&](char const* key, std::vector<double> const& v) {
        for (double x : v)
        {
            if (!(x > 0 && x < p.dist_bs_ris))
            {
                fail(key,
                     "radius values must satisfy 0 < R < dist_bs_ris "
                     "(far-RIS regime)");
                return;
            }
        }
    };
    check_counts("fig2.n_ris_values", cfg.fig2_n_ris);
    check_counts("fig3.n_ant_values", cfg.fig3_n_ant);
    check_counts("fig4.n_ris_values", cfg.fig4_n_ris);
    check_radii("fig4.radius_values", cfg.fig4_radius);

    if (auto it = raw.find("sweep.variable"); it != raw.end())
        cfg.sweep_variable = it->second;
    get_list("sweep.values", cfg.sweep_values);
    if (!cfg.sweep_variable.empty() && cfg.sweep_variable != "rho_db"
        && cfg.sweep_variable != "n_ris" && cfg.sweep_variable != "n_ant"
        && cfg.sweep_variable != "radius")
    {
        fail("sweep.variable", "must be one of rho_db|n_ris|n_ant|radius");
    }
    cfg.sweep_mode = cfg.sweep_variable == "n_ant" ? AntennaMode::multi
                                                   : AntennaMode::single;
    if (auto it = raw.find("sweep.mode"); it != raw.end())
    {
        if (it->second == "single")
            cfg.sweep_mode = AntennaMode::single;
        else if (it->second == "multi")
            cfg.sweep_mode = AntennaMode::multi;
        else
            fail("sweep.mode", "must be single or multi");
    }
    if (cfg.experiment == Experiment::sweep)
    {
        if (cfg.sweep_variable.empty())
            fail("sweep.variable", "required for the sweep experiment");
        if (cfg.sweep_values.empty())
            fail("sweep.values", "required for the sweep experiment");
        if (cfg.sweep_variable == "n_ris" || cfg.sweep_variable == "n_ant")
            check_counts("sweep.values", cfg.sweep_values);
        if (cfg.sweep_variable == "radius")
            check_radii("sweep.values", cfg.sweep_values);
    }

    ValidationResult result;
    if (errors.empty())
        result.config = cfg;
    result.errors = std::move(errors);
    return result;
}

//! Every resolved setting as key=value lines, reloadable by validate_config.
inline std::string manifest_text(ExperimentConfig const& cfg)
{
    using detail::format_double;
    using detail::format_list;
    auto const& p = cfg.params;
    std::ostringstream os;
    os << "version=" << library_version << '\n'
       << "experiment=" << to_string(cfg.experiment) << '\n'
       << "seed=" << cfg.seed << '\n'
       << "n_trials=" << cfg.n_trials << '\n'
       << "output_dir=" << cfg.output_dir << '\n'
       << "params.n_ris=" << p.n_ris << '\n'
       << "params.ris_rows=" << p.ris_rows << '\n'
       << "params.ris_cols=" << p.ris_cols << '\n'
       << "params.n_ant=" << p.n_ant << '\n'
       << "params.dist_bs_ris=" << format_double(p.dist_bs_ris) << '\n'
       << "params.dist_ris_bob=" << format_double(p.dist_ris_bob) << '\n'
       << "params.radius=" << format_double(p.radius) << '\n'
       << "params.pathloss_exp=" << format_double(p.pathloss_exp) << '\n'
       << "params.rho_db=" << format_double(p.rho_db) << '\n'
       << "params.eve_density=" << format_double(p.eve_density) << '\n'
       << "params.rician_ris_eve=" << format_double(p.rician_ris_eve) << '\n'
       << "params.rician_bs_eve=" << format_double(p.rician_bs_eve) << '\n'
       << "params.carrier_hz=" << format_double(p.carrier_hz) << '\n'
       << "params.spacing_row=" << format_double(p.spacing_row) << '\n'
       << "params.spacing_col=" << format_double(p.spacing_col) << '\n'
       << "trunc.n_bar=" << cfg.trunc.n_bar << '\n'
       << "trunc.w_nodes=" << cfg.trunc.w_nodes << '\n'
       << "fig1.x_min=" << format_double(cfg.fig1_x_min) << '\n'
       << "fig1.x_max=" << format_double(cfg.fig1_x_max) << '\n'
       << "fig1.points=" << cfg.fig1_points << '\n'
       << "fig2.rho_db_values=" << format_list(cfg.fig2_rho_db) << '\n'
       << "fig2.n_ris_values=" << format_list(cfg.fig2_n_ris) << '\n'
       << "fig3.n_ant_values=" << format_list(cfg.fig3_n_ant) << '\n'
       << "fig4.radius_values=" << format_list(cfg.fig4_radius) << '\n'
       << "fig4.n_ris_values=" << format_list(cfg.fig4_n_ris) << '\n'
       << "fig4.hold_eve_count="
       << (cfg.fig4_hold_eve_count ? "true" : "false") << '\n';
    if (!cfg.sweep_variable.empty())
        os << "sweep.variable=" << cfg.sweep_variable << '\n';
    if (!cfg.sweep_values.empty())
        os << "sweep.values=" << format_list(cfg.sweep_values) << '\n';
    os << "sweep.mode="
       << (cfg.sweep_mode == AntennaMode::multi ? "multi" : "single") << '\n';
    return os.str();
}

//---------------------------------------------------------------------------//
// TABLES
//---------------------------------------------------------------------------//
struct Table
{
    std::string name;  //!< file stem
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::string csv() const
    {
        std::string out;
        for (std::size_t i = 0; i < header.size(); ++i)
            out += (i ? "," : "") + header[i];
        out += '\n';
        for (auto const& row : rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
                out += (i ? "," : "") + detail::format_double(row[i]);
            out += '\n';
        }
        return out;
    }
};

//! SystemParams for one antenna mode of a config.
inline SystemParams mode_params(SystemParams p, AntennaMode mode)
{
    if (mode == AntennaMode::single)
        p.n_ant = 1;
    return p;
}

//! Analytic and Monte-Carlo secrecy capacity at one operating point.
struct CapacityPoint
{
    double analytic{0};
    CapacityEstimate mc;
};

inline CapacityPoint capacity_point(SystemParams const& params,
                                    AntennaMode mode,
                                    ExperimentConfig const& cfg)
{
    auto const p = mode_params(params, mode);
    CapacityPoint out;
    out.analytic = analytic_secrecy_capacity(p, mode, cfg.trunc);
    auto const records
        = run_trials(p, mode, cfg.n_trials, cfg.seed, cfg.workers);
    out.mc = mc_secrecy_capacity(records);
    return out;
}

inline std::vector<double> log_grid(double lo, double hi, int points)
{
    std::vector<double> xs(static_cast<std::size_t>(points));
    double const step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i)
        xs[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    xs.back() = hi;
    return xs;
}

//! CDF curves (analytic and empirical) for Bob and the strongest UAV.
struct CdfComparison
{
    Table table;
    double ks_bob{0};
    double ks_eve{0};
};

inline CdfComparison
fig1_curves(ExperimentConfig const& cfg, AntennaMode mode)
{
    auto const p = mode_params(cfg.params, mode);
    auto const model = analytic_model(p, mode, cfg.trunc);
    auto const records
        = run_trials(p, mode, cfg.n_trials, cfg.seed, cfg.workers);
    auto const bob_emp = empirical_cdf(bob_samples(records));
    auto const eve_emp = empirical_cdf(eve_samples(records));

    CdfComparison out;
    out.table.name = mode == AntennaMode::single ? "fig1_single"
                                                 : "fig1_multi";
    out.table.header = {"x", "cdf_bob_analytic", "cdf_bob_mc",
                        "cdf_eve_analytic", "cdf_eve_mc"};
    for (double x : log_grid(cfg.fig1_x_min, cfg.fig1_x_max, cfg.fig1_points))
    {
        out.table.rows.push_back(
            {x, model.bob(x), bob_emp(x), model.eve(x), eve_emp(x)});
    }
    out.ks_bob = ks_distance(model.bob, bob_emp);
    out.ks_eve = ks_distance(model.eve, eve_emp);
    return out;
}

inline std::vector<Table> fig1_tables(ExperimentConfig const& cfg)
{
    Table ks{"fig1_ks", {"n_ant", "ks_bob", "ks_eve"}, {}};
    std::vector<Table> out;
    for (auto mode : {AntennaMode::single, AntennaMode::multi})
    {
        auto cmp = fig1_curves(cfg, mode);
        double const k = mode_params(cfg.params, mode).n_ant;
        ks.rows.push_back({k, cmp.ks_bob, cmp.ks_eve});
        out.push_back(std::move(cmp.table));
    }
    out.push_back(std::move(ks));
    return out;
}

//! Secrecy capacity vs. rho for each N (single antenna).
inline Table fig2_table(ExperimentConfig const& cfg)
{
    Table t{"fig2",
            {"n_ris", "rho_db", "cs_analytic", "cs_mc", "cs_mc_stderr"},
            {}};
    for (double n : cfg.fig2_n_ris)
    {
        for (double rho : cfg.fig2_rho_db)
        {
            auto p = cfg.params;
            p.set_ris_elements(static_cast<int>(n));
            p.rho_db = rho;
            auto const pt = capacity_point(p, AntennaMode::single, cfg);
            t.rows.push_back(
                {n, rho, pt.analytic, pt.mc.mean, pt.mc.std_error});
        }
    }
    return t;
}

//! Secrecy capacity vs. K (multiple antennas, random phases, MRT).
inline Table fig3_table(ExperimentConfig const& cfg)
{
    Table t{"fig3", {"n_ant", "cs_analytic", "cs_mc", "cs_mc_stderr"}, {}};
    for (double k : cfg.fig3_n_ant)
    {
        auto p = cfg.params;
        p.n_ant = static_cast<int>(k);
        auto const pt = capacity_point(p, AntennaMode::multi, cfg);
        t.rows.push_back({k, pt.analytic, pt.mc.mean, pt.mc.std_error});
    }
    return t;
}

//! Density that keeps the expected UAV count of \c ref at radius \c r.
inline double density_for_radius(SystemParams const& ref, double r)
{
    return ref.eve_density * std::pow(ref.radius / r, 3);
}

//! Secrecy capacity vs. the hemisphere radius R for each N (single antenna).
inline Table fig4_table(ExperimentConfig const& cfg)
{
    Table t{"fig4",
            {"n_ris", "radius", "eve_density", "cs_analytic", "cs_mc",
             "cs_mc_stderr"},
            {}};
    for (double n : cfg.fig4_n_ris)
    {
        for (double r : cfg.fig4_radius)
        {
            auto p = cfg.params;
            p.set_ris_elements(static_cast<int>(n));
            p.radius = r;
            if (cfg.fig4_hold_eve_count)
                p.eve_density = density_for_radius(cfg.params, r);
            auto const pt = capacity_point(p, AntennaMode::single, cfg);
            t.rows.push_back({n, r, p.eve_density, pt.analytic, pt.mc.mean,
                              pt.mc.std_error});
        }
    }
    return t;
}

inline void apply_sweep_value(SystemParams& p, std::string const& variable,
                              double value)
{
    if (variable == "rho_db")
        p.rho_db = value;
    else if (variable == "n_ris")
        p.set_ris_elements(static_cast<int>(value));
    else if (variable == "n_ant")
        p.n_ant = static_cast<int>(value);
    else if (variable == "radius")
        p.radius = value;
    else
        throw DomainError("unknown sweep variable: " + variable);
}

inline Table sweep_table(ExperimentConfig const& cfg)
{
    Table t{"sweep",
            {cfg.sweep_variable, "cs_analytic", "cs_mc", "cs_mc_stderr"},
            {}};
    for (double v : cfg.sweep_values)
    {
        auto p = cfg.params;
        apply_sweep_value(p, cfg.sweep_variable, v);
        auto const pt = capacity_point(p, cfg.sweep_mode, cfg);
        t.rows.push_back({v, pt.analytic, pt.mc.mean, pt.mc.std_error});
    }
    return t;
}

inline std::vector<Table> experiment_tables(ExperimentConfig const& cfg)
{
    switch (cfg.experiment)
    {
        case Experiment::fig1: return fig1_tables(cfg);
        case Experiment::fig2: return {fig2_table(cfg)};
        case Experiment::fig3: return {fig3_table(cfg)};
        case Experiment::fig4: return {fig4_table(cfg)};
        case Experiment::sweep: return {sweep_table(cfg)};
    }
    return {};
}

//---------------------------------------------------------------------------//
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

namespace detail
{
inline void write_file(std::filesystem::path const& path,
                       std::string const& content)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw IoError("cannot open " + path.string() + " for writing");
    os << content;
    if (!os)
        throw IoError("failed writing " + path.string());
}
}  // namespace detail

/*!
 * Run the configured experiment, writing one CSV per table plus
 * manifest.txt into \c cfg.output_dir. Returns the written paths.
 */
inline std::vector<std::filesystem::path>
run_experiment(ExperimentConfig const& cfg)
{
    namespace fs = std::filesystem;
    fs::path const dir(cfg.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory " + dir.string() + ": "
                      + ec.message());

    std::vector<fs::path> written;
    for (auto const& table : experiment_tables(cfg))
    {
        auto const path = dir / (table.name + ".csv");
        detail::write_file(path, table.csv());
        written.push_back(path);
    }
    auto const manifest = dir / "manifest.txt";
    detail::write_file(manifest, manifest_text(cfg));
    written.push_back(manifest);
    return written;
}

}  // namespace rissec
