// Command-line driver: regenerates the figure tables and runs sweeps.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rissec/rissec.hpp"

namespace
{
struct Options
{
    std::string config_path;
    std::vector<std::string> sets;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<unsigned> workers;
    std::string out;
};

void add_common(CLI::App* sub, Options& opt)
{
    sub->add_option("--config", opt.config_path,
                    "key=value file (e.g. a previous manifest.txt)");
    sub->add_option("--seed", opt.seed, "master RNG seed");
    sub->add_option("--trials", opt.trials, "Monte-Carlo trials per point");
    sub->add_option("--workers", opt.workers, "worker threads (0 = auto)");
    sub->add_option("--out", opt.out, "output directory");
    sub->add_option("--set", opt.sets, "override one key: --set key=value")
        ->take_all();
}

int run(std::string const& experiment, Options const& opt)
{
    std::vector<rissec::ConfigError> errors;
    rissec::RawConfig raw;
    if (!opt.config_path.empty())
    {
        std::ifstream is(opt.config_path);
        if (!is)
        {
            std::cerr << "error: cannot read " << opt.config_path << '\n';
            return 2;
        }
        std::stringstream ss;
        ss << is.rdbuf();
        raw = rissec::parse_config_text(ss.str(), &errors);
    }
    for (auto const& s : opt.sets)
    {
        auto more = rissec::parse_config_text(s, &errors);
        for (auto& [k, v] : more)
            raw[k] = v;
    }
    raw["experiment"] = experiment;
    if (opt.seed)
        raw["seed"] = std::to_string(*opt.seed);
    if (opt.trials)
        raw["n_trials"] = std::to_string(*opt.trials);
    if (opt.workers)
        raw["workers"] = std::to_string(*opt.workers);
    if (!opt.out.empty())
        raw["output_dir"] = opt.out;

    auto result = rissec::validate_config(raw);
    errors.insert(errors.end(), result.errors.begin(), result.errors.end());
    if (!errors.empty())
    {
        for (auto const& e : errors)
            std::cerr << "config error: " << e.path << ": " << e.message
                      << '\n';
        return 2;
    }
    try
    {
        for (auto const& path : rissec::run_experiment(*result.config))
            std::cout << path.string() << '\n';
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Secrecy analysis of RIS-aided downlinks with UAV "
                 "eavesdroppers"};
    app.set_version_flag("--version", std::string(rissec::library_version));
    app.require_subcommand(1);

    Options opt;
    std::string chosen;
    for (auto const* name : {"fig1", "fig2", "fig3", "fig4", "sweep"})
    {
        char const* help = "";
        std::string n = name;
        if (n == "fig1")
            help = "SNR CDFs at Bob and the strongest UAV";
        else if (n == "fig2")
            help = "secrecy capacity vs transmit SNR for several N";
        else if (n == "fig3")
            help = "secrecy capacity vs BS antenna count";
        else if (n == "fig4")
            help = "secrecy capacity vs UAV hemisphere radius";
        else
            help = "secrecy capacity over sweep.variable/sweep.values";
        auto* sub = app.add_subcommand(n, help);
        add_common(sub, opt);
        sub->callback([&chosen, n] { chosen = n; });
    }

    CLI11_PARSE(app, argc, argv);
    return run(chosen, opt);
}
