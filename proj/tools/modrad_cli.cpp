#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modrad/checks.hpp"
#include "modrad/parse.hpp"
#include "modrad/report.hpp"

namespace {

using modrad::Complex;
using modrad::ModuleElement;
using modrad::ModuleShape;
using modrad::RadiusConfig;
using modrad::RadiusResult;

constexpr const char* kEntriesHelp =
    "Comma-separated row-major complex entries in re+imi form, e.g. '1+2i,0,0,1'";

struct CliConfig {
    std::string command;
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    std::optional<std::size_t> grid_points;
    std::optional<std::string> output_path;
    std::vector<std::string> check_filter;
    std::string entries;
};

void emit(const std::string& json, const std::optional<std::string>& path) {
    if (!path) {
        std::cout << json << "\n";
        return;
    }
    std::ofstream out(*path);
    if (!out) {
        throw modrad::Error("cannot open output file: " + *path);
    }
    out << json << "\n";
    if (!out) {
        throw modrad::Error("failed to write output file: " + *path);
    }
}

RadiusConfig radius_config(const CliConfig& cli) {
    RadiusConfig cfg;
    if (cli.grid_points) cfg.grid_points = *cli.grid_points;
    return cfg;
}

std::string shape_json(const CliConfig& cli, std::size_t grid_points) {
    std::ostringstream os;
    os << "{\"n\":" << cli.n.value_or(0);
    if (cli.m) os << ",\"m\":" << *cli.m;
    os << ",\"grid_points\":" << grid_points << "}";
    return os.str();
}

std::string radius_json(const CliConfig& cli, const RadiusResult& result,
                        std::size_t grid_points) {
    std::ostringstream os;
    os << "{\"version\":\"" << modrad::checks::kVersion << "\",\"command\":\"" << cli.command
       << "\",\"config\":" << shape_json(cli, grid_points)
       << ",\"value\":" << modrad::report::format_double(result.value)
       << ",\"argmax_theta\":" << modrad::report::format_double(result.argmax_theta)
       << ",\"certificate\":" << modrad::report::format_double(result.certificate) << "}";
    return os.str();
}

ModuleElement parse_module_element(const CliConfig& cli) {
    const ModuleShape shape{*cli.n, *cli.m};
    return ModuleElement(shape, modrad::parse::parse_entries(cli.entries, shape.m, shape.n));
}

int run_verify(const CliConfig& cli) {
    std::vector<modrad::checks::TrialConfig> plan;
    if (cli.n || cli.m) {
        if (!cli.n || !cli.m) {
            throw modrad::UsageError("verify needs both --n and --m when either is given");
        }
        modrad::checks::TrialConfig cfg;
        cfg.shape = ModuleShape{*cli.n, *cli.m};
        cfg.master_seed = cli.seed;
        plan.push_back(cfg);
    } else {
        plan = modrad::checks::default_plan(cli.seed);
    }
    for (modrad::checks::TrialConfig& cfg : plan) {
        cfg.trials = cli.trials;
        cfg.tol = cli.tol;
        if (cli.grid_points) cfg.radius_cfg.grid_points = *cli.grid_points;
    }
    const modrad::checks::SuiteReport report = modrad::checks::run_plan(plan, cli.check_filter);
    emit(modrad::report::to_json(report), cli.output_path);
    return report.passed ? 0 : 1;
}

int run_omega(const CliConfig& cli) {
    const RadiusConfig cfg = radius_config(cli);
    const RadiusResult result = modrad::omega(parse_module_element(cli), cfg);
    emit(radius_json(cli, result, cfg.grid_points), cli.output_path);
    return 0;
}

int run_wradius(const CliConfig& cli) {
    const RadiusConfig cfg = radius_config(cli);
    const modrad::CMatrix matrix = modrad::parse::parse_entries(cli.entries, *cli.n, *cli.n);
    const RadiusResult result = modrad::numerical_radius(matrix, cfg);
    emit(radius_json(cli, result, cfg.grid_points), cli.output_path);
    return 0;
}

int run_profile(const CliConfig& cli) {
    const RadiusConfig cfg = radius_config(cli);
    const RadiusResult result = modrad::omega_with_profile(parse_module_element(cli), cfg);

    double lo = result.value;
    double hi = 0.0;
    std::ostringstream os;
    os << "{\"version\":\"" << modrad::checks::kVersion << "\",\"command\":\"profile\""
       << ",\"config\":" << shape_json(cli, cfg.grid_points) << ",\"samples\":[";
    const auto& samples = *result.profile_samples;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i > 0) os << ",";
        os << "[" << modrad::report::format_double(samples[i].first) << ","
           << modrad::report::format_double(samples[i].second) << "]";
        lo = std::min(lo, samples[i].second);
        hi = std::max(hi, samples[i].second);
    }
    os << "],\"max\":" << modrad::report::format_double(hi)
       << ",\"min\":" << modrad::report::format_double(lo)
       << ",\"spread\":" << modrad::report::format_double(hi - lo) << "}";
    emit(os.str(), cli.output_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Module numerical radius toolkit: certified radius computations over "
                 "block-matrix algebras plus a randomized property-verification suite"};
    app.require_subcommand(1);
    CliConfig cli;

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the property-verification suite and emit a JSON report");
    verify->add_option("--n", cli.n, "Algebra size (n x n coefficients)");
    verify->add_option("--m", cli.m, "Module row count (elements are m x n)");
    verify->add_option("--trials", cli.trials, "Trials per shape")->capture_default_str();
    verify->add_option("--seed", cli.seed, "Master seed")->capture_default_str();
    verify->add_option("--tol", cli.tol, "Violation tolerance")->capture_default_str();
    verify->add_option("--grid-points", cli.grid_points, "Circle grid resolution");
    verify->add_option("--out", cli.output_path, "Write the JSON report to this path");
    verify->add_option("--check", cli.check_filter, "Run only the named checks")
        ->delimiter(',');

    const auto add_radius_options = [&cli](CLI::App* sub, bool with_m) {
        sub->add_option("--n", cli.n, "Algebra size (n x n coefficients)")->required();
        if (with_m) {
            sub->add_option("--m", cli.m, "Module row count (elements are m x n)")->required();
        }
        sub->add_option("--entries", cli.entries, kEntriesHelp)->required();
        sub->add_option("--grid-points", cli.grid_points, "Circle grid resolution");
        sub->add_option("--out", cli.output_path, "Write the JSON result to this path");
    };

    CLI::App* omega_cmd = app.add_subcommand(
        "omega", "Module numerical radius of an m x n element, with certificate");
    add_radius_options(omega_cmd, true);

    CLI::App* wradius = app.add_subcommand(
        "wradius", "Numerical radius of a square matrix, with certificate");
    add_radius_options(wradius, false);

    CLI::App* profile = app.add_subcommand(
        "profile", "Angle-by-angle objective samples for an m x n element");
    add_radius_options(profile, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            cli.command = "verify";
            return run_verify(cli);
        }
        if (app.got_subcommand(omega_cmd)) {
            cli.command = "omega";
            return run_omega(cli);
        }
        if (app.got_subcommand(wradius)) {
            cli.command = "wradius";
            return run_wradius(cli);
        }
        cli.command = "profile";
        return run_profile(cli);
    } catch (const modrad::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
