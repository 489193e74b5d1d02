#include "eqsvt/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

namespace {

// Flag name -> RunConfig key.
const std::vector<std::pair<std::string, std::string>> kFlags = {
    {"--N", "N"},
    {"--beta", "beta"},
    {"--eps", "eps"},
    {"--n-grid", "n_grid"},
    {"--delta-grid", "delta_grid"},
    {"--N-range", "N_range"},
    {"--family", "family"},
    {"--mu-mode", "mu_mode"},
    {"--n", "n"},
    {"--delta", "delta"},
    {"--mu", "mu"},
    {"--opt-N", "opt_N"},
    {"--hamiltonian", "hamiltonian"},
    {"--coeffs", "coeffs"},
    {"--lambda", "lambda"},
    {"--out", "out"},
    {"--state-out", "state_out"},
    {"--format", "format"},
    {"--approx", "approx"},
    {"--param", "param"},
};

}  // namespace

int main(int argc, char** argv) {
    using eqsvt::cli::ConfigError;

    CLI::App app{"Thermal-state preparation with generalized ensembles: cost model and simulator"};
    app.require_subcommand(1);
    std::string config_path;
    std::vector<std::string> sets;
    bool print_config = false;
    std::vector<std::optional<std::string>> values(kFlags.size());

    std::vector<CLI::App*> subs;
    for (const char* name : {"cost-scan", "cost-curve", "prepare", "approx-check"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "key=value config file");
        sub->add_option("--set", sets, "extra key=value override")->take_all();
        sub->add_flag("--print-config", print_config, "print the normalized config and exit");
        for (std::size_t i = 0; i < kFlags.size(); ++i) sub->add_option(kFlags[i].first, values[i]);
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : eqsvt::cli::exit_config;
    }

    eqsvt::cli::RunConfig config;
    try {
        for (CLI::App* sub : subs) {
            if (sub->parsed()) config.command = eqsvt::cli::command_from_string(sub->get_name());
        }
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) throw ConfigError("cannot read config file '" + config_path + "'");
            std::ostringstream text;
            text << is.rdbuf();
            const auto command = config.command;
            config = eqsvt::cli::parse_config(text.str(), config);
            config.command = command;
        }
        for (const std::string& kv : sets) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
            config.set(kv.substr(0, eq), kv.substr(eq + 1));
        }
        for (std::size_t i = 0; i < kFlags.size(); ++i) {
            if (values[i]) config.set(kFlags[i].second, *values[i]);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return eqsvt::cli::exit_config;
    }

    if (print_config) {
        std::cout << config.normalized();
        return 0;
    }
    return eqsvt::cli::run(config, std::cout, std::cerr);
}
