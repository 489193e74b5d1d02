#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqsvt::cli {

enum class Command { cost_scan, cost_curve, prepare, approx_check };

std::string to_string(Command c);
Command command_from_string(const std::string& s);

/// Rejected input; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything a command needs. Grids are kept as their text descriptions so
/// that a normalized config reproduces exactly what was asked for.
///
/// Integer grids: "1,2,5", "1:8" or "100:1000:100".
/// Real grids: "0.1,0.5", "log:lo:hi:count" or "lin:lo:hi:count".
struct RunConfig {
    Command command = Command::cost_scan;
    int N = 50;
    double beta = 0.5;
    double eps = 0.1;
    std::string n_grid = "1:8";
    std::string delta_grid = "log:0.05:5:81";
    std::string N_range = "100:1000:100";
    std::string family = "even_power";
    std::string mu_mode = "closed_form";
    /// Fixed ensemble parameters; unset means "optimize" (cost-curve) or
    /// "solve mu at beta" (prepare).
    std::optional<int> n;
    std::optional<double> delta;
    std::optional<double> mu;
    std::optional<int> opt_N;  // cost-curve: N at which (n, Delta) are optimized
    std::string hamiltonian = "free";  // "free" or "random:<seed>"
    std::string coeffs;                // custom eta, comma separated ascending
    double lambda = 0.5;               // gaussian eta
    std::string output_path;           // empty means stdout
    std::string state_path;            // prepare: optional state dump
    std::string format = "csv";
    std::string approx = "exp";        // approx-check: exp, erf or sign
    double param = 1.0;                // approx-check: lambda, k or delta

    /// Applies one key=value setting. Throws ConfigError.
    void set(const std::string& key, const std::string& value);

    /// Checks ranges and grid syntax. Throws ConfigError.
    void validate() const;

    /// Canonical key=value text: fixed key order, shortest round-trip numbers.
    std::string normalized() const;
};

/// Parses key=value lines; '#' starts a comment. Throws ConfigError.
RunConfig parse_config(const std::string& text, RunConfig base = {});

std::vector<int> parse_int_grid(const std::string& text);
std::vector<double> parse_real_grid(const std::string& text);

/// Number of scan threads from ENSEMBLE_QSVT_THREADS; 0 when unset.
int threads_from_env();

}  // namespace eqsvt::cli
