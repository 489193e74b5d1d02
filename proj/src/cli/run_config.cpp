#include "eqsvt/cli/run_config.hpp"
#include "eqsvt/costmodel.hpp"
#include "eqsvt/ensembles.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <fmt/format.h>

namespace eqsvt::cli {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double to_real(const std::string& key, const std::string& v) {
    double x = 0.0;
    const std::string t = trim(v);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(x)) {
        throw ConfigError(fmt::format("{}: '{}' is not a finite number", key, v));
    }
    return x;
}

int to_int(const std::string& key, const std::string& v) {
    int x = 0;
    const std::string t = trim(v);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError(fmt::format("{}: '{}' is not an integer", key, v));
    }
    return x;
}

}  // namespace

std::string to_string(Command c) {
    switch (c) {
        case Command::cost_scan: return "cost-scan";
        case Command::cost_curve: return "cost-curve";
        case Command::prepare: return "prepare";
        case Command::approx_check: return "approx-check";
    }
    return "unknown";
}

Command command_from_string(const std::string& s) {
    if (s == "cost-scan") return Command::cost_scan;
    if (s == "cost-curve") return Command::cost_curve;
    if (s == "prepare") return Command::prepare;
    if (s == "approx-check") return Command::approx_check;
    throw ConfigError(fmt::format("unknown command '{}'", s));
}

std::vector<int> parse_int_grid(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw ConfigError("integer grid is empty");
    std::vector<int> out;
    if (t.find(':') != std::string::npos) {
        const auto parts = split(t, ':');
        if (parts.size() != 2 && parts.size() != 3) throw ConfigError(fmt::format("bad integer range '{}'", text));
        const int lo = to_int("grid", parts[0]);
        const int hi = to_int("grid", parts[1]);
        const int step = parts.size() == 3 ? to_int("grid", parts[2]) : 1;
        if (step < 1) throw ConfigError(fmt::format("range step must be >= 1 in '{}'", text));
        for (long long v = lo; v <= hi; v += step) out.push_back(static_cast<int>(v));
    } else {
        for (const auto& p : split(t, ',')) out.push_back(to_int("grid", p));
    }
    if (out.empty()) throw ConfigError(fmt::format("integer grid '{}' has no points", text));
    return out;
}

std::vector<double> parse_real_grid(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw ConfigError("real grid is empty");
    std::vector<double> out;
    if (t.rfind("log:", 0) == 0 || t.rfind("lin:", 0) == 0) {
        const auto parts = split(t, ':');
        if (parts.size() != 4) throw ConfigError(fmt::format("expected kind:lo:hi:count, got '{}'", text));
        const double lo = to_real("grid", parts[1]);
        const double hi = to_real("grid", parts[2]);
        const int count = to_int("grid", parts[3]);
        if (count < 1) throw ConfigError(fmt::format("grid '{}' has no points", text));
        if (hi < lo) throw ConfigError(fmt::format("grid '{}' has hi < lo", text));
        if (parts[0] == "log") {
            if (!(lo > 0.0)) throw ConfigError(fmt::format("log grid '{}' needs lo > 0", text));
            for (int i = 0; i < count; ++i) {
                out.push_back(count == 1 ? lo : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (count - 1)));
            }
            out.front() = lo;
            if (count > 1) out.back() = hi;
        } else {
            for (int i = 0; i < count; ++i) out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
        }
    } else {
        for (const auto& p : split(t, ',')) out.push_back(to_real("grid", p));
    }
    return out;
}

int threads_from_env() {
    const char* v = std::getenv("ENSEMBLE_QSVT_THREADS");
    if (v == nullptr || *v == '\0') return 0;
    const int n = to_int("ENSEMBLE_QSVT_THREADS", v);
    if (n < 1) throw ConfigError("ENSEMBLE_QSVT_THREADS must be >= 1");
    return n;
}

void RunConfig::set(const std::string& key_in, const std::string& value_in) {
    const std::string key = trim(key_in);
    const std::string value = trim(value_in);
    auto opt_unset = [&] { return value.empty() || value == "auto"; };
    if (key == "command") command = command_from_string(value);
    else if (key == "N") N = to_int(key, value);
    else if (key == "beta") beta = to_real(key, value);
    else if (key == "eps") eps = to_real(key, value);
    else if (key == "n_grid") n_grid = value;
    else if (key == "delta_grid") delta_grid = value;
    else if (key == "N_range") N_range = value;
    else if (key == "family") family = value;
    else if (key == "mu_mode") mu_mode = value;
    else if (key == "n") n = opt_unset() ? std::nullopt : std::optional<int>(to_int(key, value));
    else if (key == "delta") delta = opt_unset() ? std::nullopt : std::optional<double>(to_real(key, value));
    else if (key == "mu") mu = opt_unset() ? std::nullopt : std::optional<double>(to_real(key, value));
    else if (key == "opt_N") opt_N = opt_unset() ? std::nullopt : std::optional<int>(to_int(key, value));
    else if (key == "hamiltonian") hamiltonian = value;
    else if (key == "coeffs") coeffs = value;
    else if (key == "lambda") lambda = to_real(key, value);
    else if (key == "out") output_path = value;
    else if (key == "state_out") state_path = value;
    else if (key == "format") format = value;
    else if (key == "approx") approx = value;
    else if (key == "param") param = to_real(key, value);
    else throw ConfigError(fmt::format("unknown key '{}'", key));
}

void RunConfig::validate() const {
    if (N < 1) throw ConfigError("N must be >= 1");
    if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("eps must lie in (0, 1)");
    if (!(beta >= 0.0)) throw ConfigError("beta must be >= 0");
    if (format != "csv") throw ConfigError(fmt::format("unsupported format '{}'", format));
    try {
        (void)cost::mu_constraint_from_string(mu_mode);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    ens::EtaFamily fam{};
    try {
        fam = ens::eta_family_from_string(family);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (n && *n < 1) throw ConfigError("n must be >= 1");
    if (delta && !(*delta > 0.0)) throw ConfigError("delta must be > 0");
    if (opt_N && *opt_N < 1) throw ConfigError("opt_N must be >= 1");

    switch (command) {
        case Command::cost_scan: {
            if (!(beta > 0.0)) throw ConfigError("cost-scan needs beta > 0");
            if (fam != ens::EtaFamily::even_power) throw ConfigError("cost-scan scans the even_power family only");
            for (int v : parse_int_grid(n_grid)) {
                if (v < 1) throw ConfigError("n grid entries must be >= 1");
            }
            for (double v : parse_real_grid(delta_grid)) {
                if (!(v > 0.0)) throw ConfigError("delta grid entries must be > 0");
            }
            break;
        }
        case Command::cost_curve: {
            if (!(beta > 0.0)) throw ConfigError("cost-curve needs beta > 0");
            for (int v : parse_int_grid(N_range)) {
                if (v < 1) throw ConfigError("N range entries must be >= 1");
            }
            if (!(n && delta)) {
                (void)parse_int_grid(n_grid);
                (void)parse_real_grid(delta_grid);
            }
            break;
        }
        case Command::prepare: {
            if (N > 6) throw ConfigError(fmt::format("N={} exceeds the simulation cap of 6 system qubits", N));
            if (fam == ens::EtaFamily::log_comparison) throw ConfigError("prepare needs a polynomial eta");
            if (fam == ens::EtaFamily::custom && parse_real_grid(coeffs).empty()) {
                throw ConfigError("custom eta needs coeffs");
            }
            if (fam == ens::EtaFamily::gaussian && !(lambda > 0.0)) throw ConfigError("lambda must be > 0");
            if (fam == ens::EtaFamily::even_power && !mu && !(beta > 0.0)) {
                throw ConfigError("even_power with mu=auto needs beta > 0");
            }
            if (hamiltonian != "free") {
                if (hamiltonian.rfind("random:", 0) != 0) {
                    throw ConfigError(fmt::format("hamiltonian must be 'free' or 'random:<seed>', got '{}'", hamiltonian));
                }
                if (to_int("hamiltonian seed", hamiltonian.substr(7)) < 0) throw ConfigError("seed must be >= 0");
            }
            break;
        }
        case Command::approx_check: {
            if (approx != "exp" && approx != "erf" && approx != "sign") {
                throw ConfigError(fmt::format("approx must be exp, erf or sign, got '{}'", approx));
            }
            if (!(param > 0.0)) throw ConfigError("param must be > 0");
            if (approx == "sign" && !(param <= 1.0)) throw ConfigError("sign param (delta) must lie in (0, 1]");
            break;
        }
    }
}

std::string RunConfig::normalized() const {
    auto opt = [](const auto& o) { return o ? fmt::format("{}", *o) : std::string("auto"); };
    std::string s;
    s += fmt::format("command={}\n", to_string(command));
    s += fmt::format("N={}\nbeta={}\neps={}\n", N, beta, eps);
    s += fmt::format("n_grid={}\ndelta_grid={}\nN_range={}\n", n_grid, delta_grid, N_range);
    s += fmt::format("family={}\nmu_mode={}\n", family, mu_mode);
    s += fmt::format("n={}\ndelta={}\nmu={}\nopt_N={}\n", opt(n), opt(delta), opt(mu), opt(opt_N));
    s += fmt::format("hamiltonian={}\ncoeffs={}\nlambda={}\n", hamiltonian, coeffs, lambda);
    s += fmt::format("out={}\nstate_out={}\nformat={}\n", output_path, state_path, format);
    s += fmt::format("approx={}\nparam={}\n", approx, param);
    return s;
}

RunConfig parse_config(const std::string& text, RunConfig base) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(fmt::format("line {}: expected key=value", lineno));
        try {
            base.set(line.substr(0, eq), line.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError(fmt::format("line {}: {}", lineno, e.what()));
        }
    }
    return base;
}

}  // namespace eqsvt::cli
