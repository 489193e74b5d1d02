#include "eqsvt/cli/commands.hpp"
#include "eqsvt/common.hpp"
#include "eqsvt/costmodel.hpp"
#include "eqsvt/polyapprox.hpp"
#include "eqsvt/qsvtsim/thermal.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <fstream>
#include <functional>
#include <memory>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace eqsvt::cli {

namespace {

std::string g17(double v) { return fmt::format("{:.17g}", v); }

// CSV sink: the configured file, or `out` when no path is set.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            os_ = &fallback;
        } else {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw ConfigError(fmt::format("cannot open '{}' for writing", path));
            os_ = file_.get();
        }
    }
    std::ostream& operator*() { return *os_; }
    bool to_stdout() const { return !file_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_ = nullptr;
};

cost::ScanOptions scan_options(const RunConfig& c) {
    cost::ScanOptions o;
    o.mu_mode = cost::mu_constraint_from_string(c.mu_mode);
    o.threads = threads_from_env();
    return o;
}

void write_scan_row(std::ostream& os, const cost::ScanRow& r) {
    fmt::print(os, "{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.N, g17(r.beta), g17(r.eps), r.family, r.n,
               g17(r.delta), g17(r.mu), r.d_eta, g17(r.d_exp), g17(r.log10_d_aa), g17(r.log10_total),
               g17(r.log10_A), g17(r.log10_B));
}

struct PreparedInput {
    Eigen::MatrixXcd H;
    double alpha = 1.0;
    ens::EtaSpec eta;
};

PreparedInput prepare_input(const RunConfig& c) {
    PreparedInput in;
    if (c.hamiltonian == "free") {
        in.H = sim::free_spin_hamiltonian(c.N);
    } else {
        in.H = sim::random_hermitian(c.N, std::stoull(c.hamiltonian.substr(7)));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(in.H, Eigen::EigenvaluesOnly);
        in.alpha = es.eigenvalues().cwiseAbs().maxCoeff() / c.N;
    }
    switch (ens::eta_family_from_string(c.family)) {
        case ens::EtaFamily::canonical: in.eta = ens::EtaSpec::canonical(c.beta); break;
        case ens::EtaFamily::gaussian: in.eta = ens::EtaSpec::gaussian(c.lambda, c.mu.value_or(0.0)); break;
        case ens::EtaFamily::even_power: {
            const int n = c.n.value_or(1);
            const double delta = c.delta.value_or(1.0);
            double mu = 0.0;
            if (c.mu) {
                mu = *c.mu;
            } else {
                mu = ens::solve_even_power_mu(ens::spectrum_dense(in.H, c.N, in.alpha), c.beta, n, delta);
            }
            in.eta = ens::EtaSpec::even_power(n, delta, mu);
            break;
        }
        case ens::EtaFamily::custom: in.eta = ens::EtaSpec::custom(parse_real_grid(c.coeffs)); break;
        case ens::EtaFamily::log_comparison: throw ConfigError("prepare needs a polynomial eta");
    }
    return in;
}

}  // namespace

int cmd_cost_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const std::vector<int> n_grid = parse_int_grid(c.n_grid);
    const std::vector<double> delta_grid = parse_real_grid(c.delta_grid);
    const ens::SpectrumModel spec = ens::spectrum_free_spins(c.N);
    const cost::ScanOptions opts = scan_options(c);
    const std::vector<cost::ScanRow> rows = cost::omp::scan_grid(spec, c.beta, c.eps, n_grid, delta_grid, opts);

    Sink sink(c.output_path, out);
    *sink << "N,beta,eps,family,n,delta,mu,d_eta,d_exp,log10_d_AA,log10_total,log10_A,log10_B\n";
    std::size_t failures = 0;
    for (const cost::ScanRow& r : rows) {
        if (r.ok) {
            write_scan_row(*sink, r);
        } else {
            ++failures;
            fmt::print(err, "grid point n={} delta={} failed: {}\n", r.n, g17(r.delta), r.error);
        }
    }
    const std::string prefix = sink.to_stdout() ? "# " : "";
    fmt::print(out, "{}failures={}/{}\n", prefix, failures, rows.size());
    if (failures * 10 > rows.size()) {
        fmt::print(err, "solver failed at more than 10% of grid points\n");
        return exit_solver;
    }
    const std::size_t best = cost::argmin_row(rows);
    if (best == static_cast<std::size_t>(-1)) return exit_solver;
    const cost::ScanRow canonical = cost::evaluate_canonical(spec, c.beta, c.eps);
    const cost::ScanRow& b = rows[best];
    const double ratio = std::pow(10.0, canonical.log10_total - b.log10_total);
    fmt::print(out, "{}n*={} delta*={} mu*={} log10_total*={} log10_canonical={} ratio={}\n", prefix, b.n,
               g17(b.delta), g17(b.mu), g17(b.log10_total), g17(canonical.log10_total), g17(ratio));
    return exit_ok;
}

int cmd_cost_curve(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const std::vector<int> Ns = parse_int_grid(c.N_range);
    const cost::ScanOptions opts = scan_options(c);
    int n = 0;
    double delta = 0.0;
    if (c.n && c.delta) {
        n = *c.n;
        delta = *c.delta;
    } else {
        int N_opt = c.opt_N.value_or(0);
        if (!c.opt_N) {
            for (int v : Ns) N_opt = std::max(N_opt, v);
        }
        const cost::OptimizeResult opt =
            cost::optimize_ensemble(ens::spectrum_free_spins(N_opt), c.beta, c.eps, parse_int_grid(c.n_grid),
                                    parse_real_grid(c.delta_grid), opts);
        if (opt.failures * 10 > opt.rows.size()) {
            fmt::print(err, "solver failed at more than 10% of grid points\n");
            return exit_solver;
        }
        n = c.n.value_or(opt.n);
        delta = c.delta.value_or(opt.delta);
    }
    const std::vector<cost::CurveRow> rows = cost::cost_curve(Ns, c.beta, c.eps, n, delta, opts.mu_mode);

    Sink sink(c.output_path, out);
    *sink << "N,log10_canonical,log10_generalized,log10_optimal_scaling\n";
    for (const cost::CurveRow& r : rows) {
        fmt::print(*sink, "{},{},{},{}\n", r.N, g17(r.log10_canonical), g17(r.log10_generalized),
                   g17(r.log10_optimal_scaling));
    }
    const std::string prefix = sink.to_stdout() ? "# " : "";
    fmt::print(out, "{}n={} delta={}\n", prefix, n, g17(delta));
    if (rows.size() >= 2) {
        std::vector<double> x, yc, yg, yo;
        for (const cost::CurveRow& r : rows) {
            x.push_back(r.N);
            yc.push_back(r.log10_canonical);
            yg.push_back(r.log10_generalized);
            yo.push_back(r.log10_optimal_scaling);
        }
        fmt::print(out, "{}slope_canonical={} slope_generalized={} slope_optimal_scaling={}\n", prefix,
                   g17(cost::ls_slope(x, yc)), g17(cost::ls_slope(x, yg)), g17(cost::ls_slope(x, yo)));
    }
    return exit_ok;
}

int cmd_prepare(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const PreparedInput in = prepare_input(c);
    const sim::ThermalResult res = sim::prepare_thermal(in.H, in.eta, c.eps, in.alpha);

    Sink sink(c.output_path, out);
    *sink << res.diag.to_keyvalue();
    if (!c.state_path.empty()) {
        std::ofstream os(c.state_path);
        if (!os) throw ConfigError(fmt::format("cannot open '{}' for writing", c.state_path));
        os << "index,re,im\n";
        for (std::size_t i = 0; i < res.state.dim(); ++i) {
            fmt::print(os, "{},{},{}\n", i, g17(res.state.amps[i].real()), g17(res.state.amps[i].imag()));
        }
    }
    if (!(res.diag.measured_error <= c.eps)) {
        fmt::print(err, "measured_error {} exceeds eps {}\n", g17(res.diag.measured_error), g17(c.eps));
        return exit_contract;
    }
    return exit_ok;
}

int cmd_approx_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
    poly::ChebyshevSeries s;
    std::function<double(double)> f;
    std::function<bool(double)> domain;
    if (c.approx == "exp") {
        s = poly::exp_poly(c.param, c.eps);
        const double lambda = c.param;
        f = [lambda](double x) { return std::exp(-lambda * (x + 1.0)); };
    } else if (c.approx == "erf") {
        s = poly::erf_poly(c.param, c.n.value_or(29));
        const double k = c.param;
        f = [k](double x) { return std::erf(k * x); };
    } else {
        s = poly::sign_poly(c.param, c.eps).series;
        const double delta = c.param;
        f = [](double x) { return x > 0.0 ? 1.0 : -1.0; };
        domain = [delta](double x) { return std::abs(x) >= delta; };
    }
    const std::vector<double> grid = poly::certification_grid();
    const double measured = poly::measured_sup_error(s, f, grid, domain);
    const double sup_abs = poly::measured_sup_abs(s, grid);

    Sink sink(c.output_path, out);
    *sink << "approx,param,eps,degree,err_bound,measured_error,sup_abs\n";
    fmt::print(*sink, "{},{},{},{},{},{},{}\n", c.approx, g17(c.param), g17(c.eps), s.degree(), g17(s.err_bound),
               g17(measured), g17(sup_abs));
    const double sup_cap = c.approx == "erf" ? 1.0 + s.err_bound : 1.0;
    if (!(measured <= s.err_bound) || !(sup_abs <= sup_cap + 1e-12)) {
        fmt::print(err, "certified bound violated\n");
        return exit_contract;
    }
    return exit_ok;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
        switch (config.command) {
            case Command::cost_scan: return cmd_cost_scan(config, out, err);
            case Command::cost_curve: return cmd_cost_curve(config, out, err);
            case Command::prepare: return cmd_prepare(config, out, err);
            case Command::approx_check: return cmd_approx_check(config, out, err);
        }
    } catch (const ConfigError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_config;
    } catch (const SolverError& e) {
        fmt::print(err, "solver error: {}\n", e.what());
        return exit_solver;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_failure;
    }
    return exit_failure;
}

}  // namespace eqsvt::cli
