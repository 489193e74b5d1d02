#include "eqsvt/common.hpp"
#include "eqsvt/costmodel.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqsvt::cost {

namespace {

void fill_cost_columns(ScanRow& row, const ens::SpectrumModel& spec, const ens::EtaSpec& eta) {
    const ens::ThermoPoint tp = ens::thermo_point(spec, eta);
    const QueryCostBreakdown b = total_queries(spec.N, eta.degree(), tp.eta_max - tp.eta_min, tp.zeta_log, row.eps);
    const AsymptoticFactors f = asymptotic_factors(spec.N, tp, eta);
    row.d_eta = b.d_eta;
    row.d_exp = b.d_exp.exact ? static_cast<double>(*b.d_exp.exact) : std::exp(b.d_exp.log_value);
    row.log10_d_aa = b.d_aa.log10();
    row.log10_total = b.log10_total;
    row.log10_A = f.logA / std::numbers::ln10;
    row.log10_B = f.logB / std::numbers::ln10;
    row.ok = true;
}

ScanRow blank_row(const ens::SpectrumModel& spec, double beta, double eps, int n, double delta) {
    ScanRow row;
    row.N = spec.N;
    row.beta = beta;
    row.eps = eps;
    row.family = "even_power";
    row.n = n;
    row.delta = delta;
    return row;
}

void check_grid(const std::vector<int>& n_grid, const std::vector<double>& delta_grid) {
    if (n_grid.empty() || delta_grid.empty()) throw std::invalid_argument("scan_grid: empty n or Delta grid");
    for (int n : n_grid) {
        if (n < 1) throw std::invalid_argument("scan_grid: n must be >= 1");
    }
    for (double d : delta_grid) {
        if (!(d > 0.0)) throw std::invalid_argument("scan_grid: Delta must be > 0");
    }
}

}  // namespace

ScanRow evaluate_even_power(const ens::SpectrumModel& spec, double beta, double eps, int n, double delta,
                            MuConstraint mu_mode, double u_target) {
    ScanRow row = blank_row(spec, beta, eps, n, delta);
    try {
        row.mu = mu_mode == MuConstraint::closed_form
                     ? u_target - ens::even_power_mu_offset(n, delta, beta)
                     : ens::solve_even_power_mu(spec, beta, n, delta);
        fill_cost_columns(row, spec, ens::EtaSpec::even_power(n, delta, row.mu));
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

ScanRow evaluate_canonical(const ens::SpectrumModel& spec, double beta, double eps) {
    ScanRow row = blank_row(spec, beta, eps, 0, 0.0);
    row.family = "canonical";
    fill_cost_columns(row, spec, ens::EtaSpec::canonical(beta));
    return row;
}

namespace serial {

std::vector<ScanRow> scan_grid(const ens::SpectrumModel& spec, double beta, double eps,
                               const std::vector<int>& n_grid, const std::vector<double>& delta_grid,
                               const ScanOptions& opts) {
    check_grid(n_grid, delta_grid);
    const double u_target = ens::energy_density(spec, ens::EtaSpec::canonical(beta));
    std::vector<ScanRow> rows;
    rows.reserve(n_grid.size() * delta_grid.size());
    for (int n : n_grid) {
        for (double d : delta_grid) rows.push_back(evaluate_even_power(spec, beta, eps, n, d, opts.mu_mode, u_target));
    }
    return rows;
}

}  // namespace serial

namespace omp {

std::vector<ScanRow> scan_grid(const ens::SpectrumModel& spec, double beta, double eps,
                               const std::vector<int>& n_grid, const std::vector<double>& delta_grid,
                               const ScanOptions& opts) {
    check_grid(n_grid, delta_grid);
    const double u_target = ens::energy_density(spec, ens::EtaSpec::canonical(beta));
    const long long nd = static_cast<long long>(delta_grid.size());
    const long long total = static_cast<long long>(n_grid.size()) * nd;
    std::vector<ScanRow> rows(static_cast<std::size_t>(total));
    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < total; ++i) {
        rows[i] = evaluate_even_power(spec, beta, eps, n_grid[i / nd], delta_grid[i % nd], opts.mu_mode, u_target);
    }
    return rows;
}

}  // namespace omp

std::size_t argmin_row(const std::vector<ScanRow>& rows) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ScanRow& r = rows[i];
        if (!r.ok) continue;
        if (best == static_cast<std::size_t>(-1)) {
            best = i;
            continue;
        }
        const ScanRow& b = rows[best];
        if (r.log10_total < b.log10_total ||
            (r.log10_total == b.log10_total && (r.n < b.n || (r.n == b.n && r.delta < b.delta)))) {
            best = i;
        }
    }
    return best;
}

OptimizeResult optimize_ensemble(const ens::SpectrumModel& spec, double beta, double eps,
                                 const std::vector<int>& n_grid, const std::vector<double>& delta_grid,
                                 const ScanOptions& opts) {
    if (!(beta > 0.0)) throw std::invalid_argument("optimize_ensemble: beta must be > 0");
    OptimizeResult out;
    out.rows = omp::scan_grid(spec, beta, eps, n_grid, delta_grid, opts);
    for (const ScanRow& r : out.rows) out.failures += r.ok ? 0 : 1;
    const std::size_t i = argmin_row(out.rows);
    if (i == static_cast<std::size_t>(-1)) throw std::runtime_error("optimize_ensemble: every grid point failed");
    out.best = out.rows[i];
    out.n = out.best.n;
    out.delta = out.best.delta;
    out.mu = out.best.mu;
    const ens::EtaSpec eta = ens::EtaSpec::even_power(out.n, out.delta, out.mu);
    out.breakdown = total_queries(spec, eta, eps);
    out.canonical = evaluate_canonical(spec, beta, eps);
    return out;
}

}  // namespace eqsvt::cost
