#include "eqsvt/common.hpp"
#include "eqsvt/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace eqsvt::ens {

namespace {

std::vector<double> log_weights(const SpectrumModel& spec, const EtaSpec& eta) {
    std::vector<double> lw;
    lw.reserve(spec.levels.size());
    for (const Level& lv : spec.levels) lw.push_back(lv.log_mult - spec.N * eta(lv.u));
    return lw;
}

}  // namespace

double log_partition(const SpectrumModel& spec, const EtaSpec& eta) {
    const std::vector<double> lw = log_weights(spec, eta);
    return logsumexp(lw);
}

std::vector<double> level_weights(const SpectrumModel& spec, const EtaSpec& eta) {
    std::vector<double> lw = log_weights(spec, eta);
    const double lz = logsumexp(lw);
    for (double& v : lw) v = std::exp(v - lz);
    return lw;
}

double energy_density(const SpectrumModel& spec, const EtaSpec& eta) {
    const std::vector<double> w = level_weights(spec, eta);
    double u = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) u += w[k] * spec.levels[k].u;
    return u;
}

double entropy_density(const SpectrumModel& spec, const EtaSpec& eta) {
    return log_partition(spec, eta) / spec.N + eta(energy_density(spec, eta));
}

double zeta_log(const SpectrumModel& spec, const EtaSpec& eta) {
    const double eta_min = eta_extrema(eta, spec.alpha).first;
    return spec.N * eta_min + log_partition(spec, eta) - spec.N * std::numbers::ln2;
}

ThermoPoint thermo_point(const SpectrumModel& spec, const EtaSpec& eta) {
    ThermoPoint tp;
    tp.log_Z = log_partition(spec, eta);
    tp.u_eta = energy_density(spec, eta);
    tp.beta = beta_of(eta, tp.u_eta);
    tp.entropy = tp.log_Z / spec.N + eta(tp.u_eta);
    const auto [lo, hi] = eta_extrema(eta, spec.alpha);
    tp.eta_min = lo;
    tp.eta_max = hi;
    tp.zeta_log = spec.N * lo + tp.log_Z - spec.N * std::numbers::ln2;
    return tp;
}

double even_power_mu_offset(int n, double delta, double beta) {
    if (n < 1) throw std::invalid_argument("even_power_mu_offset: n must be >= 1");
    return delta * std::pow(delta * beta / (2.0 * n), 1.0 / (2.0 * n - 1.0));
}

double solve_even_power_mu(const SpectrumModel& spec, double beta_target, int n, double delta) {
    if (!(beta_target > 0.0)) throw std::invalid_argument("solve_even_power_mu: beta must be > 0");
    if (!(delta > 0.0)) throw std::invalid_argument("solve_even_power_mu: Delta must be > 0");
    if (spec.levels.empty()) throw std::invalid_argument("solve_even_power_mu: empty spectrum");

    double u_min = spec.levels.front().u;
    double u_max = u_min;
    for (const Level& lv : spec.levels) {
        u_min = std::min(u_min, lv.u);
        u_max = std::max(u_max, lv.u);
    }
    auto residual = [&](double mu) {
        const EtaSpec eta = EtaSpec::even_power(n, delta, mu);
        return beta_of(eta, energy_density(spec, eta)) - beta_target;
    };

    double lo = u_min - even_power_mu_offset(n, delta, beta_target) - 2.0;
    double hi = u_max;
    double r_lo = residual(lo);
    const double r_hi = residual(hi);
    if (!(r_lo > 0.0 && r_hi < 0.0)) {
        throw SolverError(fmt::format("solve_even_power_mu: bracket does not straddle beta={}", beta_target),
                          std::min(std::abs(r_lo), std::abs(r_hi)));
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double r = residual(mid);
        if (r > 0.0) {
            lo = mid;
            r_lo = r;
        } else {
            hi = mid;
        }
    }
    const double mu = 0.5 * (lo + hi);
    const double r = residual(mu);
    if (!(std::abs(r) <= 1e-8 * std::max(1.0, beta_target))) {
        throw SolverError(fmt::format("solve_even_power_mu: bracket collapsed with residual {:.3g}", r), std::abs(r));
    }
    return mu;
}

double free_energy_canonical(const SpectrumModel& spec, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("free_energy_canonical: beta must be > 0");
    return -log_partition(spec, EtaSpec::canonical(beta)) / (spec.N * beta);
}

}  // namespace eqsvt::ens
