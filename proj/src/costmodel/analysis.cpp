#include "eqsvt/costmodel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqsvt::cost {

std::string to_string(MuConstraint m) {
    return m == MuConstraint::closed_form ? "closed_form" : "self_consistent";
}

MuConstraint mu_constraint_from_string(const std::string& s) {
    if (s == "closed_form" || s == "closed-form") return MuConstraint::closed_form;
    if (s == "self_consistent" || s == "self-consistent") return MuConstraint::self_consistent;
    throw std::invalid_argument("unknown mu constraint '" + s + "'");
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0 && hi >= lo) || n < 1) throw std::invalid_argument("log_grid: need 0 < lo <= hi and n >= 1");
    std::vector<double> g(static_cast<std::size_t>(n));
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * i / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("ls_slope: need >= 2 paired points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) throw std::invalid_argument("ls_slope: x values are all equal");
    return sxy / sxx;
}

std::vector<CurveRow> cost_curve(const std::vector<int>& Ns, double beta, double eps, int n, double delta,
                                 MuConstraint mu_mode) {
    if (Ns.empty()) throw std::invalid_argument("cost_curve: empty N range");
    std::vector<CurveRow> out;
    out.reserve(Ns.size());
    for (int N : Ns) {
        const ens::SpectrumModel spec = ens::spectrum_free_spins(N);
        const double u_target = ens::energy_density(spec, ens::EtaSpec::canonical(beta));
        const ScanRow gen = evaluate_even_power(spec, beta, eps, n, delta, mu_mode, u_target);
        if (!gen.ok) throw std::runtime_error("cost_curve: N=" + std::to_string(N) + ": " + gen.error);
        const ScanRow can = evaluate_canonical(spec, beta, eps);
        out.push_back({N, can.log10_total, gen.log10_total, gen.log10_A});
    }
    return out;
}

}  // namespace eqsvt::cost
