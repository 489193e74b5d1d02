#include "eqsvt/common.hpp"
#include "eqsvt/costmodel.hpp"
#include "eqsvt/polyapprox.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqsvt::cost {

namespace {

constexpr double kLn2 = std::numbers::ln2;
const double kLogPi = std::log(std::numbers::pi);

// Shared tail of both amplitude-amplification contexts once log k is known:
// t = ceil(max{e^2 k^2/2, log(2^ct k/(sqrt(pi) eps^4))}),
// d = 2 ceil(sqrt(t W(2^cw k^2/(pi t eps^8)))) + 1.
AaDegree aa_from_log_k(double log_k, double eps, int ct, int cw) {
    AaDegree out;
    out.log_k = log_k;
    const double log_eps = std::log(eps);
    const double log_t1 = 2.0 + 2.0 * log_k - kLn2;
    const double t2 = ct * kLn2 + log_k - 0.5 * kLogPi - 4.0 * log_eps;
    const double log_t2 = std::log(t2);
    double log_t = std::max(log_t1, log_t2);
    if (std::exp(log_t) < kExactIntegerLimit) {
        const double t = std::ceil(std::max(std::exp(log_t1), t2));
        out.t = static_cast<long long>(t);
        log_t = std::log(t);
    }
    out.log_t = log_t;

    const double log_w_arg = cw * kLn2 + 2.0 * log_k - kLogPi - log_t - 8.0 * log_eps;
    const double w = poly::lambert_w_of_log(log_w_arg);
    const double log_inner = 0.5 * (log_t + std::log(w));
    const double inner = std::exp(log_inner);
    if (out.t && inner < 0.25 * kExactIntegerLimit) {
        const double d = 2.0 * std::ceil(inner) + 1.0;
        out.d = CountValue::from_exact(static_cast<std::uint64_t>(d));
    } else {
        out.d = CountValue::from_log(kLn2 + log_inner);
    }
    return out;
}

}  // namespace

CountValue CountValue::from_exact(std::uint64_t v) {
    CountValue c;
    c.exact = v;
    c.log_value = std::log(static_cast<double>(v));
    return c;
}

CountValue CountValue::from_log(double log_v) {
    CountValue c;
    c.log_value = log_v;
    return c;
}

double CountValue::log10() const { return log_value / std::numbers::ln10; }

CountValue CountValue::operator*(const CountValue& o) const {
    if (exact && o.exact) {
        std::uint64_t p = 0;
        if (!__builtin_mul_overflow(*exact, *o.exact, &p) && static_cast<double>(p) < kExactIntegerLimit) {
            return from_exact(p);
        }
    }
    return from_log(log_value + o.log_value);
}

CountValue d_exp_value(int N, double eta_osc, double log_eps_exp) {
    if (N < 1) throw std::invalid_argument("d_exp_count: N must be >= 1");
    if (!(eta_osc >= 0.0)) throw std::invalid_argument("d_exp_count: eta_osc must be >= 0");
    if (std::isnan(log_eps_exp)) throw std::invalid_argument("d_exp_count: eps_exp must be > 0");
    const double e2 = std::numbers::e * std::numbers::e;
    const double t_raw = std::max(0.25 * e2 * N * eta_osc, kLn2 - log_eps_exp);
    const double log_term = 2.0 * kLn2 - log_eps_exp;
    if (!(t_raw < kExactIntegerLimit)) return CountValue::from_log(0.5 * (kLn2 + std::log(t_raw) + std::log(log_term)));
    const double d = std::ceil(std::sqrt(2.0 * std::ceil(t_raw) * log_term));
    return CountValue::from_exact(static_cast<std::uint64_t>(d));
}

long long d_exp_count_log(int N, double eta_osc, double log_eps_exp) {
    const CountValue d = d_exp_value(N, eta_osc, log_eps_exp);
    if (!d.exact) throw std::overflow_error("d_exp_count: t exceeds 2^53");
    return static_cast<long long>(*d.exact);
}

long long d_exp_count(int N, double eta_osc, double eps_exp) {
    if (!(eps_exp > 0.0)) throw std::invalid_argument("d_exp_count: eps_exp must be > 0");
    return d_exp_count_log(N, eta_osc, std::log(eps_exp));
}

AaDegree d_aa_count(double zeta_log, double eps, AaContext context) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("d_aa_count: eps must lie in (0, 1)");
    if (!(zeta_log <= 1e-9)) throw std::invalid_argument("d_aa_count: zeta_log must be <= 0");
    const double log_eps8 = 8.0 * std::log(eps);
    if (context == AaContext::thermal_prep) {
        // k = (1/(1 - eps/2)) sqrt((2/zeta) W(2^19/(pi eps^8)))
        const double w = poly::lambert_w_of_log(19.0 * kLn2 - kLogPi - log_eps8);
        const double log_k = -std::log1p(-0.5 * eps) + 0.5 * (kLn2 - zeta_log + std::log(w));
        return aa_from_log_k(log_k, eps, 12, 24);
    }
    // k = (1/delta) sqrt(W(2^11/(pi eps^8))/2), delta^2 = zeta
    const double w = poly::lambert_w_of_log(11.0 * kLn2 - kLogPi - log_eps8);
    const double log_k = -0.5 * zeta_log + 0.5 * (std::log(w) - kLn2);
    return aa_from_log_k(log_k, eps, 8, 16);
}

AaDegree fpaa_degree(double delta, double eps) {
    if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("fpaa_degree: delta must lie in (0, 1]");
    return d_aa_count(2.0 * std::log(delta), eps, AaContext::standalone_fpaa);
}

AaDegree thermal_aa_degree(double zeta_log, double eps) {
    return d_aa_count(zeta_log, eps, AaContext::thermal_prep);
}

QueryCostBreakdown total_queries(int N, int d_eta, double eta_osc, double zeta_log, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("total_queries: eps must lie in (0, 1)");
    if (d_eta < 1) throw std::invalid_argument("total_queries: d_eta must be >= 1");
    QueryCostBreakdown b;
    b.d_eta = d_eta;
    b.eps = eps;
    b.eta_osc = eta_osc;
    b.zeta_log = std::min(zeta_log, 0.0);
    b.eps_aa = 0.5 * eps;
    b.log_eps_exp = std::log(eps) + 0.5 * b.zeta_log - 2.0 * kLn2;
    b.eps_exp = std::exp(b.log_eps_exp);
    b.log_delta_aa = 0.5 * b.zeta_log - kLn2 + std::log1p(-0.5 * eps);
    b.delta_aa = std::exp(b.log_delta_aa);
    b.d_exp = d_exp_value(N, eta_osc, b.log_eps_exp);
    const AaDegree aa = thermal_aa_degree(b.zeta_log, eps);
    b.d_aa = aa.d;
    b.log_k = aa.log_k;
    b.log_t = aa.log_t;
    b.total = CountValue::from_exact(static_cast<std::uint64_t>(d_eta)) * b.d_exp * aa.d;
    b.log10_total = b.total.log10();
    return b;
}

QueryCostBreakdown total_queries(const ens::SpectrumModel& spec, const ens::EtaSpec& eta, double eps) {
    const ens::ThermoPoint tp = ens::thermo_point(spec, eta);
    QueryCostBreakdown b = total_queries(spec.N, eta.degree(), tp.eta_max - tp.eta_min, tp.zeta_log, eps);

    // Same k through the standalone formula at the composed (delta, eps/2).
    const double w = poly::lambert_w_of_log(11.0 * kLn2 - kLogPi - 8.0 * std::log(b.eps_aa));
    const double log_k_standalone = -b.log_delta_aa + 0.5 * (std::log(w) - kLn2);
    if (std::abs(log_k_standalone - b.log_k) > 1e-9) {
        throw std::logic_error("total_queries: thermal and standalone k disagree");
    }
    return b;
}

AsymptoticFactors asymptotic_factors(int N, const ens::ThermoPoint& tp, const ens::EtaSpec& eta) {
    AsymptoticFactors f;
    f.logA = 0.5 * (N * kLn2 - N * tp.entropy);
    f.logB = 0.5 * N * (eta(tp.u_eta) - tp.eta_min);
    return f;
}

AsymptoticFactors asymptotic_factors(const ens::SpectrumModel& spec, const ens::EtaSpec& eta) {
    return asymptotic_factors(spec.N, ens::thermo_point(spec, eta), eta);
}

double log_ensemble_cost_exponent(double beta, double u_eta, double l) {
    if (!(l > u_eta)) throw std::domain_error("log_ensemble_cost_exponent: l must exceed u_eta");
    return 0.5 * beta * (l - u_eta) * std::log((l + 1.0) / (l - u_eta));
}

}  // namespace eqsvt::cost
