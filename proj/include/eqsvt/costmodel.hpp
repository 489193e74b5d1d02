#pragma once

// Query counts for thermal-state preparation with a generalized ensemble,
// asymptotic cost factors, and the (n, Delta) ensemble optimizer.

#include "eqsvt/ensembles.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eqsvt::cost {

/// A count that is exact while it fits below 2^53, otherwise known only
/// through its natural log (ceilings skipped).
struct CountValue {
    std::optional<std::uint64_t> exact;
    double log_value = 0.0;

    static CountValue from_exact(std::uint64_t v);
    static CountValue from_log(double log_v);
    double log10() const;
    CountValue operator*(const CountValue& o) const;
};

/// Polynomial degree of the exp approximation, for t = ceil(max{e^2 N osc/4,
/// log(2/eps_exp)}) and d = ceil(sqrt(2 t log(4/eps_exp))).
long long d_exp_count(int N, double eta_osc, double eps_exp);
long long d_exp_count_log(int N, double eta_osc, double log_eps_exp);
/// Same degree as a CountValue; log-only once t passes 2^53.
CountValue d_exp_value(int N, double eta_osc, double log_eps_exp);

enum class AaContext { thermal_prep, standalone_fpaa };

struct AaDegree {
    CountValue d;
    double log_k = 0.0;
    double log_t = 0.0;
    std::optional<long long> t;  // exact when representable
};

/// Fixed-point amplitude-amplification degree.
///
/// thermal_prep: zeta_log is log zeta of the target ensemble and eps the
/// overall preparation accuracy.
/// standalone_fpaa: zeta_log is log delta^2 for the overlap lower bound delta
/// and eps the amplification accuracy.
AaDegree d_aa_count(double zeta_log, double eps, AaContext context);

/// Standalone degree for overlap bound delta.
AaDegree fpaa_degree(double delta, double eps);
/// Thermal-preparation degree for log zeta.
AaDegree thermal_aa_degree(double zeta_log, double eps);

struct QueryCostBreakdown {
    int d_eta = 1;
    CountValue d_exp;
    CountValue d_aa;
    CountValue total;
    double log10_total = 0.0;
    double zeta_log = 0.0;
    double log_delta_aa = 0.0;  // log of (sqrt(zeta)/2)(1 - eps/2)
    double delta_aa = 0.0;      // may underflow to 0 at large N
    double eps = 0.0;
    double log_eps_exp = 0.0;
    double eps_exp = 0.0;
    double eps_aa = 0.0;
    double log_k = 0.0;
    double log_t = 0.0;
    double eta_osc = 0.0;
};

/// Breakdown from precomputed ensemble quantities.
QueryCostBreakdown total_queries(int N, int d_eta, double eta_osc, double zeta_log, double eps);

/// Full assembly from a spectrum and eta. Also checks that the thermal k
/// equals the standalone k at delta = (sqrt(zeta)/2)(1 - eps/2),
/// eps_AA = eps/2, and throws std::logic_error if they disagree.
QueryCostBreakdown total_queries(const ens::SpectrumModel& spec, const ens::EtaSpec& eta, double eps);

struct AsymptoticFactors {
    double logA = 0.0;
    double logB = 0.0;
};

AsymptoticFactors asymptotic_factors(const ens::SpectrumModel& spec, const ens::EtaSpec& eta);
AsymptoticFactors asymptotic_factors(int N, const ens::ThermoPoint& tp, const ens::EtaSpec& eta);

/// Per-site exponent 1/2 beta (l - u) log((l + 1)/(l - u)) of the log-ensemble cost.
double log_ensemble_cost_exponent(double beta, double u_eta, double l);

// --- optimizer --------------------------------------------------------------

enum class MuConstraint {
    /// mu = u_target - Delta (Delta beta/2n)^{1/(2n-1)} with u_target the
    /// canonical energy density at beta.
    closed_form,
    /// mu from solve_even_power_mu (finite-N self-consistency).
    self_consistent,
};

std::string to_string(MuConstraint m);
MuConstraint mu_constraint_from_string(const std::string& s);

struct ScanRow {
    int N = 0;
    double beta = 0.0;
    double eps = 0.0;
    std::string family;
    int n = 0;
    double delta = 0.0;
    double mu = 0.0;
    int d_eta = 0;
    double d_exp = 0.0;  // exact below 2^53
    double log10_d_aa = 0.0;
    double log10_total = 0.0;
    double log10_A = 0.0;
    double log10_B = 0.0;
    bool ok = false;
    std::string error;
};

struct ScanOptions {
    MuConstraint mu_mode = MuConstraint::closed_form;
    /// 0 means the OpenMP default; ignored by the serial path.
    int threads = 0;
};

/// Evaluates one even-power grid point.
ScanRow evaluate_even_power(const ens::SpectrumModel& spec, double beta, double eps, int n, double delta,
                            MuConstraint mu_mode, double u_target);

/// Canonical ensemble at beta in the same row format (n = 0, delta = 0).
ScanRow evaluate_canonical(const ens::SpectrumModel& spec, double beta, double eps);

namespace serial {
std::vector<ScanRow> scan_grid(const ens::SpectrumModel& spec, double beta, double eps,
                               const std::vector<int>& n_grid, const std::vector<double>& delta_grid,
                               const ScanOptions& opts = {});
}
namespace omp {
std::vector<ScanRow> scan_grid(const ens::SpectrumModel& spec, double beta, double eps,
                               const std::vector<int>& n_grid, const std::vector<double>& delta_grid,
                               const ScanOptions& opts = {});
}

struct OptimizeResult {
    int n = 0;
    double delta = 0.0;
    double mu = 0.0;
    QueryCostBreakdown breakdown;
    ScanRow best;
    ScanRow canonical;
    std::vector<ScanRow> rows;  // grid order, n-major
    std::size_t failures = 0;
};

/// Grid point with the smallest log10_total; ties go to smaller n, then
/// smaller Delta. Throws std::runtime_error if every point fails.
OptimizeResult optimize_ensemble(const ens::SpectrumModel& spec, double beta, double eps,
                                 const std::vector<int>& n_grid, const std::vector<double>& delta_grid,
                                 const ScanOptions& opts = {});

/// Index of the minimizing row under the optimizer's tie-break, or npos.
std::size_t argmin_row(const std::vector<ScanRow>& rows);

/// n points spaced logarithmically in [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);

struct CurveRow {
    int N = 0;
    double log10_canonical = 0.0;
    double log10_generalized = 0.0;
    double log10_optimal_scaling = 0.0;
};

/// Free-spin cost curve at fixed even-power parameters (n, Delta).
std::vector<CurveRow> cost_curve(const std::vector<int>& Ns, double beta, double eps, int n, double delta,
                                 MuConstraint mu_mode = MuConstraint::closed_form);

/// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace eqsvt::cost
