#pragma once

// Generalized statistical ensembles rho ~ exp(-N eta(H/N)): eta families,
// spectra and log-domain thermodynamics.

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace eqsvt::ens {

enum class EtaFamily { canonical, gaussian, even_power, log_comparison, custom };

std::string to_string(EtaFamily f);
EtaFamily eta_family_from_string(const std::string& s);

/// Ensemble function eta(u) of the energy density u.
///
/// Polynomial families also carry monomial coefficients in u; evaluation
/// always goes through the family form, which is better conditioned.
struct EtaSpec {
    EtaFamily family = EtaFamily::canonical;
    double beta = 0.0;    // canonical
    double lambda = 0.0;  // gaussian
    double mu = 0.0;      // gaussian, even_power
    double delta = 1.0;   // even_power
    int n = 1;            // even_power
    double kappa = 0.0;   // log_comparison
    double l = 1.0;       // log_comparison
    std::vector<double> coeffs;  // sum_i coeffs[i] u^i, empty for log_comparison

    static EtaSpec canonical(double beta);
    static EtaSpec gaussian(double lambda, double mu);
    static EtaSpec even_power(int n, double delta, double mu);
    static EtaSpec log_comparison(double kappa, double l);
    static EtaSpec custom(std::vector<double> coeffs);

    bool is_polynomial() const { return family != EtaFamily::log_comparison; }
    /// d_eta. Constant polynomials count as degree 1 since one query is still
    /// spent on the block-encoding. Throws std::logic_error for log_comparison.
    int degree() const;

    double operator()(double u) const;
    double derivative(double u) const;
    double eval_coeffs(double u) const;
};

struct Level {
    double u = 0.0;         // energy density
    double log_mult = 0.0;  // log multiplicity
};

struct SpectrumModel {
    int N = 1;
    std::vector<Level> levels;
    double alpha = 1.0;  // |u| <= alpha for every level
};

struct ThermoPoint {
    double log_Z = 0.0;
    double u_eta = 0.0;
    double beta = 0.0;
    double entropy = 0.0;
    double zeta_log = 0.0;
    double eta_min = 0.0;
    double eta_max = 0.0;
};

SpectrumModel spectrum_free_spins(int N);

/// Eigenvalues of H divided by N_sites, degenerate levels (within 1e-10)
/// merged. Throws std::invalid_argument for non-Hermitian H or ||H|| > alpha N.
SpectrumModel spectrum_dense(const Eigen::MatrixXcd& H, int N_sites, double alpha);

double log_partition(const SpectrumModel& spec, const EtaSpec& eta);

/// Normalized Boltzmann-like weights of every level.
std::vector<double> level_weights(const SpectrumModel& spec, const EtaSpec& eta);

double energy_density(const SpectrumModel& spec, const EtaSpec& eta);

/// beta = eta'(u).
double beta_of(const EtaSpec& eta, double u);

/// s(u^eta) = log Z / N + eta(u^eta).
double entropy_density(const SpectrumModel& spec, const EtaSpec& eta);

/// (eta_min, eta_max) of eta on [-alpha, alpha], from the endpoints and the
/// sign changes of eta'.
std::pair<double, double> eta_extrema(const EtaSpec& eta, double alpha);

double zeta_log(const SpectrumModel& spec, const EtaSpec& eta);

ThermoPoint thermo_point(const SpectrumModel& spec, const EtaSpec& eta);

/// Delta (Delta beta / 2n)^{1/(2n-1)}, the distance of mu below u^eta.
double even_power_mu_offset(int n, double delta, double beta);

/// mu such that eta'(u^eta) = beta_target for even_power(n, delta, mu),
/// by bisection on mu. Throws SolverError on failure.
double solve_even_power_mu(const SpectrumModel& spec, double beta_target, int n, double delta);

double free_energy_canonical(const SpectrumModel& spec, double beta);

void write_spectrum_csv(std::ostream& os, const SpectrumModel& spec);
/// Reads the `u,log_mult` format. N and alpha are not stored in the file.
SpectrumModel read_spectrum_csv(std::istream& is, int N, double alpha);

}  // namespace eqsvt::ens
