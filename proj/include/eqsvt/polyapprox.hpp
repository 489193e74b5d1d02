#pragma once

// Special functions and Chebyshev-series approximations of exp, erf and sign
// with certified error bounds.

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace eqsvt::poly {

enum class Parity { even, odd, none };

/// Polynomial in the Chebyshev basis, sum_j coeffs[j] T_j(x).
struct ChebyshevSeries {
    std::vector<double> coeffs;
    Parity parity = Parity::none;
    /// Certified max of |series| on [-1, 1], when known.
    std::optional<double> sup_bound;
    /// Certified sup-distance to the approximated function on its domain.
    double err_bound = 0.0;

    int degree() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1; }
    double operator()(double x) const;
};

/// Parameters and series of the odd sign-function approximation used by
/// fixed-point amplitude amplification.
struct SignPolySpec {
    double delta = 0.0;
    double eps = 0.0;
    double k = 0.0;
    long long t = 0;
    int d = 0;
    ChebyshevSeries series;
};

// --- special functions -----------------------------------------------------

/// e^{-x} I_j(x). Throws std::domain_error for x < 0.
double bessel_i_scaled(int j, double x);

/// e^{-x} I_j(x) for j = 0..jmax in one backward-recurrence sweep.
std::vector<double> bessel_i_scaled_all(int jmax, double x);

/// Principal branch of Lambert W for x >= 0.
double lambert_w(double x);

/// W(e^{log_x}); usable when x itself overflows a double.
double lambert_w_of_log(double log_x);

// --- Chebyshev series -------------------------------------------------------

/// Clenshaw sum without the domain check.
double clenshaw(std::span<const double> coeffs, double x);

/// Throws std::domain_error for |x| > 1.
double cheb_eval(const ChebyshevSeries& series, double x);

/// Chebyshev coefficients of the degree-n interpolant of f through the
/// n+1 Chebyshev-Gauss nodes.
std::vector<double> cheb_interpolate(const std::function<double(double)>& f, int n);

/// Sum of |coeffs|, an upper bound for |series| on [-1, 1].
double coeff_l1_norm(std::span<const double> coeffs);

/// `npts` Chebyshev nodes on [-1, 1] plus both endpoints.
std::vector<double> certification_grid(int npts = 100000);

/// max |series(x) - f(x)| over the grid points accepted by `in_domain`.
double measured_sup_error(const ChebyshevSeries& series, const std::function<double(double)>& f,
                          std::span<const double> grid,
                          const std::function<bool(double)>& in_domain = {});

double measured_sup_abs(const ChebyshevSeries& series, std::span<const double> grid);

// --- approximations ---------------------------------------------------------

struct ExpPolyDegree {
    long long t = 0;
    int n = 0;
};

/// Degree selection for exp_poly: t = ceil(max{e^2 lambda, log(2/eps)}),
/// n = ceil(sqrt(2 t log(4/eps))).
ExpPolyDegree exp_poly_degree(double lambda, double eps);

/// Approximation of e^{-lambda (x + 1)} on [-1, 1] with error <= eps.
ChebyshevSeries exp_poly(double lambda, double eps);

/// Same series at an explicit degree n; err_bound uses t = ceil(e^2 lambda).
ChebyshevSeries exp_poly_with_degree(double lambda, int n);

/// Odd degree-n approximation of erf(k x).
ChebyshevSeries erf_poly(double k, int n);

SignPolySpec sign_poly(double delta, double eps);

}  // namespace eqsvt::poly
