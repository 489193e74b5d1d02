#include "eqsvt/polyapprox.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eqsvt::poly {

namespace {

constexpr double kE2 = std::numbers::e * std::numbers::e;
constexpr int kMaxSeriesDegree = 1 << 22;

long long checked_ceil(double v, const char* what) {
    if (!(v < 9.0e15)) throw std::overflow_error(std::string(what) + ": value too large for an exact ceiling");
    return static_cast<long long>(std::ceil(v));
}

}  // namespace

ExpPolyDegree exp_poly_degree(double lambda, double eps) {
    if (!(lambda > 0.0)) throw std::invalid_argument("exp_poly: lambda must be > 0");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("exp_poly: eps must lie in (0, 1)");
    ExpPolyDegree out;
    out.t = checked_ceil(std::max(kE2 * lambda, std::log(2.0 / eps)), "exp_poly");
    const double n = std::ceil(std::sqrt(2.0 * static_cast<double>(out.t) * std::log(4.0 / eps)));
    if (n > kMaxSeriesDegree) throw std::overflow_error("exp_poly: degree too large to materialise");
    out.n = static_cast<int>(n);
    return out;
}

ChebyshevSeries exp_poly_with_degree(double lambda, int n) {
    if (!(lambda > 0.0)) throw std::invalid_argument("exp_poly: lambda must be > 0");
    if (n < 0) throw std::invalid_argument("exp_poly: degree must be >= 0");
    // e^{-lambda} I_j(lambda) directly; T_j(-x) = (-1)^j T_j(x).
    const std::vector<double> ie = bessel_i_scaled_all(n, lambda);
    ChebyshevSeries s;
    s.coeffs.resize(static_cast<std::size_t>(n) + 1);
    s.coeffs[0] = ie[0];
    for (int j = 1; j <= n; ++j) s.coeffs[j] = (j % 2 == 0 ? 2.0 : -2.0) * ie[j];
    s.parity = Parity::none;
    s.sup_bound = coeff_l1_norm(s.coeffs);
    const double t = std::ceil(kE2 * lambda);
    s.err_bound = 2.0 * std::exp(-static_cast<double>(n) * n / (2.0 * t)) + std::exp(-lambda - t);
    return s;
}

ChebyshevSeries exp_poly(double lambda, double eps) {
    const ExpPolyDegree deg = exp_poly_degree(lambda, eps);
    ChebyshevSeries s = exp_poly_with_degree(lambda, deg.n);
    const double t = static_cast<double>(deg.t);
    s.err_bound = 2.0 * std::exp(-static_cast<double>(deg.n) * deg.n / (2.0 * t)) + std::exp(-lambda - t);
    return s;
}

ChebyshevSeries erf_poly(double k, int n) {
    if (!(k > 0.0)) throw std::invalid_argument("erf_poly: k must be > 0");
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("erf_poly: degree must be odd and >= 1");
    if (n > kMaxSeriesDegree) throw std::overflow_error("erf_poly: degree too large to materialise");
    const int jmax = (n - 1) / 2;
    const double b = 0.5 * k * k;
    const std::vector<double> ie = bessel_i_scaled_all(jmax, b);
    const double pref = 2.0 * k / std::sqrt(std::numbers::pi);

    ChebyshevSeries s;
    s.coeffs.assign(static_cast<std::size_t>(n) + 1, 0.0);
    s.coeffs[1] = pref * ie[0];
    for (int j = 1; j <= jmax; ++j) {
        const double a = pref * ie[j] * (j % 2 == 0 ? 1.0 : -1.0);
        s.coeffs[2 * j + 1] += a / (2 * j + 1);
        s.coeffs[2 * j - 1] -= a / (2 * j - 1);
    }
    s.parity = Parity::odd;
    const double t = std::ceil(kE2 * b);
    s.err_bound = 4.0 * k / (std::sqrt(std::numbers::pi) * n) *
                  (2.0 * std::exp(-static_cast<double>(n - 1) * (n - 1) / (8.0 * t)) + std::exp(-b - t));
    s.sup_bound = std::min(coeff_l1_norm(s.coeffs), 1.0 + s.err_bound);
    return s;
}

SignPolySpec sign_poly(double delta, double eps) {
    if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("sign_poly: delta must lie in (0, 1]");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("sign_poly: eps must lie in (0, 1)");
    const double pi = std::numbers::pi;
    const double eps4 = std::pow(eps, 4);
    const double eps8 = eps4 * eps4;

    SignPolySpec out;
    out.delta = delta;
    out.eps = eps;
    out.k = std::sqrt(0.5 * lambert_w(std::pow(2.0, 11) / (pi * eps8))) / delta;
    out.t = checked_ceil(std::max(kE2 * out.k * out.k / 2.0,
                                  std::log(std::pow(2.0, 8) * out.k / (std::sqrt(pi) * eps4))),
                         "sign_poly");
    const double t = static_cast<double>(out.t);
    const double inner = std::sqrt(t * lambert_w(std::pow(2.0, 16) * out.k * out.k / (pi * t * eps8)));
    const double d = 2.0 * std::ceil(inner) + 1.0;
    if (d > kMaxSeriesDegree) throw std::overflow_error("sign_poly: degree too large to materialise");
    out.d = static_cast<int>(d);

    ChebyshevSeries erf = erf_poly(out.k, out.d);
    const double norm = 1.0 + eps4 / 16.0;
    for (double& c : erf.coeffs) c /= norm;
    erf.sup_bound = std::min(coeff_l1_norm(erf.coeffs), (1.0 + erf.err_bound) / norm);
    erf.err_bound = eps4 / 8.0;
    out.series = std::move(erf);
    return out;
}

}  // namespace eqsvt::poly
