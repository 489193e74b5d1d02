#include "eqsvt/polyapprox.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqsvt::poly {

double clenshaw(std::span<const double> coeffs, double x) {
    if (coeffs.empty()) return 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    const double two_x = 2.0 * x;
    for (std::size_t j = coeffs.size() - 1; j >= 1; --j) {
        const double b0 = coeffs[j] + two_x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return coeffs[0] + x * b1 - b2;
}

double cheb_eval(const ChebyshevSeries& series, double x) {
    if (!(std::abs(x) <= 1.0)) throw std::domain_error("cheb_eval: |x| must be <= 1");
    return clenshaw(series.coeffs, x);
}

double ChebyshevSeries::operator()(double x) const { return cheb_eval(*this, x); }

std::vector<double> cheb_interpolate(const std::function<double(double)>& f, int n) {
    if (n < 0) throw std::invalid_argument("cheb_interpolate: degree must be >= 0");
    const int m = n + 1;
    std::vector<double> fx(m);
    std::vector<double> theta(m);
    for (int i = 0; i < m; ++i) {
        theta[i] = std::numbers::pi * (i + 0.5) / m;
        fx[i] = f(std::cos(theta[i]));
    }
    std::vector<double> c(m, 0.0);
    for (int k = 0; k < m; ++k) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += fx[i] * std::cos(k * theta[i]);
        c[k] = (k == 0 ? 1.0 : 2.0) * s / m;
    }
    return c;
}

double coeff_l1_norm(std::span<const double> coeffs) {
    double s = 0.0;
    for (double c : coeffs) s += std::abs(c);
    return s;
}

std::vector<double> certification_grid(int npts) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(npts) + 2);
    grid.push_back(-1.0);
    for (int i = 0; i < npts; ++i) {
        grid.push_back(-std::cos(std::numbers::pi * (i + 0.5) / npts));
    }
    grid.push_back(1.0);
    return grid;
}

double measured_sup_error(const ChebyshevSeries& series, const std::function<double(double)>& f,
                          std::span<const double> grid,
                          const std::function<bool(double)>& in_domain) {
    double worst = 0.0;
    for (double x : grid) {
        if (in_domain && !in_domain(x)) continue;
        worst = std::max(worst, std::abs(clenshaw(series.coeffs, x) - f(x)));
    }
    return worst;
}

double measured_sup_abs(const ChebyshevSeries& series, std::span<const double> grid) {
    double worst = 0.0;
    for (double x : grid) worst = std::max(worst, std::abs(clenshaw(series.coeffs, x)));
    return worst;
}

}  // namespace eqsvt::poly
