#include "eqsvt/polyapprox.hpp"

#include <cmath>
#include <stdexcept>

namespace eqsvt::poly {

namespace {

// Power series of e^{-x} I_j(x); used where 2k/x would blow up the recurrence.
double bessel_i_scaled_series(int j, double x) {
    const double half = 0.5 * x;
    const double log_lead = j * std::log(half) - std::lgamma(j + 1.0) - x;
    if (log_lead < -745.0) return 0.0;
    double term = 1.0;
    double sum = 1.0;
    const double q = half * half;
    for (int m = 1; m < 200; ++m) {
        term *= q / (static_cast<double>(m) * (m + j));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return std::exp(log_lead) * sum;
}

}  // namespace

std::vector<double> bessel_i_scaled_all(int jmax, double x) {
    if (!(x >= 0.0)) throw std::domain_error("bessel_i_scaled: x must be >= 0");
    if (jmax < 0) throw std::domain_error("bessel_i_scaled: order must be >= 0");
    std::vector<double> out(static_cast<std::size_t>(jmax) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    if (x < 1e-3) {
        for (int j = 0; j <= jmax; ++j) out[j] = bessel_i_scaled_series(j, x);
        return out;
    }

    // Miller's algorithm: run I_{k-1} = (2k/x) I_k + I_{k+1} downward from an
    // order where the minimal solution is negligible, then normalise with
    // I_0 + 2 sum_{k>=1} I_k = e^x.
    const int start = jmax + static_cast<int>(std::ceil(std::sqrt(80.0 * (x + jmax)))) + 30;
    double next = 0.0;   // I_{k+1}
    double cur = 1e-280;  // I_k
    double sum = 0.0;     // 2 sum_{k>=1} I_k over the orders visited so far
    constexpr double kRescale = 1e250;
    for (int k = start; k >= 1; --k) {
        if (k <= jmax) out[k] = cur;
        sum += 2.0 * cur;
        const double prev = (2.0 * k / x) * cur + next;
        next = cur;
        cur = prev;
        if (cur > kRescale) {
            cur /= kRescale;
            next /= kRescale;
            sum /= kRescale;
            for (int i = k; i <= jmax; ++i) out[i] /= kRescale;
        }
    }
    out[0] = cur;
    sum += cur;
    for (double& v : out) v /= sum;
    return out;
}

double bessel_i_scaled(int j, double x) {
    if (!(x >= 0.0)) throw std::domain_error("bessel_i_scaled: x must be >= 0");
    if (j < 0) throw std::domain_error("bessel_i_scaled: order must be >= 0");
    return bessel_i_scaled_all(j, x)[j];
}

double lambert_w(double x) {
    if (!(x >= 0.0)) throw std::domain_error("lambert_w: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;
    double w;
    if (x < 1.0) {
        w = std::log1p(x);
    } else {
        const double l = std::log(x);
        w = l - std::log(std::max(l, 1.0));
        if (w < 0.5) w = 0.5;
    }
    // Halley iteration on f(w) = w e^w - x.
    for (int it = 0; it < 100; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if (std::abs(step) <= 4e-16 * std::max(1.0, std::abs(w))) break;
    }
    return w;
}

double lambert_w_of_log(double log_x) {
    if (std::isnan(log_x)) throw std::domain_error("lambert_w_of_log: NaN argument");
    if (log_x < 3.0) return lambert_w(std::exp(log_x));
    // Newton on g(w) = w + log w - log_x.
    double w = log_x - std::log(log_x);
    for (int it = 0; it < 100; ++it) {
        const double g = w + std::log(w) - log_x;
        const double step = g / (1.0 + 1.0 / w);
        w -= step;
        if (std::abs(step) <= 4e-16 * w) break;
    }
    return w;
}

}  // namespace eqsvt::poly
