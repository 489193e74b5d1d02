#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library; each value is derived from its defining formula by a
// different route (quadrature, Newton, brute-force enumeration, long double).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

namespace oracle {

using ld = long double;

/// e^{-x} I_j(x) = (1/pi) int_0^pi e^{x (cos th - 1)} cos(j th) dth by the
/// trapezoid rule, which converges geometrically for periodic integrands.
inline double bessel_i_scaled_quad(int j, double x, int m = 4000) {
    const ld h = std::numbers::pi_v<ld> / m;
    ld sum = 0.0L;
    for (int i = 0; i <= m; ++i) {
        const ld th = i * h;
        const ld w = (i == 0 || i == m) ? 0.5L : 1.0L;
        sum += w * std::exp(static_cast<ld>(x) * (std::cos(th) - 1.0L)) * std::cos(j * th);
    }
    return static_cast<double>(sum * h / std::numbers::pi_v<ld>);
}

/// Principal Lambert W by Newton on w e^w - x in long double.
inline ld lambert_w_newton(ld x) {
    if (x == 0.0L) return 0.0L;
    ld w = x < 3.0L ? std::log1p(x) : std::log(x) - std::log(std::log(x));
    for (int it = 0; it < 200; ++it) {
        const ld ew = std::exp(w);
        const ld step = (w * ew - x) / (ew * (w + 1.0L));
        w -= step;
        if (std::abs(step) <= 1e-18L * std::max(1.0L, std::abs(w))) break;
    }
    return w;
}

/// W(e^{lx}) by Newton on w + log w = lx.
inline ld lambert_w_of_log_newton(ld lx) {
    ld w = lx > 1.0L ? lx - std::log(lx) : 1.0L;
    for (int it = 0; it < 200; ++it) {
        const ld step = (w + std::log(w) - lx) / (1.0L + 1.0L / w);
        w -= step;
        if (std::abs(step) <= 1e-18L * w) break;
    }
    return w;
}

inline double cheb_t(int j, double x) { return std::cos(j * std::acos(std::clamp(x, -1.0, 1.0))); }

inline double cheb_sum_direct(const std::vector<double>& c, double x) {
    long double s = 0.0L;
    for (std::size_t j = 0; j < c.size(); ++j) s += static_cast<long double>(c[j]) * cheb_t(static_cast<int>(j), x);
    return static_cast<double>(s);
}

/// Degree selection for the sign approximation, recomputed in long double.
struct SignDegree {
    ld k;
    ld t;
    long long d;
};

inline SignDegree sign_degree(ld delta, ld eps) {
    const ld pi = std::numbers::pi_v<ld>;
    const ld e4 = std::pow(eps, 4), e8 = e4 * e4;
    SignDegree s{};
    s.k = std::sqrt(0.5L * lambert_w_newton(2048.0L / (pi * e8))) / delta;
    s.t = std::ceil(std::max(std::exp(2.0L) * s.k * s.k / 2.0L, std::log(256.0L * s.k / (std::sqrt(pi) * e4))));
    s.d = 2 * static_cast<long long>(std::ceil(std::sqrt(s.t * lambert_w_newton(65536.0L * s.k * s.k / (pi * s.t * e8))))) + 1;
    return s;
}

/// Thermal amplitude-amplification degree, recomputed in long double.
inline long long thermal_aa_degree(ld zeta, ld eps) {
    const ld pi = std::numbers::pi_v<ld>;
    const ld e4 = std::pow(eps, 4), e8 = e4 * e4;
    const ld k = std::sqrt((2.0L / zeta) * lambert_w_newton(std::pow(2.0L, 19) / (pi * e8))) / (1.0L - eps / 2.0L);
    const ld t = std::ceil(std::max(std::exp(2.0L) * k * k / 2.0L, std::log(std::pow(2.0L, 12) * k / (std::sqrt(pi) * e4))));
    return 2 * static_cast<long long>(std::ceil(std::sqrt(t * lambert_w_newton(std::pow(2.0L, 24) * k * k / (pi * t * e8))))) + 1;
}

/// Exp-approximation degree from its closed form, with eps_exp = eps sqrt(zeta)/4.
inline long long d_exp(int N, ld osc, ld eps, ld zeta) {
    const ld t = std::ceil(std::max(std::exp(2.0L) * N * osc / 4.0L, std::log(8.0L / (eps * std::sqrt(zeta)))));
    return static_cast<long long>(std::ceil(std::sqrt(2.0L * t * std::log(16.0L / (eps * std::sqrt(zeta))))));
}

/// Free-spin level multiplicities by enumerating all 2^N configurations.
inline std::map<int, long long> free_spin_counts(int N) {
    std::map<int, long long> counts;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << N); ++s) ++counts[__builtin_popcountll(s)];
    return counts;
}

/// Diagonal of sum_n Z_n, built bit by bit.
inline Eigen::VectorXd free_spin_energies(int N) {
    Eigen::VectorXd e(1 << N);
    for (int i = 0; i < (1 << N); ++i) {
        double v = 0.0;
        for (int q = 0; q < N; ++q) v += ((i >> q) & 1) ? -1.0 : 1.0;
        e(i) = v;
    }
    return e;
}

/// Matrix function via eigendecomposition, f applied to eigenvalues.
template <class F>
Eigen::MatrixXcd matrix_function(const Eigen::MatrixXcd& A, F f) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
    Eigen::VectorXd v = es.eigenvalues();
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = f(v(i));
    return es.eigenvectors() * v.asDiagonal() * es.eigenvectors().adjoint();
}

/// Top-left entry of prod_j (e^{i phi_j Z} R(x)) by explicit 2x2 products.
inline std::complex<double> qsp_product(const std::vector<double>& phases, double x) {
    using C = std::complex<double>;
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    Eigen::Matrix2cd R;
    R << x, s, s, -x;
    Eigen::Matrix2cd M = Eigen::Matrix2cd::Identity();
    for (std::size_t j = 0; j < phases.size(); ++j) {
        Eigen::Matrix2cd Z = Eigen::Matrix2cd::Zero();
        Z(0, 0) = std::exp(C(0, phases[j]));
        Z(1, 1) = std::exp(C(0, -phases[j]));
        M = M * Z * R;
    }
    return M(0, 0);
}

/// Binary entropy of magnetization u: -sum_pm ((1 pm u)/2) log((1 pm u)/2).
inline double binary_entropy(double u) {
    const double a = 0.5 * (1.0 + u), b = 0.5 * (1.0 - u);
    return -(a * std::log(a) + b * std::log(b));
}

}  // namespace oracle
