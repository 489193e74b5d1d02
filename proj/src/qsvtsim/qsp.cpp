#include "eqsvt/common.hpp"
#include "eqsvt/qsvtsim/qsp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace eqsvt::sim {

namespace {

constexpr double kPi = std::numbers::pi;

// 2x2 complex matrix, row-major.
using M2 = std::array<cplx, 4>;

M2 mul(const M2& a, const M2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

M2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

M2 zrot(double psi) { return {std::polar(1.0, psi), 0.0, 0.0, std::polar(1.0, -psi)}; }

// Signal operator of the solver's internal convention, e^{i arccos(x) X}.
M2 w_signal(double x) {
    const cplx is{0.0, std::sqrt(std::max(0.0, 1.0 - x * x))};
    return {x, is, is, x};
}

M2 reflection(double x) {
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    return {x, s, s, -x};
}

std::vector<double> full_phases(const std::vector<double>& red, int L) {
    std::vector<double> full(red);
    if (L % 2 == 1) {
        full.insert(full.end(), red.rbegin(), red.rend());
    } else {
        full.insert(full.end(), red.rbegin() + 1, red.rend());
    }
    return full;
}

// Re <0|U(x)|0> and its gradient with respect to the reduced phases, for
// U = A_0 W A_1 W ... W A_L with A_k = e^{i psi_k Z}.
double response_and_grad(const std::vector<double>& full, int n_red, double x, std::vector<double>* grad) {
    const int L = static_cast<int>(full.size()) - 1;
    const M2 W = w_signal(x);
    std::vector<M2> prefix(static_cast<std::size_t>(L) + 1);
    std::vector<M2> suffix(static_cast<std::size_t>(L) + 1);
    prefix[0] = identity();
    for (int k = 1; k <= L; ++k) prefix[k] = mul(mul(prefix[k - 1], zrot(full[k - 1])), W);
    suffix[L] = identity();
    for (int k = L - 1; k >= 0; --k) suffix[k] = mul(mul(W, zrot(full[k + 1])), suffix[k + 1]);
    const M2 U = mul(mul(prefix[L], zrot(full[L])), suffix[L]);
    if (grad) {
        grad->assign(static_cast<std::size_t>(n_red), 0.0);
        for (int k = 0; k <= L; ++k) {
            const int m = std::min(k, L - k);
            // d/dpsi e^{i psi Z} = i Z e^{i psi Z}
            M2 dA = zrot(full[k]);
            dA[0] *= cplx{0.0, 1.0};
            dA[3] *= cplx{0.0, -1.0};
            const M2 dU = mul(mul(prefix[k], dA), suffix[k]);
            (*grad)[m] += dU[0].real();
        }
    }
    return U[0].real();
}

double max_abs(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

cplx qsp_response(std::span<const double> phases, int degree, double x) {
    if (degree == 0) {
        if (phases.size() != 1) throw std::invalid_argument("qsp_response: degree 0 needs one phase");
        return std::polar(1.0, phases[0]);
    }
    if (static_cast<int>(phases.size()) != degree) throw std::invalid_argument("qsp_response: phase count");
    const M2 R = reflection(x);
    M2 m = identity();
    for (double phi : phases) m = mul(mul(m, zrot(phi)), R);
    return m[0];
}

cplx qsp_response(const PhaseSequence& seq, double x) { return qsp_response(seq.phases, seq.degree, x); }

PhaseSequence qsp_phases(const poly::ChebyshevSeries& target, double tol) {
    if (target.parity == poly::Parity::none) throw std::invalid_argument("qsp_phases: target needs definite parity");
    if (target.coeffs.empty()) throw std::invalid_argument("qsp_phases: empty target");
    if (target.sup_bound && *target.sup_bound > 1.0 + 1e-12) {
        throw std::invalid_argument("qsp_phases: target sup exceeds 1");
    }
    int L = target.degree();
    const int want = target.parity == poly::Parity::odd ? 1 : 0;
    if (L % 2 != want) --L;
    if (L < 0) throw std::invalid_argument("qsp_phases: odd target of degree 0");

    PhaseSequence out;
    out.target_poly = target;
    out.degree = L;
    const std::span<const double> coeffs(target.coeffs.data(), static_cast<std::size_t>(L) + 1);

    if (L == 0) {
        const double c0 = coeffs[0];
        if (std::abs(c0) > 1.0 + 1e-12) throw std::invalid_argument("qsp_phases: |constant| > 1");
        out.phases = {std::acos(std::clamp(c0, -1.0, 1.0))};
        out.residual = std::abs(std::cos(out.phases[0]) - c0);
        return out;
    }

    const int n_red = L % 2 == 1 ? (L + 1) / 2 : L / 2 + 1;
    std::vector<double> xs(static_cast<std::size_t>(n_red));
    Eigen::VectorXd fx(n_red);
    for (int j = 0; j < n_red; ++j) {
        xs[j] = std::cos((2.0 * j + 1.0) * kPi / (4.0 * n_red));
        fx(j) = poly::clenshaw(coeffs, xs[j]);
    }

    std::vector<double> red(static_cast<std::size_t>(n_red), 0.0);
    red[0] = kPi / 4.0;
    Eigen::VectorXd F(n_red);
    Eigen::MatrixXd J(n_red, n_red);
    std::vector<double> grad;
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_red = red;
    int stalled = 0;
    for (int it = 0; it < 100; ++it) {
        const std::vector<double> full = full_phases(red, L);
        for (int j = 0; j < n_red; ++j) {
            F(j) = response_and_grad(full, n_red, xs[j], &grad) - fx(j);
            for (int m = 0; m < n_red; ++m) J(j, m) = grad[m];
        }
        const double err = max_abs(F);
        out.iterations = it;
        if (err < best) {
            stalled = 0;
            best = err;
            best_red = red;
        } else {
            ++stalled;
        }
        if (err < 1e-14 || stalled >= 5) break;
        const Eigen::VectorXd step = J.colPivHouseholderQr().solve(-F);
        if (!step.allFinite()) break;
        for (int m = 0; m < n_red; ++m) red[m] += step(m);
    }

    // Convert e^{i psi_0 Z} prod_k W e^{i psi_k Z} to the reflection form using
    // W = i e^{-i pi/4 Z} R e^{-i pi/4 Z}; diagonal phases at both ends and
    // the global i^L all land on the top-left entry, so they merge into phi_1.
    const std::vector<double> psi = full_phases(best_red, L);
    out.phases.resize(static_cast<std::size_t>(L));
    out.phases[0] = std::remainder(psi[0] + psi[L] + (L - 1) * kPi / 2.0, 2.0 * kPi);
    for (int k = 1; k < L; ++k) out.phases[k] = std::remainder(psi[k] - kPi / 2.0, 2.0 * kPi);

    const int n_check = std::max(2 * L, 16);
    double resid = 0.0;
    for (int j = 0; j < n_check; ++j) {
        const double x = std::cos((j + 0.5) * kPi / n_check);
        resid = std::max(resid, std::abs(qsp_response(out.phases, L, x).real() - poly::clenshaw(coeffs, x)));
    }
    out.residual = resid;
    if (!(resid <= tol)) {
        throw SolverError(fmt::format("qsp_phases: degree {} reached residual {:.3g} (tolerance {:.3g})", L, resid, tol),
                          resid);
    }
    return out;
}

}  // namespace eqsvt::sim
