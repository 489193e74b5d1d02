#include "eqsvt/qsvtsim/statevector.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>
#include <stdexcept>

namespace eqsvt::sim {

StateVector::StateVector(int n) : n_qubits(n) {
    if (n < 0 || n > 30) throw std::invalid_argument("StateVector: qubit count out of range");
    amps.assign(std::size_t{1} << n, cplx{0.0, 0.0});
    amps[0] = 1.0;
}

StateVector StateVector::basis(int n, std::uint64_t index) {
    StateVector s(n);
    if (index >= s.dim()) throw std::out_of_range("StateVector::basis: index out of range");
    s.amps[0] = 0.0;
    s.amps[index] = 1.0;
    return s;
}

StateVector StateVector::random(int n, std::uint64_t seed) {
    StateVector s(n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    for (cplx& a : s.amps) a = {g(rng), g(rng)};
    const double nrm = s.norm();
    for (cplx& a : s.amps) a /= nrm;
    return s;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cplx& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

cplx StateVector::inner(const StateVector& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("StateVector::inner: dimension mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) s += std::conj(amps[i]) * other.amps[i];
    return s;
}

double phase_distance(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("phase_distance: dimension mismatch");
    // Align b to a by the phase of <b|a>, then sum directly; the 2 - 2|<a|b>|
    // shortcut loses half the digits for nearby states.
    const cplx ov = b.inner(a);
    const cplx ph = std::abs(ov) > 0.0 ? ov / std::abs(ov) : cplx(1.0);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a.amps[i] - ph * b.amps[i]);
    return std::sqrt(s);
}

Eigen::MatrixXcd partial_trace(const StateVector& psi, const std::vector<int>& keep) {
    std::uint64_t keep_mask = 0;
    for (int q : keep) {
        if (q < 0 || q >= psi.n_qubits) throw std::invalid_argument("partial_trace: qubit out of range");
        keep_mask |= std::uint64_t{1} << q;
    }
    std::vector<int> rest;
    for (int q = 0; q < psi.n_qubits; ++q) {
        if (!(keep_mask >> q & 1)) rest.push_back(q);
    }
    const Eigen::Index dk = Eigen::Index{1} << keep.size();
    const Eigen::Index dr = Eigen::Index{1} << rest.size();
    Eigen::MatrixXcd m(dk, dr);
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        Eigen::Index r = 0;
        Eigen::Index t = 0;
        for (std::size_t j = 0; j < keep.size(); ++j) r |= static_cast<Eigen::Index>(i >> keep[j] & 1) << j;
        for (std::size_t j = 0; j < rest.size(); ++j) t |= static_cast<Eigen::Index>(i >> rest[j] & 1) << j;
        m(r, t) = psi.amps[i];
    }
    return m * m.adjoint();
}

double trace_distance(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    Eigen::MatrixXcd d = rho - sigma;
    d = 0.5 * (d + d.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace eqsvt::sim
