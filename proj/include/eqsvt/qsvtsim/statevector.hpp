#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace eqsvt::sim {

using cplx = std::complex<double>;

/// Dense amplitudes over n qubits; qubit q is bit q of the index.
struct StateVector {
    int n_qubits = 0;
    std::vector<cplx> amps;

    StateVector() = default;
    /// |0...0> on n qubits.
    explicit StateVector(int n);
    static StateVector basis(int n, std::uint64_t index);
    static StateVector random(int n, std::uint64_t seed);

    std::size_t dim() const { return amps.size(); }
    double norm() const;
    cplx inner(const StateVector& other) const;  // <this|other>
};

/// min over global phases of || |a> - e^{i theta}|b> || for unit vectors.
double phase_distance(const StateVector& a, const StateVector& b);

/// Reduced density matrix on `keep` (bit j of the row index is keep[j]).
Eigen::MatrixXcd partial_trace(const StateVector& psi, const std::vector<int>& keep);

/// (1/2) || rho - sigma ||_1 for Hermitian inputs.
double trace_distance(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);

}  // namespace eqsvt::sim
