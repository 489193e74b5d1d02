#pragma once

#include "eqsvt/qsvtsim/circuit.hpp"

namespace eqsvt::sim {

/// Unitary U on ancilla + system qubits whose ancilla-zero block is
/// A / alpha_total (up to epsilon_be).
struct BlockEncodingCircuit {
    int n_system = 0;
    int n_ancilla = 0;
    double alpha_total = 1.0;
    double epsilon_be = 0.0;
    std::vector<int> system_qubits;
    std::vector<int> ancilla_qubits;
    Circuit circuit;

    std::uint64_t ancilla_mask() const;
    /// Smallest register holding every qubit the encoding touches.
    int register_qubits() const;
};

/// [[A, sqrt(I - A^2)], [sqrt(I - A^2), -A]] for Hermitian A with ||A|| <= 1;
/// row index = ancilla * dim(A) + system.
Eigen::MatrixXcd dilation_unitary(const Eigen::MatrixXcd& A);

/// One-ancilla encoding of H / alpha_total. System on qubits [0, n), ancilla
/// on qubit n unless placed explicitly. Throws std::invalid_argument for
/// non-Hermitian H or ||H|| > alpha_total.
BlockEncodingCircuit make_block_encoding(const Eigen::MatrixXcd& H, double alpha_total);
BlockEncodingCircuit make_block_encoding(const Eigen::MatrixXcd& H, double alpha_total,
                                         std::vector<int> system_qubits, int ancilla_qubit);

/// <0|_anc U |0>_anc as a matrix on the system register, by simulation.
Eigen::MatrixXcd extract_block(const BlockEncodingCircuit& be);

}  // namespace eqsvt::sim
