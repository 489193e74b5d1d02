#include "eqsvt/qsvtsim/block_encoding.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace eqsvt::sim {

std::uint64_t BlockEncodingCircuit::ancilla_mask() const {
    std::uint64_t m = 0;
    for (int q : ancilla_qubits) m |= std::uint64_t{1} << q;
    return m;
}

int BlockEncodingCircuit::register_qubits() const {
    int hi = circuit.min_qubits();
    for (int q : system_qubits) hi = std::max(hi, q + 1);
    for (int q : ancilla_qubits) hi = std::max(hi, q + 1);
    return hi;
}

Eigen::MatrixXcd dilation_unitary(const Eigen::MatrixXcd& A) {
    const Eigen::Index n = A.rows();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
    const Eigen::VectorXd lam = es.eigenvalues();
    if (lam.cwiseAbs().maxCoeff() > 1.0 + 1e-10) throw std::invalid_argument("dilation_unitary: ||A|| > 1");
    Eigen::VectorXd s(n);
    for (Eigen::Index i = 0; i < n; ++i) s(i) = std::sqrt(std::max(0.0, 1.0 - lam(i) * lam(i)));
    const Eigen::MatrixXcd& V = es.eigenvectors();
    const Eigen::MatrixXcd B = V * s.asDiagonal() * V.adjoint();
    Eigen::MatrixXcd U(2 * n, 2 * n);
    U.topLeftCorner(n, n) = A;
    U.topRightCorner(n, n) = B;
    U.bottomLeftCorner(n, n) = B;
    U.bottomRightCorner(n, n) = -A;
    return U;
}

BlockEncodingCircuit make_block_encoding(const Eigen::MatrixXcd& H, double alpha_total,
                                         std::vector<int> system_qubits, int ancilla_qubit) {
    if (H.rows() != H.cols() || H.rows() < 1) throw std::invalid_argument("make_block_encoding: H must be square");
    const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(H.rows()))));
    if ((Eigen::Index{1} << n) != H.rows()) throw std::invalid_argument("make_block_encoding: dimension is not 2^n");
    if (static_cast<int>(system_qubits.size()) != n) throw std::invalid_argument("make_block_encoding: qubit count");
    if (!(alpha_total > 0.0)) throw std::invalid_argument("make_block_encoding: alpha must be > 0");
    if ((H - H.adjoint()).norm() > 1e-10) throw std::invalid_argument("make_block_encoding: H is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().cwiseAbs().maxCoeff() > alpha_total * (1.0 + 1e-12)) {
        throw std::invalid_argument("make_block_encoding: ||H|| exceeds alpha");
    }
    Eigen::MatrixXcd A = H / alpha_total;
    A = 0.5 * (A + A.adjoint()).eval();

    BlockEncodingCircuit be;
    be.n_system = n;
    be.n_ancilla = 1;
    be.alpha_total = alpha_total;
    be.system_qubits = system_qubits;
    be.ancilla_qubits = {ancilla_qubit};
    std::vector<int> qubits = system_qubits;
    qubits.push_back(ancilla_qubit);
    auto U = std::make_shared<const Eigen::MatrixXcd>(dilation_unitary(A));
    // U is Hermitian, so it is its own adjoint.
    be.circuit.dense(U, U, std::move(qubits), 1);
    return be;
}

BlockEncodingCircuit make_block_encoding(const Eigen::MatrixXcd& H, double alpha_total) {
    const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(std::max<Eigen::Index>(H.rows(), 1)))));
    std::vector<int> sys(static_cast<std::size_t>(n));
    std::iota(sys.begin(), sys.end(), 0);
    return make_block_encoding(H, alpha_total, std::move(sys), n);
}

Eigen::MatrixXcd extract_block(const BlockEncodingCircuit& be) {
    const int nq = be.register_qubits();
    const Eigen::Index dim = Eigen::Index{1} << be.n_system;
    Eigen::MatrixXcd block(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        std::uint64_t idx = 0;
        for (int b = 0; b < be.n_system; ++b) {
            if (j >> b & 1) idx |= std::uint64_t{1} << be.system_qubits[b];
        }
        StateVector psi = StateVector::basis(nq, idx);
        be.circuit.apply(psi);
        for (Eigen::Index i = 0; i < dim; ++i) {
            std::uint64_t out = 0;
            for (int b = 0; b < be.n_system; ++b) {
                if (i >> b & 1) out |= std::uint64_t{1} << be.system_qubits[b];
            }
            block(i, j) = psi.amps[out];
        }
    }
    return block;
}

}  // namespace eqsvt::sim
