#pragma once

#include "eqsvt/qsvtsim/block_encoding.hpp"
#include "eqsvt/qsvtsim/qsp.hpp"

#include <functional>

namespace eqsvt::sim {

struct EvtInfo {
    PhaseSequence even;  // phases for P(x) + P(-x)
    PhaseSequence odd;   // phases for P(x) - P(-x)
    int degree = 0;
    int r_qubit = -1;
    int c_qubit = -1;
};

/// Encoding of P(A/alpha) for a real polynomial of any parity with
/// |P| <= 1/2, as the average of four phase-modulated sequences selected by
/// the rotation ancilla r and the parity ancilla c. Uses degree - 1 plain
/// applications of be (or its adjoint) and one controlled application.
/// Ancillas default to the two qubits after the encoding's register.
BlockEncodingCircuit evt_circuit(const BlockEncodingCircuit& be, const poly::ChebyshevSeries& target,
                                 int r_qubit = -1, int c_qubit = -1, EvtInfo* info = nullptr,
                                 double phase_tol = 1e-8);

/// Singular value transformation by SVD: odd maps A = W S V^dagger to
/// W f(S) V^dagger, even to V f(S) V^dagger over the full right basis.
Eigen::MatrixXcd svt_oracle(const Eigen::MatrixXcd& A, const std::function<double(double)>& f, poly::Parity parity);

/// P(A) for Hermitian A, as the sum of the even and odd SVT of P's parts.
Eigen::MatrixXcd evt_oracle(const Eigen::MatrixXcd& A, const poly::ChebyshevSeries& p);

}  // namespace eqsvt::sim
