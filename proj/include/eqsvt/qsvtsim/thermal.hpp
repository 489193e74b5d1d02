#pragma once

#include "eqsvt/ensembles.hpp"
#include "eqsvt/qsvtsim/circuit.hpp"

#include <string>

namespace eqsvt::sim {

struct ThermalOptions {
    /// Largest composed degree d_eta * d_exp run as an actual EVT circuit;
    /// above it the filter is applied as a dense oracle with counted queries.
    int degree_cap = 60;
    bool force_oracle = false;
    double phase_tol = 1e-8;
};

struct ThermalDiagnostics {
    std::string mode;  // "circuit" or "oracle"
    long long queries_used = 0;
    long long queries_expected = 0;
    int d_eta = 0;
    long long d_exp = 0;
    long long d_aa = 0;
    long long composed_degree = 0;
    double eps = 0.0;
    double eps_exp = 0.0;
    double eps_aa = 0.0;
    double delta = 0.0;
    double zeta_log = 0.0;
    double overlap = 0.0;               // ||Pi (V x I)|0, Psi_0>||
    double success_probability = 0.0;   // overlap^2, expected near zeta/4
    double measured_error = 0.0;        // phase-quotiented distance to the reference
    double branch_fidelity = 0.0;       // reference vs the normalized ancilla-zero branch
    double trace_distance = 0.0;        // reduced system state vs rho^eta
    double eps_h_bound = 0.0;           // always 0: exact block-encodings only

    /// key=value lines, one per field.
    std::string to_keyvalue() const;
};

struct ThermalResult {
    StateVector state;
    ThermalDiagnostics diag;
    Eigen::MatrixXcd reduced;  // system state after tracing out copy and ancillas
    Eigen::MatrixXcd target;   // rho^eta
};

/// Register layout for N system qubits and a one-ancilla U_H:
/// system [0, N), copy [N, 2N), U_H ancilla 2N, r 2N+1, c 2N+2, flag 2N+3.
inline int thermal_register_qubits(int N) { return 2 * N + 4; }

/// Prepares the purification of rho^eta ~ exp(-N eta(H/N)) for the
/// N-qubit Hamiltonian H with ||H|| <= alpha N. Throws std::invalid_argument
/// for N > 6 or non-polynomial eta.
ThermalResult prepare_thermal(const Eigen::MatrixXcd& H, const ens::EtaSpec& eta, double eps, double alpha = 1.0,
                              const ThermalOptions& opts = {});

/// rho^eta by eigendecomposition.
Eigen::MatrixXcd ensemble_density(const Eigen::MatrixXcd& H, const ens::EtaSpec& eta);

/// (sqrt(rho^eta) x I)|Psi_0>, normalized, on 2N qubits (system low).
StateVector purified_reference(const Eigen::MatrixXcd& H, const ens::EtaSpec& eta);

/// sum_n Z_n on N qubits.
Eigen::MatrixXcd free_spin_hamiltonian(int N);

/// Random Hermitian matrix with Gaussian entries.
Eigen::MatrixXcd random_hermitian(int n_qubits, std::uint64_t seed);

}  // namespace eqsvt::sim
