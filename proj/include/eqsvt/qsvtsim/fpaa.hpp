#pragma once

#include "eqsvt/qsvtsim/qsp.hpp"
#include "eqsvt/qsvtsim/circuit.hpp"

#include <stdexcept>

namespace eqsvt::sim {

/// Amplification problem: boost Pi_good U |psi_0> to unit norm, where
/// |psi_0> = prep |0...0> on the qubits of `input_mask`.
struct FpaaProblem {
    Circuit U;
    Circuit prep;
    /// Pi_good: every qubit of good_mask is zero.
    std::uint64_t good_mask = 0;
    /// Qubits making up |psi_0>; every other qubit except `flag` must be zero.
    std::uint64_t input_mask = 0;
    /// Ancilla for the projector rotations; must start and end in |0>.
    int flag = -1;
};

/// Thrown when the planted overlap is smaller than the promised delta.
class ContractViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FpaaInfo {
    PhaseSequence phases;
    int d = 0;
    double k = 0.0;
    long long t = 0;
    double measured_overlap = 0.0;
};

/// Fixed-point amplification with the sign approximation of (delta, eps):
/// d applications of U or U^dagger and d + 1 flag flips per projector side.
/// Throws ContractViolation if ||Pi_good U |psi_0>|| < delta.
Circuit fpaa(const FpaaProblem& problem, double delta, double eps, FpaaInfo* info = nullptr);

/// Same, with phases already solved for a given odd series (used when the
/// caller has the sign series at hand).
Circuit fpaa_from_phases(const FpaaProblem& problem, const PhaseSequence& phases);

/// ||Pi_good U |psi_0>|| by direct simulation (no queries counted).
double fpaa_overlap(const FpaaProblem& problem, int n_qubits);

}  // namespace eqsvt::sim
