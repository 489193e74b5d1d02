#pragma once

#include "eqsvt/polyapprox.hpp"
#include "eqsvt/qsvtsim/statevector.hpp"

#include <span>

namespace eqsvt::sim {

/// Phases (phi_1..phi_d) in the reflection convention: the target is
/// Re <0| prod_j e^{i phi_j Z} R(x) |0> with R(x) = [[x, s], [s, -x]],
/// s = sqrt(1 - x^2). A degree-0 target is a single rotation e^{i phi}.
struct PhaseSequence {
    std::vector<double> phases;
    poly::ChebyshevSeries target_poly;
    int degree = 0;
    double residual = 0.0;
    int iterations = 0;
};

/// Newton solve on symmetric phases. Throws SolverError if the reconstructed
/// polynomial misses the target by more than `tol` at the check nodes.
PhaseSequence qsp_phases(const poly::ChebyshevSeries& target, double tol = 1e-8);

/// <0| prod_j e^{i phi_j Z} R(x) |0>.
cplx qsp_response(std::span<const double> phases, int degree, double x);
cplx qsp_response(const PhaseSequence& seq, double x);

}  // namespace eqsvt::sim
