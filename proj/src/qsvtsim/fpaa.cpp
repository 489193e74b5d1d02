#include "eqsvt/qsvtsim/fpaa.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace eqsvt::sim {

namespace {

int register_size(const FpaaProblem& p) {
    int n = std::max({p.U.min_qubits(), p.prep.min_qubits(), p.flag + 1});
    for (int q = 0; q < 64; ++q) {
        if ((p.good_mask | p.input_mask) >> q & 1) n = std::max(n, q + 1);
    }
    return n;
}

// e^{i phi (2 Pi - I)} via flag flip on Pi, e^{-i phi Z} on the flag, unflip.
void projector_rotation(Circuit& c, const Circuit& flip_on_pi, double phi, int flag) {
    c.append(flip_on_pi);
    c.single(flag, rz_phase(phi));
    c.append(flip_on_pi);
}

}  // namespace

double fpaa_overlap(const FpaaProblem& problem, int n_qubits) {
    StateVector psi(n_qubits);
    problem.prep.apply(psi);
    problem.U.apply(psi);
    double p = 0.0;
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        if ((i & problem.good_mask) == 0) p += std::norm(psi.amps[i]);
    }
    return std::sqrt(p);
}

Circuit fpaa_from_phases(const FpaaProblem& problem, const PhaseSequence& phases) {
    if (phases.target_poly.parity != poly::Parity::odd || phases.degree % 2 != 1) {
        throw std::invalid_argument("fpaa: phases must come from an odd polynomial");
    }
    if (problem.flag < 0) throw std::invalid_argument("fpaa: flag qubit not set");
    const std::uint64_t fbit = std::uint64_t{1} << problem.flag;
    if ((problem.good_mask | problem.input_mask) & fbit) throw std::invalid_argument("fpaa: flag overlaps registers");

    Circuit flip_good;
    flip_good.flip(problem.flag, Cond{problem.good_mask, 0});
    // C_{Pi_in}NOT = prep . (flip if all input qubits are zero) . prep^dagger
    Circuit flip_in = problem.prep.adjoint();
    flip_in.flip(problem.flag, Cond{problem.input_mask, 0});
    flip_in.append(problem.prep);

    const Circuit fwd = problem.U;
    const Circuit bwd = problem.U.adjoint();
    const int d = phases.degree;
    Circuit c;
    for (int s = 1; s <= d; ++s) {
        const bool odd = s % 2 == 1;
        c.append(odd ? fwd : bwd);
        projector_rotation(c, odd ? flip_good : flip_in, phases.phases[d - s], problem.flag);
    }
    return c;
}

Circuit fpaa(const FpaaProblem& problem, double delta, double eps, FpaaInfo* info) {
    const poly::SignPolySpec sp = poly::sign_poly(delta, eps);
    const double overlap = fpaa_overlap(problem, register_size(problem));
    if (overlap < delta * (1.0 - 1e-12)) {
        throw ContractViolation(fmt::format("fpaa: overlap {:.6g} is below the promised delta {:.6g}", overlap, delta));
    }
    PhaseSequence ph = qsp_phases(sp.series);
    Circuit c = fpaa_from_phases(problem, ph);
    if (info) {
        info->phases = std::move(ph);
        info->d = sp.d;
        info->k = sp.k;
        info->t = sp.t;
        info->measured_overlap = overlap;
    }
    return c;
}

}  // namespace eqsvt::sim
