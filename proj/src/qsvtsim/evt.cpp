#include "eqsvt/qsvtsim/evt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eqsvt::sim {

namespace {

// 2 x (even or odd part) of p at nominal degree L.
poly::ChebyshevSeries doubled_part(const poly::ChebyshevSeries& p, int parity_bit, int L, double sup) {
    poly::ChebyshevSeries s;
    s.parity = parity_bit ? poly::Parity::odd : poly::Parity::even;
    s.coeffs.assign(static_cast<std::size_t>(L) + 1, 0.0);
    for (int j = parity_bit; j <= L && j < static_cast<int>(p.coeffs.size()); j += 2) s.coeffs[j] = 2.0 * p.coeffs[j];
    s.sup_bound = std::min(1.0, 2.0 * sup);
    return s;
}

}  // namespace

BlockEncodingCircuit evt_circuit(const BlockEncodingCircuit& be, const poly::ChebyshevSeries& target, int r_qubit,
                                 int c_qubit, EvtInfo* info, double phase_tol) {
    const int D = target.degree();
    if (D < 1) throw std::invalid_argument("evt_circuit: target degree must be >= 1");
    double sup = 0.0;
    if (target.sup_bound) {
        sup = *target.sup_bound;
    } else {
        sup = poly::measured_sup_abs(target, poly::certification_grid(8192));
    }
    if (sup > 0.5 + 1e-9) throw std::invalid_argument("evt_circuit: target must satisfy |P| <= 1/2");

    if (r_qubit < 0) r_qubit = be.register_qubits();
    if (c_qubit < 0) c_qubit = std::max(r_qubit, be.register_qubits() - 1) + 1;
    if (r_qubit == c_qubit) throw std::invalid_argument("evt_circuit: r and c must differ");
    for (int q : be.system_qubits) {
        if (q == r_qubit || q == c_qubit) throw std::invalid_argument("evt_circuit: ancilla overlaps system");
    }
    for (int q : be.ancilla_qubits) {
        if (q == r_qubit || q == c_qubit) throw std::invalid_argument("evt_circuit: ancilla overlaps encoding");
    }

    // Branch c = 0 carries the even part, c = 1 the odd part; the branch whose
    // nominal degree is D owns the final, controlled application.
    const int L[2] = {D % 2 == 0 ? D : D - 1, D % 2 == 1 ? D : D - 1};
    const PhaseSequence ph[2] = {qsp_phases(doubled_part(target, 0, L[0], sup), phase_tol),
                                 qsp_phases(doubled_part(target, 1, L[1], sup), phase_tol)};
    const int top = D % 2;

    const std::uint64_t cbit = std::uint64_t{1} << c_qubit;
    const Cond anc_zero{be.ancilla_mask(), 0};
    auto rotation = [&](Circuit& circ, int s) {
        circ.flip(r_qubit, anc_zero);
        for (int b = 0; b < 2; ++b) {
            double phi = 0.0;
            if (s == 0 && L[b] == 0) {
                phi = ph[b].phases[0];
            } else if (s >= 1 && L[b] >= s) {
                phi = ph[b].phases[L[b] - s];
            } else {
                continue;
            }
            circ.single(r_qubit, rz_phase(phi), Cond{cbit, b ? cbit : 0});
        }
        circ.flip(r_qubit, anc_zero);
    };

    Circuit circ;
    circ.single(r_qubit, hadamard());
    circ.single(c_qubit, hadamard());
    if (L[0] == 0 || L[1] == 0) rotation(circ, 0);
    const Circuit fwd = be.circuit;
    const Circuit bwd = be.circuit.adjoint();
    for (int s = 1; s <= D; ++s) {
        const Circuit& step = s % 2 == 1 ? fwd : bwd;
        if (s == D) {
            circ.append(step.controlled(c_qubit, top == 1));
        } else {
            circ.append(step);
        }
        rotation(circ, s);
    }
    circ.single(r_qubit, hadamard());
    circ.single(c_qubit, hadamard());

    BlockEncodingCircuit out;
    out.n_system = be.n_system;
    out.n_ancilla = be.n_ancilla + 2;
    out.alpha_total = 1.0;
    out.epsilon_be = be.epsilon_be > 0.0 ? 4.0 * D * std::sqrt(be.epsilon_be / be.alpha_total) : 0.0;
    out.system_qubits = be.system_qubits;
    out.ancilla_qubits = be.ancilla_qubits;
    out.ancilla_qubits.push_back(r_qubit);
    out.ancilla_qubits.push_back(c_qubit);
    out.circuit = std::move(circ);
    if (info) {
        info->even = ph[0];
        info->odd = ph[1];
        info->degree = D;
        info->r_qubit = r_qubit;
        info->c_qubit = c_qubit;
    }
    return out;
}

}  // namespace eqsvt::sim
