#include "eqsvt/qsvtsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eqsvt::sim {

Mat2 hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return {h, h, h, -h};
}

Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }

Mat2 rz_phase(double phi) { return {std::polar(1.0, -phi), 0.0, 0.0, std::polar(1.0, phi)}; }

Mat2 dagger(const Mat2& m) { return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}; }

void Circuit::single(int q, const Mat2& m, Cond c) {
    Op op;
    op.kind = Op::Kind::single;
    op.target = q;
    op.m = m;
    op.cond = c;
    ops.push_back(std::move(op));
}

void Circuit::flip(int target, Cond c) {
    Op op;
    op.kind = Op::Kind::flip;
    op.target = target;
    op.cond = c;
    ops.push_back(std::move(op));
}

void Circuit::dense(std::shared_ptr<const Eigen::MatrixXcd> u, std::shared_ptr<const Eigen::MatrixXcd> u_adj,
                    std::vector<int> qubits, long long queries, long long controlled_queries, Cond c) {
    if (!u) throw std::invalid_argument("Circuit::dense: null matrix");
    if (!u_adj) u_adj = std::make_shared<const Eigen::MatrixXcd>(u->adjoint());
    Op op;
    op.kind = Op::Kind::dense;
    op.dense = std::move(u);
    op.dense_adj = std::move(u_adj);
    op.qubits = std::move(qubits);
    op.queries = queries;
    op.controlled_queries = controlled_queries;
    op.cond = c;
    ops.push_back(std::move(op));
}

void Circuit::append(const Circuit& other) { ops.insert(ops.end(), other.ops.begin(), other.ops.end()); }

Circuit Circuit::adjoint() const {
    Circuit out;
    out.ops.reserve(ops.size());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        Op op = *it;
        if (op.kind == Op::Kind::single) op.m = sim::dagger(op.m);
        if (op.kind == Op::Kind::dense) op.dagger = !op.dagger;
        out.ops.push_back(std::move(op));
    }
    return out;
}

Circuit Circuit::controlled(int q, bool val) const {
    const std::uint64_t bit = std::uint64_t{1} << q;
    Circuit out = *this;
    for (Op& op : out.ops) {
        if (op.target == q || std::find(op.qubits.begin(), op.qubits.end(), q) != op.qubits.end()) {
            throw std::invalid_argument("Circuit::controlled: control qubit is acted on by the circuit");
        }
        if ((op.cond.mask & bit) && ((op.cond.val & bit) != 0) != val) {
            throw std::invalid_argument("Circuit::controlled: conflicting condition on control qubit");
        }
        op.cond.mask |= bit;
        if (val) op.cond.val |= bit;
    }
    return out;
}

QueryCount Circuit::static_queries() const {
    QueryCount qc;
    for (const Op& op : ops) {
        if (op.cond.mask != 0) {
            qc.controlled += op.queries + op.controlled_queries;
        } else {
            qc.uncontrolled += op.queries;
            qc.controlled += op.controlled_queries;
        }
    }
    return qc;
}

int Circuit::min_qubits() const {
    int hi = 0;
    for (const Op& op : ops) {
        hi = std::max(hi, op.target + 1);
        for (int q : op.qubits) hi = std::max(hi, q + 1);
        for (int q = 0; q < 64; ++q) {
            if (op.cond.mask >> q & 1) hi = std::max(hi, q + 1);
        }
    }
    return hi;
}

void Circuit::apply(StateVector& psi, QueryCount* counter, Backend backend) const {
    if (min_qubits() > psi.n_qubits) throw std::invalid_argument("Circuit::apply: register too small");
    std::span<cplx> a(psi.amps);
    for (const Op& op : ops) {
        switch (op.kind) {
            case Op::Kind::single:
                if (backend == Backend::serial) serial::apply_1q(a, op.target, op.m, op.cond);
                else omp::apply_1q(a, op.target, op.m, op.cond);
                break;
            case Op::Kind::flip:
                if (backend == Backend::serial) serial::flip_if(a, op.target, op.cond);
                else omp::flip_if(a, op.target, op.cond);
                break;
            case Op::Kind::dense: {
                const Eigen::MatrixXcd& m = op.dagger ? *op.dense_adj : *op.dense;
                if (backend == Backend::serial) serial::apply_dense(a, op.qubits, m, op.cond);
                else omp::apply_dense(a, op.qubits, m, op.cond);
                break;
            }
        }
        if (counter && (op.queries || op.controlled_queries)) {
            if (op.cond.mask != 0) {
                counter->controlled += op.queries + op.controlled_queries;
            } else {
                counter->uncontrolled += op.queries;
                counter->controlled += op.controlled_queries;
            }
        }
    }
}

double unitarity_defect(const Circuit& c, int n_qubits, int probes, std::uint64_t seed) {
    const Circuit inv = c.adjoint();
    double worst = 0.0;
    for (int p = 0; p < probes; ++p) {
        const StateVector psi = StateVector::random(n_qubits, seed + static_cast<std::uint64_t>(p));
        StateVector phi = psi;
        c.apply(phi);
        worst = std::max(worst, std::abs(phi.norm() - 1.0));
        inv.apply(phi);
        double d = 0.0;
        for (std::size_t i = 0; i < psi.dim(); ++i) d += std::norm(phi.amps[i] - psi.amps[i]);
        worst = std::max(worst, std::sqrt(d));
    }
    return worst;
}

}  // namespace eqsvt::sim
