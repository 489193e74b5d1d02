#pragma once

#include "eqsvt/qsvtsim/kernels.hpp"

#include <memory>
#include <vector>

namespace eqsvt::sim {

enum class Backend { serial, omp };

/// U_H applications seen by an executing circuit.
struct QueryCount {
    long long uncontrolled = 0;
    long long controlled = 0;
    long long total() const { return uncontrolled + controlled; }
};

struct Op {
    enum class Kind { single, flip, dense };
    Kind kind = Kind::single;
    int target = -1;
    Mat2 m{};
    Cond cond;
    /// Dense unitary and its adjoint; `dagger` selects which one acts.
    std::shared_ptr<const Eigen::MatrixXcd> dense;
    std::shared_ptr<const Eigen::MatrixXcd> dense_adj;
    bool dagger = false;
    std::vector<int> qubits;
    /// U_H queries this op stands for (0 for ordinary gates). A conditioned
    /// op counts all of them as controlled.
    long long queries = 0;
    long long controlled_queries = 0;
};

/// Ordered gate list; ops apply front to back.
class Circuit {
public:
    std::vector<Op> ops;

    void single(int q, const Mat2& m, Cond c = {});
    void flip(int target, Cond c);
    /// `u_adj` may be null, in which case the adjoint is computed here.
    void dense(std::shared_ptr<const Eigen::MatrixXcd> u, std::shared_ptr<const Eigen::MatrixXcd> u_adj,
               std::vector<int> qubits, long long queries = 0, long long controlled_queries = 0, Cond c = {});
    void append(const Circuit& other);

    Circuit adjoint() const;
    /// Every op additionally conditioned on qubit q having value `val`.
    Circuit controlled(int q, bool val = true) const;

    QueryCount static_queries() const;
    /// Highest qubit index touched plus one.
    int min_qubits() const;

    void apply(StateVector& psi, QueryCount* counter = nullptr, Backend backend = Backend::omp) const;
};

Mat2 hadamard();
Mat2 pauli_x();
/// e^{-i phi Z}
Mat2 rz_phase(double phi);
Mat2 dagger(const Mat2& m);

/// Largest || U^dagger U psi - psi || over random probe states.
double unitarity_defect(const Circuit& c, int n_qubits, int probes = 20, std::uint64_t seed = 7);

}  // namespace eqsvt::sim
