#pragma once

// Statevector gate kernels. `serial` is the reference implementation,
// `omp` parallelizes over amplitude blocks; both must agree bit for bit up
// to floating-point summation order.

#include "eqsvt/qsvtsim/statevector.hpp"

#include <array>
#include <span>

namespace eqsvt::sim {

/// Row-major 2x2 matrix.
using Mat2 = std::array<cplx, 4>;

/// Gate applies only to basis states with (index & mask) == val.
struct Cond {
    std::uint64_t mask = 0;
    std::uint64_t val = 0;
};

namespace serial {
void apply_1q(std::span<cplx> a, int q, const Mat2& m, Cond c = {});
/// X on `target` where the condition holds (multi-controlled NOT).
void flip_if(std::span<cplx> a, int target, Cond c);
/// Dense unitary on `qubits` (bit j of the matrix index is qubits[j]).
void apply_dense(std::span<cplx> a, std::span<const int> qubits, const Eigen::MatrixXcd& m, Cond c = {});
}  // namespace serial

namespace omp {
void apply_1q(std::span<cplx> a, int q, const Mat2& m, Cond c = {});
void flip_if(std::span<cplx> a, int target, Cond c);
void apply_dense(std::span<cplx> a, std::span<const int> qubits, const Eigen::MatrixXcd& m, Cond c = {});
}  // namespace omp

}  // namespace eqsvt::sim
