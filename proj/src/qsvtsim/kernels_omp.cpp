#include "eqsvt/qsvtsim/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqsvt::sim::omp {

namespace {

inline std::uint64_t insert_zero(std::uint64_t i, int q) {
    const std::uint64_t low = i & ((std::uint64_t{1} << q) - 1);
    return ((i >> q) << (q + 1)) | low;
}

// Below this many amplitudes the fork/join overhead dominates.
constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

}  // namespace

void apply_1q(std::span<cplx> a, int q, const Mat2& m, Cond c) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (c.mask & bit) throw std::invalid_argument("apply_1q: target qubit is also a control");
    const long long half = static_cast<long long>(a.size() / 2);
#pragma omp parallel for schedule(static) if (a.size() >= kParallelThreshold)
    for (long long i = 0; i < half; ++i) {
        const std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(i), q);
        if ((i0 & c.mask) != c.val) continue;
        const std::uint64_t i1 = i0 | bit;
        const cplx x = a[i0];
        const cplx y = a[i1];
        a[i0] = m[0] * x + m[1] * y;
        a[i1] = m[2] * x + m[3] * y;
    }
}

void flip_if(std::span<cplx> a, int target, Cond c) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    if (c.mask & bit) throw std::invalid_argument("flip_if: target qubit is also a control");
    const long long half = static_cast<long long>(a.size() / 2);
#pragma omp parallel for schedule(static) if (a.size() >= kParallelThreshold)
    for (long long i = 0; i < half; ++i) {
        const std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(i), target);
        if ((i0 & c.mask) != c.val) continue;
        std::swap(a[i0], a[i0 | bit]);
    }
}

void apply_dense(std::span<cplx> a, std::span<const int> qubits, const Eigen::MatrixXcd& m, Cond c) {
    const std::size_t k = qubits.size();
    const Eigen::Index dim = Eigen::Index{1} << k;
    if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("apply_dense: matrix size mismatch");
    std::vector<int> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint64_t> offset(static_cast<std::size_t>(dim), 0);
    std::uint64_t qmask = 0;
    for (std::size_t j = 0; j < k; ++j) qmask |= std::uint64_t{1} << qubits[j];
    if (c.mask & qmask) throw std::invalid_argument("apply_dense: control overlaps target qubits");
    for (Eigen::Index l = 0; l < dim; ++l) {
        for (std::size_t j = 0; j < k; ++j) {
            if (l >> j & 1) offset[l] |= std::uint64_t{1} << qubits[j];
        }
    }
    const long long blocks = static_cast<long long>(a.size() >> k);
#pragma omp parallel if (a.size() >= kParallelThreshold)
    {
        Eigen::VectorXcd v(dim);
        Eigen::VectorXcd w(dim);
#pragma omp for schedule(static)
        for (long long b = 0; b < blocks; ++b) {
            std::uint64_t base = static_cast<std::uint64_t>(b);
            for (int q : sorted) base = insert_zero(base, q);
            if ((base & c.mask) != c.val) continue;
            for (Eigen::Index l = 0; l < dim; ++l) v(l) = a[base | offset[l]];
            w.noalias() = m * v;
            for (Eigen::Index l = 0; l < dim; ++l) a[base | offset[l]] = w(l);
        }
    }
}

}  // namespace eqsvt::sim::omp
