#include "eqsvt/costmodel.hpp"
#include "eqsvt/qsvtsim/block_encoding.hpp"
#include "eqsvt/qsvtsim/kernels.hpp"
#include "eqsvt/qsvtsim/thermal.hpp"

#include <chrono>
#include <functional>
#include <vector>

#include <fmt/format.h>
#include <omp.h>

namespace {

using namespace eqsvt;
using Clock = std::chrono::steady_clock;

double seconds(const std::function<void()>& f, int reps) {
    f();
    const auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double>(Clock::now() - t0).count() / reps;
}

double max_diff(const sim::StateVector& a, const sim::StateVector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
    return m;
}

void row(const std::string& name, double ts, double to, double diff) {
    fmt::print("{:<28} {:>12.3e} {:>12.3e} {:>8.2f} {:>10.1e}\n", name, ts, to, ts / to, diff);
}

}  // namespace

int main() {
    fmt::print("threads={}\n", omp_get_max_threads());
    fmt::print("{:<28} {:>12} {:>12} {:>8} {:>10}\n", "kernel", "serial_s", "omp_s", "speedup", "max_diff");

    const int nq = 16;
    const sim::StateVector start = sim::StateVector::random(nq, 7);
    const sim::Mat2 h = sim::hadamard();
    {
        sim::StateVector a = start, b = start;
        const double ts = seconds([&] { for (int q = 0; q < nq; ++q) sim::serial::apply_1q(a.amps, q, h); }, 20);
        const double to = seconds([&] { for (int q = 0; q < nq; ++q) sim::omp::apply_1q(b.amps, q, h); }, 20);
        row("apply_1q x16 (16q)", ts, to, max_diff(a, b));
    }
    {
        sim::StateVector a = start, b = start;
        const sim::Cond c{0b1011, 0b0001};
        const double ts = seconds([&] { sim::serial::flip_if(a.amps, 9, c); }, 200);
        const double to = seconds([&] { sim::omp::flip_if(b.amps, 9, c); }, 200);
        row("flip_if (16q)", ts, to, max_diff(a, b));
    }
    {
        const Eigen::MatrixXcd U = sim::dilation_unitary(sim::random_hermitian(3, 5) / 20.0);
        const std::vector<int> qs = {0, 3, 6, 9};
        sim::StateVector a = start, b = start;
        const double ts = seconds([&] { sim::serial::apply_dense(a.amps, qs, U); }, 20);
        const double to = seconds([&] { sim::omp::apply_dense(b.amps, qs, U); }, 20);
        row("apply_dense 4q (16q)", ts, to, max_diff(a, b));
    }
    {
        const ens::SpectrumModel spec = ens::spectrum_free_spins(1000);
        const std::vector<int> ns = {1, 2, 3, 4, 5, 6, 7, 8};
        const std::vector<double> ds = cost::log_grid(0.05, 5.0, 81);
        std::vector<cost::ScanRow> rs, ro;
        const double ts = seconds([&] { rs = cost::serial::scan_grid(spec, 0.5, 0.1, ns, ds); }, 3);
        const double to = seconds([&] { ro = cost::omp::scan_grid(spec, 0.5, 0.1, ns, ds); }, 3);
        double diff = 0.0;
        for (std::size_t i = 0; i < rs.size(); ++i) diff = std::max(diff, std::abs(rs[i].log10_total - ro[i].log10_total));
        row("scan_grid N=1000 8x81", ts, to, diff);
    }
    return 0;
}
