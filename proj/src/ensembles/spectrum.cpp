#include "eqsvt/ensembles.hpp"

#include <Eigen/Eigenvalues>

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace eqsvt::ens {

namespace {

bool parse_double(const std::string& text, double& out) {
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

SpectrumModel spectrum_free_spins(int N) {
    if (N < 1) throw std::invalid_argument("spectrum_free_spins: N must be >= 1");
    SpectrumModel s;
    s.N = N;
    s.alpha = 1.0;
    s.levels.reserve(static_cast<std::size_t>(N) + 1);
    const double lgn = std::lgamma(N + 1.0);
    for (int k = 0; k <= N; ++k) {
        const double lm = lgn - std::lgamma(k + 1.0) - std::lgamma(N - k + 1.0);
        s.levels.push_back({2.0 * k / N - 1.0, lm});
    }
    return s;
}

SpectrumModel spectrum_dense(const Eigen::MatrixXcd& H, int N_sites, double alpha) {
    if (N_sites < 1) throw std::invalid_argument("spectrum_dense: N_sites must be >= 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("spectrum_dense: alpha must be > 0");
    if (H.rows() != H.cols() || H.rows() == 0) throw std::invalid_argument("spectrum_dense: H must be square");
    if ((H - H.adjoint()).norm() > 1e-10) throw std::invalid_argument("spectrum_dense: H is not Hermitian");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
    const double bound = alpha * N_sites;
    if (std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))) > bound * (1.0 + 1e-12)) {
        throw std::invalid_argument("spectrum_dense: ||H|| exceeds alpha * N_sites");
    }

    SpectrumModel s;
    s.N = N_sites;
    s.alpha = alpha;
    Eigen::Index i = 0;
    while (i < ev.size()) {
        Eigen::Index j = i + 1;
        while (j < ev.size() && ev(j) - ev(i) <= 1e-10) ++j;
        const double mean = ev.segment(i, j - i).mean();
        s.levels.push_back({mean / N_sites, std::log(static_cast<double>(j - i))});
        i = j;
    }
    return s;
}

void write_spectrum_csv(std::ostream& os, const SpectrumModel& spec) {
    os << "u,log_mult\n";
    for (const Level& lv : spec.levels) os << fmt::format("{:.17g},{:.17g}\n", lv.u, lv.log_mult);
}

SpectrumModel read_spectrum_csv(std::istream& is, int N, double alpha) {
    std::string line;
    if (!std::getline(is, line) || line != "u,log_mult") {
        throw std::invalid_argument("spectrum csv: expected header 'u,log_mult'");
    }
    SpectrumModel s;
    s.N = N;
    s.alpha = alpha;
    int row = 1;
    while (std::getline(is, line)) {
        ++row;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument(fmt::format("spectrum csv: row {} malformed", row));
        double u = 0.0;
        double lm = 0.0;
        if (!parse_double(line.substr(0, comma), u) || !parse_double(line.substr(comma + 1), lm)) {
            throw std::invalid_argument(fmt::format("spectrum csv: row {} is not numeric", row));
        }
        if (std::abs(u) > alpha * (1.0 + 1e-12)) {
            throw std::invalid_argument(fmt::format("spectrum csv: row {} has |u| > alpha", row));
        }
        s.levels.push_back({u, lm});
    }
    if (s.levels.empty()) throw std::invalid_argument("spectrum csv: no levels");
    return s;
}

}  // namespace eqsvt::ens
