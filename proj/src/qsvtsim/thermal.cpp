#include "eqsvt/costmodel.hpp"
#include "eqsvt/polyapprox.hpp"
#include "eqsvt/qsvtsim/block_encoding.hpp"
#include "eqsvt/qsvtsim/evt.hpp"
#include "eqsvt/qsvtsim/fpaa.hpp"
#include "eqsvt/qsvtsim/thermal.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace eqsvt::sim {

namespace {

int qubits_of(const Eigen::MatrixXcd& H) {
    if (H.rows() != H.cols() || H.rows() < 2) throw std::invalid_argument("thermal: H must be square, dim >= 2");
    const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(H.rows()))));
    if ((Eigen::Index{1} << n) != H.rows()) throw std::invalid_argument("thermal: dimension is not 2^N");
    return n;
}

// Eigen-decomposed H with per-level weights exp(-N (eta(u) - eta_lo)).
struct EtaWeights {
    Eigen::MatrixXcd vecs;
    Eigen::VectorXd w;
};

EtaWeights eta_weights(const Eigen::MatrixXcd& H, const ens::EtaSpec& eta) {
    const int N = qubits_of(H);
    if ((H - H.adjoint()).norm() > 1e-10) throw std::invalid_argument("thermal: H is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    const Eigen::VectorXd& lam = es.eigenvalues();
    Eigen::VectorXd e(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) e(i) = N * eta(lam(i) / N);
    const double lo = e.minCoeff();
    EtaWeights out;
    out.vecs = es.eigenvectors();
    out.w = (-(e.array() - lo)).exp();
    return out;
}

Circuit step1_prep(int N) {
    Circuit c;
    for (int i = 0; i < N; ++i) {
        c.single(i, hadamard());
        const std::uint64_t sbit = std::uint64_t{1} << i;
        c.flip(N + i, Cond{sbit, sbit});
    }
    return c;
}

}  // namespace

std::string ThermalDiagnostics::to_keyvalue() const {
    std::ostringstream os;
    os << fmt::format("mode={}\n", mode);
    os << fmt::format("queries_used={}\n", queries_used);
    os << fmt::format("queries_expected={}\n", queries_expected);
    os << fmt::format("d_eta={}\nd_exp={}\nd_AA={}\ncomposed_degree={}\n", d_eta, d_exp, d_aa, composed_degree);
    os << fmt::format("eps={:.17g}\neps_exp={:.17g}\neps_AA={:.17g}\n", eps, eps_exp, eps_aa);
    os << fmt::format("delta={:.17g}\nzeta_log={:.17g}\n", delta, zeta_log);
    os << fmt::format("overlap={:.17g}\nsuccess_probability={:.17g}\n", overlap, success_probability);
    os << fmt::format("branch_fidelity={:.17g}\n", branch_fidelity);
    os << fmt::format("measured_error={:.17g}\ntrace_distance={:.17g}\neps_H_bound={:.17g}\n", measured_error,
                      trace_distance, eps_h_bound);
    return os.str();
}

Eigen::MatrixXcd free_spin_hamiltonian(int N) {
    if (N < 1 || N > 12) throw std::invalid_argument("free_spin_hamiltonian: N out of range");
    const Eigen::Index dim = Eigen::Index{1} << N;
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        double e = 0.0;
        for (int q = 0; q < N; ++q) e += (i >> q & 1) ? -1.0 : 1.0;
        H(i, i) = e;
    }
    return H;
}

Eigen::MatrixXcd random_hermitian(int n_qubits, std::uint64_t seed) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd M(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) M(i, j) = {g(rng), g(rng)};
    }
    return 0.5 * (M + M.adjoint());
}

Eigen::MatrixXcd ensemble_density(const Eigen::MatrixXcd& H, const ens::EtaSpec& eta) {
    const EtaWeights ew = eta_weights(H, eta);
    const Eigen::VectorXd p = ew.w / ew.w.sum();
    return ew.vecs * p.asDiagonal() * ew.vecs.adjoint();
}

StateVector purified_reference(const Eigen::MatrixXcd& H, const ens::EtaSpec& eta) {
    const int N = qubits_of(H);
    const EtaWeights ew = eta_weights(H, eta);
    const Eigen::VectorXd sq = (ew.w / ew.w.sum()).cwiseSqrt();
    const Eigen::MatrixXcd root = ew.vecs * sq.asDiagonal() * ew.vecs.adjoint();
    // (sqrt(rho) x I) sum_j |j>|j> has amplitude sqrt(rho)_{s j} at |s>|j>.
    StateVector psi(2 * N);
    const Eigen::Index dim = H.rows();
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index s = 0; s < dim; ++s) psi.amps[static_cast<std::size_t>(s | (j << N))] = root(s, j);
    }
    return psi;
}

ThermalResult prepare_thermal(const Eigen::MatrixXcd& H, const ens::EtaSpec& eta, double eps, double alpha,
                              const ThermalOptions& opts) {
    const int N = qubits_of(H);
    if (N > 6) throw std::invalid_argument("prepare_thermal: at most 6 system qubits");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("prepare_thermal: eps must lie in (0, 1)");
    if (!eta.is_polynomial()) throw std::invalid_argument("prepare_thermal: eta must be a polynomial");

    const ens::SpectrumModel spec = ens::spectrum_dense(H, N, alpha);
    const ens::ThermoPoint tp = ens::thermo_point(spec, eta);
    const cost::QueryCostBreakdown cb = cost::total_queries(spec, eta, eps);
    if (!cb.d_exp.exact || !cb.d_aa.exact) throw std::invalid_argument("prepare_thermal: counts too large to simulate");

    ThermalResult res;
    ThermalDiagnostics& dg = res.diag;
    dg.d_eta = cb.d_eta;
    dg.d_exp = static_cast<long long>(*cb.d_exp.exact);
    dg.d_aa = static_cast<long long>(*cb.d_aa.exact);
    dg.composed_degree = dg.d_eta * dg.d_exp;
    dg.queries_expected = dg.composed_degree * dg.d_aa;
    dg.eps = eps;
    dg.eps_exp = cb.eps_exp;
    dg.eps_aa = cb.eps_aa;
    dg.delta = cb.delta_aa;
    dg.zeta_log = tp.zeta_log;

    // Step 2 filter P(x) = p_exp(eta~(x)) / 2 on x = H/(alpha N).
    const double osc = tp.eta_max - tp.eta_min;
    const double lambda = N * osc / 4.0;
    poly::ChebyshevSeries p_exp;
    if (osc > 0.0) {
        p_exp = poly::exp_poly(lambda, cb.eps_exp);
        if (p_exp.degree() != dg.d_exp) throw std::logic_error("prepare_thermal: exp degree disagrees with cost model");
    } else {
        // lambda -> 0 limit, kept at the nominal degree so the query count matches.
        p_exp.coeffs.assign(static_cast<std::size_t>(dg.d_exp) + 1, 0.0);
        p_exp.coeffs[0] = 1.0;
        p_exp.sup_bound = 1.0;
    }
    const double p_sup = std::min(1.0, p_exp.sup_bound.value_or(1.0));
    auto filter = [&](double x) {
        if (osc == 0.0) return 0.5 * p_exp.coeffs[0];
        const double y = (2.0 * eta(alpha * x) - (tp.eta_max + tp.eta_min)) / osc;
        return 0.5 * poly::clenshaw(p_exp.coeffs, std::clamp(y, -1.0, 1.0));
    };

    const int D = static_cast<int>(dg.composed_degree);
    const int anc = 2 * N;
    const int r = 2 * N + 1;
    const int c = 2 * N + 2;
    const int flag = 2 * N + 3;
    const int nq = thermal_register_qubits(N);
    std::vector<int> sys(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) sys[i] = i;

    Circuit V;
    if (!opts.force_oracle && D <= opts.degree_cap) {
        dg.mode = "circuit";
        poly::ChebyshevSeries P;
        P.coeffs = poly::cheb_interpolate(filter, D);
        P.parity = poly::Parity::none;
        P.sup_bound = 0.5 * p_sup;
        const BlockEncodingCircuit uh = make_block_encoding(H, alpha * N, sys, anc);
        V = evt_circuit(uh, P, r, c, nullptr, opts.phase_tol).circuit;
    } else {
        dg.mode = "oracle";
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H / (alpha * N));
        Eigen::VectorXd fv(es.eigenvalues().size());
        for (Eigen::Index i = 0; i < fv.size(); ++i) fv(i) = filter(std::clamp(es.eigenvalues()(i), -1.0, 1.0));
        const Eigen::MatrixXcd Pm = es.eigenvectors() * fv.asDiagonal() * es.eigenvectors().adjoint();
        auto U = std::make_shared<const Eigen::MatrixXcd>(dilation_unitary(Pm));
        std::vector<int> q = sys;
        q.push_back(r);
        V.dense(U, U, q, D - 1, 1);
    }

    const Circuit prep = step1_prep(N);
    FpaaProblem prob;
    prob.U = V;
    prob.prep = prep;
    prob.good_mask = (std::uint64_t{1} << anc) | (std::uint64_t{1} << r) | (std::uint64_t{1} << c);
    prob.input_mask = (std::uint64_t{1} << (2 * N + 3)) - 1;
    prob.flag = flag;

    FpaaInfo info;
    const Circuit amp = fpaa(prob, cb.delta_aa, cb.eps_aa, &info);
    if (info.d != dg.d_aa) throw std::logic_error("prepare_thermal: FPAA degree disagrees with cost model");
    dg.overlap = info.measured_overlap;
    dg.success_probability = dg.overlap * dg.overlap;

    StateVector psi(nq);
    prep.apply(psi);
    QueryCount qc;
    amp.apply(psi, &qc);
    dg.queries_used = qc.total();

    const StateVector ref_sa = purified_reference(H, eta);
    StateVector ref(nq);
    ref.amps.assign(ref.dim(), 0.0);
    for (std::size_t i = 0; i < ref_sa.dim(); ++i) ref.amps[i] = ref_sa.amps[i];
    dg.measured_error = phase_distance(psi, ref);
    {
        const std::uint64_t sa_mask = (std::uint64_t{1} << (2 * N)) - 1;
        std::complex<double> ov = 0.0;
        double branch = 0.0;
        for (std::size_t i = 0; i < psi.dim(); ++i) {
            if ((i & ~sa_mask) != 0) continue;
            ov += std::conj(ref.amps[i]) * psi.amps[i];
            branch += std::norm(psi.amps[i]);
        }
        dg.branch_fidelity = branch > 0.0 ? std::norm(ov) / branch : 0.0;
    }

    res.reduced = partial_trace(psi, sys);
    res.target = ensemble_density(H, eta);
    dg.trace_distance = trace_distance(res.reduced, res.target);
    res.state = std::move(psi);
    return res;
}

}  // namespace eqsvt::sim
