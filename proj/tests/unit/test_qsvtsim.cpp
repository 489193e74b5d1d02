#include "eqsvt/common.hpp"
#include "eqsvt/costmodel.hpp"
#include "eqsvt/polyapprox.hpp"
#include "eqsvt/qsvtsim.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace eqsvt;
using namespace eqsvt::sim;

namespace {

double max_abs_diff(const StateVector& a, const StateVector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
    return m;
}

Eigen::MatrixXcd pauli_z() {
    Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(2, 2);
    Z(0, 0) = 1.0;
    Z(1, 1) = -1.0;
    return Z;
}

poly::ChebyshevSeries series(std::vector<double> c, poly::Parity p) {
    poly::ChebyshevSeries s;
    s.coeffs = std::move(c);
    s.parity = p;
    s.sup_bound = poly::coeff_l1_norm(s.coeffs);
    return s;
}

}  // namespace

TEST_CASE("statevector basics") {
    StateVector z(3);
    CHECK(z.dim() == 8);
    CHECK(z.amps[0] == cplx(1.0));
    const StateVector r = StateVector::random(4, 1);
    CHECK(r.norm() == doctest::Approx(1.0).epsilon(1e-14));
    StateVector g = r;
    for (auto& a : g.amps) a *= std::polar(1.0, 0.7);
    CHECK(phase_distance(r, g) <= 1e-14);
    CHECK(phase_distance(StateVector::basis(2, 0), StateVector::basis(2, 1)) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("partial trace of a product state") {
    // |+> on qubit 0, |1> on qubit 1.
    StateVector psi(2);
    psi.amps = {0.0, 0.0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    const Eigen::MatrixXcd r0 = partial_trace(psi, {0});
    CHECK(std::abs(r0(0, 1) - cplx(0.5)) <= 1e-15);
    const Eigen::MatrixXcd r1 = partial_trace(psi, {1});
    CHECK(std::abs(r1(1, 1) - cplx(1.0)) <= 1e-15);
    CHECK(trace_distance(r1, r1) <= 1e-15);
}

TEST_CASE("serial and omp kernels agree") {
    const StateVector start = StateVector::random(14, 5);
    const Mat2 h = hadamard();
    const Mat2 rz = rz_phase(0.37);
    const Eigen::MatrixXcd U = dilation_unitary(random_hermitian(2, 4) / 10.0);
    const std::vector<int> qs = {1, 5, 12};
    StateVector a = start, b = start;
    for (int q = 0; q < 14; ++q) {
        const Cond c{std::uint64_t{1} << ((q + 3) % 14), 0};
        serial::apply_1q(a.amps, q, q % 2 ? h : rz, c);
        omp::apply_1q(b.amps, q, q % 2 ? h : rz, c);
    }
    serial::flip_if(a.amps, 7, Cond{0b101, 0b001});
    omp::flip_if(b.amps, 7, Cond{0b101, 0b001});
    serial::apply_dense(a.amps, qs, U, Cond{1u << 9, 1u << 9});
    omp::apply_dense(b.amps, qs, U, Cond{1u << 9, 1u << 9});
    CHECK(max_abs_diff(a, b) <= 1e-15);
    CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("circuit adjoint, control and query counting") {
    const BlockEncodingCircuit be = make_block_encoding(random_hermitian(2, 3), 6.0);
    Circuit c;
    c.single(0, hadamard());
    c.append(be.circuit);
    c.flip(2, Cond{1, 1});
    c.single(1, rz_phase(0.3));
    Circuit full = c;
    full.append(c.adjoint());
    const StateVector s = StateVector::random(4, 9);
    StateVector t = s;
    QueryCount q;
    full.apply(t, &q);
    CHECK(max_abs_diff(s, t) <= 1e-13);
    CHECK(q.uncontrolled == 2);
    CHECK(q.controlled == 0);
    QueryCount qc;
    StateVector u = StateVector::random(4, 2);
    full.controlled(3).apply(u, &qc);
    CHECK(qc.controlled == 2);
    CHECK(full.static_queries().total() == 2);
    CHECK(unitarity_defect(full, 4, 100) <= 1e-10);
    StateVector v = s, w = s;
    c.apply(v, nullptr, Backend::serial);
    c.apply(w, nullptr, Backend::omp);
    CHECK(max_abs_diff(v, w) <= 1e-15);
}

TEST_CASE("block encodings") {
    const BlockEncodingCircuit bz = make_block_encoding(pauli_z(), 1.0);
    CHECK((extract_block(bz) - pauli_z()).norm() <= 1e-15);
    const Eigen::MatrixXcd U = dilation_unitary(pauli_z());
    CHECK((U.bottomRightCorner(2, 2) + pauli_z()).norm() <= 1e-15);
    CHECK(U.topRightCorner(2, 2).norm() <= 1e-15);

    const Eigen::MatrixXcd H2 = free_spin_hamiltonian(2);
    CHECK((extract_block(make_block_encoding(H2, 2.0)) - H2 / 2.0).norm() <= 1e-12);

    const Eigen::MatrixXcd R = random_hermitian(2, 8);
    const double nrm = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(R).eigenvalues().cwiseAbs().maxCoeff();
    const BlockEncodingCircuit br = make_block_encoding(R, nrm);
    CHECK(unitarity_defect(br.circuit, br.register_qubits(), 100) <= 1e-10);
    CHECK((extract_block(br) - R / nrm).norm() <= 1e-10);
    CHECK_THROWS_AS(make_block_encoding(R, 0.5 * nrm), std::invalid_argument);
}

TEST_CASE("qsp phases: trivial targets") {
    const PhaseSequence x = qsp_phases(series({0.0, 1.0}, poly::Parity::odd));
    REQUIRE(x.phases.size() == 1);
    CHECK(std::abs(std::remainder(x.phases[0], std::numbers::pi)) <= 1e-6);
    CHECK(std::abs(qsp_response(std::vector<double>{0.0, 0.0}, 2, 0.3) - cplx(1.0)) <= 1e-15);
}

TEST_CASE("qsp phases reproduce a halved exp approximation") {
    poly::ChebyshevSeries p = poly::exp_poly(1.0, 0.05);
    for (double& c : p.coeffs) c *= 0.5;
    p.sup_bound = 0.5;
    poly::ChebyshevSeries even = p, odd = p;
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) (j % 2 ? even : odd).coeffs[j] = 0.0;
    even.parity = poly::Parity::even;
    odd.parity = poly::Parity::odd;
    for (const auto& part : {even, odd}) {
        const PhaseSequence seq = qsp_phases(part);
        CHECK(seq.residual <= 1e-8);
        for (int i = 0; i <= 1000; ++i) {
            const double xv = -1.0 + 2.0 * i / 1000.0;
            CHECK(std::abs(oracle::qsp_product(seq.phases, xv).real() - part(xv)) <= 1e-7);
        }
    }
}

TEST_CASE("evt circuit examples") {
    const BlockEncodingCircuit bz = make_block_encoding(pauli_z(), 1.0);
    const BlockEncodingCircuit e1 = evt_circuit(bz, series({0.0, 0.5}, poly::Parity::odd));
    CHECK((extract_block(e1) - 0.5 * pauli_z()).norm() <= 1e-10);

    const Eigen::MatrixXcd H = random_hermitian(2, 12);
    const double a = 1.01 * Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(H).eigenvalues().cwiseAbs().maxCoeff();
    const BlockEncodingCircuit be = make_block_encoding(H, a);
    const BlockEncodingCircuit e2 = evt_circuit(be, series({0.0, 0.0, 0.5}, poly::Parity::even));
    const Eigen::MatrixXcd X = H / a;
    const Eigen::MatrixXcd ref = 0.5 * (2.0 * X * X - Eigen::MatrixXcd::Identity(4, 4));
    CHECK((extract_block(e2) - ref).norm() <= 1e-8);

    const poly::ChebyshevSeries mixed = series({0.1, -0.15, 0.05, 0.1, -0.05, 0.02, 0.01}, poly::Parity::none);
    EvtInfo info;
    const BlockEncodingCircuit e3 = evt_circuit(be, mixed, -1, -1, &info);
    StateVector psi = StateVector::random(e3.register_qubits(), 4);
    QueryCount q;
    e3.circuit.apply(psi, &q);
    CHECK(q.uncontrolled == 5);
    CHECK(q.controlled == 1);
    CHECK((extract_block(e3) - oracle::matrix_function(X, [&](double v) { return mixed(v); })).norm() <= 1e-8);
    CHECK(unitarity_defect(e3.circuit, e3.register_qubits(), 100) <= 1e-10);
}

TEST_CASE("svt oracle examples") {
    const Eigen::MatrixXcd H = random_hermitian(2, 21) / 10.0;
    CHECK((svt_oracle(H, [](double x) { return x; }, poly::Parity::odd) - H).norm() <= 1e-12);
    CHECK((svt_oracle(H, [](double x) { return x * x; }, poly::Parity::even) - H * H).norm() <= 1e-12);

    // Rank one alpha |g><0| maps to |g><0| under a sign approximation.
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(4);
    g(2) = cplx(0.6, 0.0);
    g(3) = cplx(0.0, 0.8);
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(4, 4);
    A.col(0) = 0.3 * g;
    const poly::SignPolySpec sp = poly::sign_poly(0.2, 0.1);
    const Eigen::MatrixXcd out = svt_oracle(A, [&](double x) { return sp.series(x); }, poly::Parity::odd);
    Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(4, 4);
    want.col(0) = g;
    CHECK((out - want).norm() <= 1e-4);
}

TEST_CASE("fpaa on planted overlaps") {
    for (double alpha : {0.2, 1.0}) {
        // Three qubits: U rotates qubit 2 so that Pi_good (qubit 2 = 0) keeps amplitude alpha.
        const double th = std::acos(alpha);
        Eigen::MatrixXcd Ry(2, 2);
        Ry << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
        FpaaProblem p;
        p.U.dense(std::make_shared<const Eigen::MatrixXcd>(Ry), nullptr, {2}, 1, 0);
        p.U.single(0, hadamard(), Cond{1u << 2, 0});
        p.prep.single(1, hadamard());
        p.good_mask = 1u << 2;
        p.input_mask = 0b111;
        p.flag = 3;
        const double delta = alpha == 1.0 ? 0.9 : 0.15;
        const double eps = 0.05;
        CHECK(fpaa_overlap(p, 4) == doctest::Approx(alpha).epsilon(1e-12));
        FpaaInfo info;
        const Circuit c = fpaa(p, delta, eps, &info);
        CHECK(info.d == *cost::fpaa_degree(delta, eps).d.exact);

        StateVector psi(4);
        p.prep.apply(psi);
        StateVector good = psi;
        p.U.apply(good);
        for (std::size_t i = 0; i < good.dim(); ++i) {
            if (i & (1u << 2)) good.amps[i] = 0.0;
        }
        const double nrm = good.norm();
        for (auto& v : good.amps) v /= nrm;
        QueryCount q;
        c.apply(psi, &q);
        CHECK(q.total() == info.d);
        CHECK(phase_distance(psi, good) <= eps);
        if (alpha == 1.0) CHECK(std::norm(psi.inner(good)) >= 1.0 - eps);
    }
}

TEST_CASE("fpaa rejects overlaps below delta") {
    Eigen::MatrixXcd Ry(2, 2);
    const double th = std::acos(0.1);
    Ry << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
    FpaaProblem p;
    p.U.dense(std::make_shared<const Eigen::MatrixXcd>(Ry), nullptr, {0}, 1, 0);
    p.good_mask = 1;
    p.input_mask = 1;
    p.flag = 1;
    CHECK_THROWS_AS(fpaa(p, 0.3, 0.1), ContractViolation);
}
