#include "eqsvt/polyapprox.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace eqsvt::poly;

TEST_CASE("bessel_i_scaled trivial values and domain") {
    CHECK(bessel_i_scaled(0, 0.0) == 1.0);
    CHECK(bessel_i_scaled(3, 0.0) == 0.0);
    CHECK_THROWS_AS(bessel_i_scaled(0, -1.0), std::domain_error);
}

TEST_CASE("bessel_i_scaled matches trapezoid quadrature") {
    CHECK(bessel_i_scaled(1, 2.0) == doctest::Approx(oracle::bessel_i_scaled_quad(1, 2.0)).epsilon(1e-10));
    for (double x : {0.1, 0.5, 3.0, 12.5, 80.0}) {
        for (int j : {0, 1, 2, 7, 20}) {
            const double ref = oracle::bessel_i_scaled_quad(j, x);
            if (ref < 1e-250) continue;
            CHECK(bessel_i_scaled(j, x) == doctest::Approx(ref).epsilon(1e-10));
        }
    }
}

TEST_CASE("bessel_i_scaled_all satisfies the three-term recurrence") {
    for (double x : {0.7, 5.0, 150.0, 2000.0}) {
        const auto v = bessel_i_scaled_all(200, x);
        for (int j = 1; j < 199; ++j) {
            if (v[j] < 1e-280) break;
            const double lhs = v[j - 1] - v[j + 1];
            const double rhs = 2.0 * j / x * v[j];
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(std::abs(rhs), v[j - 1]));
        }
        for (int j : {0, 5, 60}) CHECK(v[j] == doctest::Approx(bessel_i_scaled(j, x)).epsilon(1e-12));
    }
}

TEST_CASE("lambert_w known values and residual") {
    CHECK(lambert_w(0.0) == 0.0);
    CHECK(lambert_w(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lambert_w(10.0) == doctest::Approx(static_cast<double>(oracle::lambert_w_newton(10.0L))).epsilon(1e-12));
    CHECK(lambert_w(10.0) == doctest::Approx(1.745528).epsilon(1e-6));
    CHECK_THROWS_AS(lambert_w(-0.1), std::domain_error);
    for (double lx : {50.0, 700.0, 1e5, 1e20}) {
        CHECK(lambert_w_of_log(lx) ==
              doctest::Approx(static_cast<double>(oracle::lambert_w_of_log_newton(lx))).epsilon(1e-13));
    }
}

TEST_CASE("cheb_eval small cases and domain") {
    ChebyshevSeries s;
    s.coeffs = {2.5};
    CHECK(cheb_eval(s, -0.3) == 2.5);
    s.coeffs = {0.0, 1.0};
    CHECK(cheb_eval(s, 0.3) == doctest::Approx(0.3));
    s.coeffs = {0.0, 0.0, 1.0};
    CHECK(cheb_eval(s, 0.5) == doctest::Approx(-0.5));
    CHECK_THROWS_AS(cheb_eval(s, 1.01), std::domain_error);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> c(40);
    for (double& v : c) v = u(rng);
    s.coeffs = c;
    for (int i = 0; i < 50; ++i) {
        const double x = u(rng);
        CHECK(cheb_eval(s, x) == doctest::Approx(oracle::cheb_sum_direct(c, x)).epsilon(1e-12));
    }
}

TEST_CASE("cheb_interpolate reproduces polynomials") {
    const auto c = cheb_interpolate([](double x) { return 4 * x * x * x - 3 * x; }, 5);
    for (std::size_t j = 0; j < c.size(); ++j) CHECK(c[j] == doctest::Approx(j == 3 ? 1.0 : 0.0).epsilon(1e-13));
}

TEST_CASE("exp_poly degree formula and certification") {
    const ExpPolyDegree d = exp_poly_degree(12.5, 0.01);
    CHECK(d.t == 93);
    CHECK(d.n == static_cast<int>(std::ceil(std::sqrt(2.0 * 93 * std::log(4.0 / 0.01)))));
    const auto grid = certification_grid();
    for (auto [lambda, eps] : {std::pair{1.0, 0.05}, std::pair{12.5, 0.01}, std::pair{0.3, 0.2}}) {
        const ChebyshevSeries p = exp_poly(lambda, eps);
        CHECK(p.err_bound <= eps);
        const double err = measured_sup_error(p, [&](double x) { return std::exp(-lambda * (x + 1.0)); }, grid);
        CHECK(err <= p.err_bound);
        CHECK(measured_sup_abs(p, grid) <= 1.0 + 1e-12);
    }
    CHECK_THROWS(exp_poly(0.0, 0.1));
    CHECK_THROWS(exp_poly(1.0, 1.0));
}

TEST_CASE("exp_poly coefficients agree with the quadrature Bessel expansion") {
    const double lambda = 2.0;
    const ChebyshevSeries p = exp_poly(lambda, 0.01);
    for (int j = 0; j <= p.degree(); ++j) {
        const double ref = (j == 0 ? 1.0 : 2.0) * (j % 2 ? -1.0 : 1.0) * oracle::bessel_i_scaled_quad(j, lambda);
        CHECK(std::abs(p.coeffs[j] - ref) <= 1e-10 * std::abs(ref) + 1e-15);
    }
}

TEST_CASE("erf_poly parity, error bound and closed form at k=1, n=5") {
    const auto grid = certification_grid();
    const ChebyshevSeries e = erf_poly(2.0, 29);
    CHECK(e.parity == Parity::odd);
    CHECK(e(0.0) == 0.0);
    CHECK(measured_sup_error(e, [](double x) { return std::erf(2.0 * x); }, grid) <= e.err_bound);
    for (std::size_t j = 0; j < e.coeffs.size(); j += 2) CHECK(e.coeffs[j] == 0.0);
    for (double x : {0.1, 0.37, 0.93}) CHECK(e(-x) == -e(x));

    // Coefficient of T_{2j+1}: 2k e^{-k^2/2} (-1)^j (I_j + I_{j+1})(k^2/2) / (sqrt(pi)(2j+1)), where the
    // truncated top term keeps only I_j. Bessel values from quadrature.
    const double k = 1.0;
    const ChebyshevSeries e1 = erf_poly(k, 5);
    for (int j = 0; j <= 2; ++j) {
        const double b = k * k / 2.0;
        const double next = j < 2 ? oracle::bessel_i_scaled_quad(j + 1, b) : 0.0;
        const double ref = 2.0 * k / std::sqrt(std::numbers::pi) * (j % 2 ? -1.0 : 1.0) *
                           (oracle::bessel_i_scaled_quad(j, b) + next) / (2 * j + 1);
        CHECK(e1.coeffs[2 * j + 1] == doctest::Approx(ref).epsilon(1e-12));
    }
    CHECK_THROWS(erf_poly(1.0, 4));
}

TEST_CASE("sign_poly degree, bounds and monotonicity") {
    const SignPolySpec s = sign_poly(0.5, 0.1);
    const oracle::SignDegree o = oracle::sign_degree(0.5L, 0.1L);
    CHECK(s.d == 127);
    CHECK(s.d == o.d);
    CHECK(s.t == static_cast<long long>(o.t));
    CHECK(s.k == doctest::Approx(static_cast<double>(o.k)).epsilon(1e-12));
    CHECK(s.d % 2 == 1);
    CHECK(sign_poly(0.5, 0.05).d > s.d);

    const auto grid = certification_grid();
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ud(0.2, 1.0), ue(0.05, 0.5);
    for (int i = 0; i < 20; ++i) {
        const double delta = ud(rng), eps = ue(rng);
        const SignPolySpec sp = sign_poly(delta, eps);
        CHECK(sp.d == oracle::sign_degree(delta, eps).d);
        CHECK(measured_sup_abs(sp.series, grid) <= 1.0);
        const double err = measured_sup_error(
            sp.series, [](double x) { return x > 0 ? 1.0 : -1.0; }, grid,
            [delta](double x) { return std::abs(x) >= delta; });
        CHECK(err <= std::pow(eps, 4) / 8.0);
    }
}
