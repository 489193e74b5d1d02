#include "eqsvt/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eqsvt::ens {

std::string to_string(EtaFamily f) {
    switch (f) {
        case EtaFamily::canonical: return "canonical";
        case EtaFamily::gaussian: return "gaussian";
        case EtaFamily::even_power: return "even_power";
        case EtaFamily::log_comparison: return "log_comparison";
        case EtaFamily::custom: return "custom";
    }
    return "unknown";
}

EtaFamily eta_family_from_string(const std::string& s) {
    if (s == "canonical") return EtaFamily::canonical;
    if (s == "gaussian") return EtaFamily::gaussian;
    if (s == "even_power" || s == "even-power") return EtaFamily::even_power;
    if (s == "log_comparison" || s == "log") return EtaFamily::log_comparison;
    if (s == "custom") return EtaFamily::custom;
    throw std::invalid_argument("unknown eta family '" + s + "'");
}

EtaSpec EtaSpec::canonical(double beta) {
    EtaSpec e;
    e.family = EtaFamily::canonical;
    e.beta = beta;
    e.coeffs = {0.0, beta};
    return e;
}

EtaSpec EtaSpec::gaussian(double lambda, double mu) {
    if (!(lambda > 0.0)) throw std::invalid_argument("gaussian eta: lambda must be > 0");
    EtaSpec e;
    e.family = EtaFamily::gaussian;
    e.lambda = lambda;
    e.mu = mu;
    e.coeffs = {0.5 * lambda * mu * mu, -lambda * mu, 0.5 * lambda};
    return e;
}

EtaSpec EtaSpec::even_power(int n, double delta, double mu) {
    if (n < 1) throw std::invalid_argument("even_power eta: n must be >= 1");
    if (!(delta > 0.0)) throw std::invalid_argument("even_power eta: Delta must be > 0");
    EtaSpec e;
    e.family = EtaFamily::even_power;
    e.n = n;
    e.delta = delta;
    e.mu = mu;
    const int m = 2 * n;
    e.coeffs.assign(static_cast<std::size_t>(m) + 1, 0.0);
    // ((u - mu)/Delta)^m expanded binomially.
    double binom = 1.0;
    for (int k = 0; k <= m; ++k) {
        e.coeffs[k] = binom * std::pow(-mu, m - k) / std::pow(delta, m);
        binom = binom * (m - k) / (k + 1);
    }
    return e;
}

EtaSpec EtaSpec::log_comparison(double kappa, double l) {
    if (!(kappa >= 0.0)) throw std::invalid_argument("log eta: kappa must be >= 0");
    EtaSpec e;
    e.family = EtaFamily::log_comparison;
    e.kappa = kappa;
    e.l = l;
    return e;
}

EtaSpec EtaSpec::custom(std::vector<double> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("custom eta: no coefficients");
    EtaSpec e;
    e.family = EtaFamily::custom;
    e.coeffs = std::move(coeffs);
    return e;
}

int EtaSpec::degree() const {
    switch (family) {
        case EtaFamily::canonical: return 1;
        case EtaFamily::gaussian: return 2;
        case EtaFamily::even_power: return 2 * n;
        case EtaFamily::log_comparison:
            throw std::logic_error("log_comparison eta is not a polynomial");
        case EtaFamily::custom: {
            int d = static_cast<int>(coeffs.size()) - 1;
            while (d > 0 && coeffs[d] == 0.0) --d;
            return std::max(1, d);
        }
    }
    return 1;
}

double EtaSpec::eval_coeffs(double u) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
    return acc;
}

double EtaSpec::operator()(double u) const {
    switch (family) {
        case EtaFamily::canonical: return beta * u;
        case EtaFamily::gaussian: return 0.5 * lambda * (u - mu) * (u - mu);
        case EtaFamily::even_power: return std::pow((u - mu) / delta, 2 * n);
        case EtaFamily::log_comparison:
            if (!(u < l)) throw std::domain_error("log eta: u must be < l");
            return -2.0 * kappa * std::log(l - u);
        case EtaFamily::custom: return eval_coeffs(u);
    }
    return 0.0;
}

double EtaSpec::derivative(double u) const {
    switch (family) {
        case EtaFamily::canonical: return beta;
        case EtaFamily::gaussian: return lambda * (u - mu);
        case EtaFamily::even_power: return (2.0 * n / delta) * std::pow((u - mu) / delta, 2 * n - 1);
        case EtaFamily::log_comparison:
            if (!(u < l)) throw std::domain_error("log eta: u must be < l");
            return 2.0 * kappa / (l - u);
        case EtaFamily::custom: {
            double acc = 0.0;
            for (std::size_t i = coeffs.size(); i-- > 1;) acc = acc * u + static_cast<double>(i) * coeffs[i];
            return acc;
        }
    }
    return 0.0;
}

double beta_of(const EtaSpec& eta, double u) { return eta.derivative(u); }

std::pair<double, double> eta_extrema(const EtaSpec& eta, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("eta_extrema: alpha must be > 0");
    std::vector<double> candidates = {-alpha, alpha};
    if (eta.family == EtaFamily::log_comparison) {
        if (!(eta.l > alpha)) throw std::domain_error("log eta: l must exceed alpha");
    } else if (eta.family == EtaFamily::even_power || eta.family == EtaFamily::gaussian) {
        // Single stationary point at mu.
        if (std::abs(eta.mu) < alpha) candidates.push_back(eta.mu);
    } else if (eta.family == EtaFamily::custom) {
        const int m = 64 + 16 * eta.degree();
        double a = -alpha;
        double fa = eta.derivative(a);
        for (int i = 1; i <= m; ++i) {
            const double b = -alpha + 2.0 * alpha * i / m;
            const double fb = eta.derivative(b);
            if (fa == 0.0) candidates.push_back(a);
            if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) {
                double lo = a, hi = b, flo = fa;
                for (int it = 0; it < 200 && hi - lo > 1e-16 * alpha; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = eta.derivative(mid);
                    if ((fm < 0.0) == (flo < 0.0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                candidates.push_back(0.5 * (lo + hi));
            }
            a = b;
            fa = fb;
        }
    }
    double lo = eta(candidates[0]);
    double hi = lo;
    for (double u : candidates) {
        const double v = eta(u);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

}  // namespace eqsvt::ens
