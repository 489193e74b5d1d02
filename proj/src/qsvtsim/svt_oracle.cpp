#include "eqsvt/qsvtsim/evt.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqsvt::sim {

Eigen::MatrixXcd svt_oracle(const Eigen::MatrixXcd& A, const std::function<double(double)>& f, poly::Parity parity) {
    if (parity == poly::Parity::none) throw std::invalid_argument("svt_oracle: parity must be even or odd");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd& s = svd.singularValues();
    const Eigen::Index k = s.size();
    if (parity == poly::Parity::odd) {
        Eigen::VectorXcd fs(k);
        for (Eigen::Index i = 0; i < k; ++i) fs(i) = f(s(i));
        return svd.matrixU().leftCols(k) * fs.asDiagonal() * svd.matrixV().leftCols(k).adjoint();
    }
    const Eigen::Index n = A.cols();
    Eigen::VectorXcd fs(n);
    for (Eigen::Index i = 0; i < n; ++i) fs(i) = f(i < k ? s(i) : 0.0);
    return svd.matrixV() * fs.asDiagonal() * svd.matrixV().adjoint();
}

Eigen::MatrixXcd evt_oracle(const Eigen::MatrixXcd& A, const poly::ChebyshevSeries& p) {
    std::vector<double> even(p.coeffs.size(), 0.0);
    std::vector<double> odd(p.coeffs.size(), 0.0);
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) (j % 2 == 0 ? even : odd)[j] = p.coeffs[j];
    auto fe = [&](double x) { return poly::clenshaw(even, std::clamp(x, -1.0, 1.0)); };
    auto fo = [&](double x) { return poly::clenshaw(odd, std::clamp(x, -1.0, 1.0)); };
    return svt_oracle(A, fe, poly::Parity::even) + svt_oracle(A, fo, poly::Parity::odd);
}

}  // namespace eqsvt::sim
