#include "qmoo/operators.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qmoo {

namespace {

void check_dim(int d) {
    if (d < 2) throw std::domain_error("qudit operators require d >= 2");
}

}  // namespace

Eigen::MatrixXd angular_momentum_x(int d) {
    check_dim(d);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int x = 0; x + 1 < d; ++x) {
        const double v = 0.5 * std::sqrt(static_cast<double>((x + 1) * (d - 1 - x)));
        m(x + 1, x) = v;
        m(x, x + 1) = v;
    }
    return m;
}

Eigen::MatrixXd angular_momentum_z(int d) {
    check_dim(d);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int x = 0; x < d; ++x) m(x, x) = 0.5 * (2 * x - d + 1);
    return m;
}

Eigen::MatrixXd squeezing(int d) {
    check_dim(d);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int x = 0; x < d; ++x) {
        const double z = 0.5 * (2 * x - d + 1);
        m(x, x) = z * z;
    }
    return m;
}

Eigen::MatrixXcd mixer_matrix(int d, double beta1, double beta2) {
    check_dim(d);
    if (!std::isfinite(beta1) || !std::isfinite(beta2))
        throw std::domain_error("mixer_matrix: angles must be finite");
    Eigen::MatrixXd h = beta1 * angular_momentum_x(d);
    if (d > 2) h += beta2 * squeezing(d);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::VectorXd& lambda = es.eigenvalues();
    const Eigen::MatrixXd& v = es.eigenvectors();
    Eigen::VectorXcd phase(d);
    for (int i = 0; i < d; ++i)
        phase(i) = std::complex<double>(std::cos(lambda(i)), -std::sin(lambda(i)));
    return v.cast<std::complex<double>>() * phase.asDiagonal() *
           v.transpose().cast<std::complex<double>>();
}

}  // namespace qmoo
