#include "gfw/objectives.hpp"

#include <cmath>

namespace gfw {

LeastSquares::LeastSquares(Eigen::MatrixXd A, Eigen::VectorXd y)
    : A_(std::move(A)), y_(std::move(y)) {
    if (A_.rows() != y_.size())
        throw std::invalid_argument("LeastSquares: A rows != y length");
}

double LeastSquares::value(const Eigen::VectorXd& x) const {
    check_dim(x);
    return 0.5 * (A_ * x - y_).squaredNorm();
}

Eigen::VectorXd LeastSquares::gradient(const Eigen::VectorXd& x) const {
    check_dim(x);
    return A_.transpose() * (A_ * x - y_);
}

double ShiftedQuadratic::value(const Eigen::VectorXd& x) const {
    check_dim(x);
    return 0.5 * x.squaredNorm() - x.dot(b_);
}

Eigen::VectorXd ShiftedQuadratic::gradient(const Eigen::VectorXd& x) const {
    check_dim(x);
    return x - b_;
}

double estimate_L(const Eigen::MatrixXd& A, double tol, int max_iter, bool* converged) {
    if (A.size() == 0 || A.norm() == 0.0)
        throw std::invalid_argument("estimate_L: A must be nonzero");

    const int d = static_cast<int>(A.cols());
    // Deterministic start that is never orthogonal to the top eigenvector in
    // practice: all-ones plus a small index ramp to break symmetry.
    Eigen::VectorXd v = Eigen::VectorXd::Ones(d);
    for (int i = 0; i < d; ++i) v[i] += 1e-3 * (i + 1) / d;
    v.normalize();

    double lambda = 0.0;
    bool ok = false;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXd w = A.transpose() * (A * v);
        double next = v.dot(w);  // Rayleigh quotient
        double wn = w.norm();
        if (wn == 0.0) { lambda = 0.0; ok = true; break; }
        v = w / wn;
        if (it > 0 && std::abs(next - lambda) <= tol * std::abs(next)) {
            lambda = next;
            ok = true;
            break;
        }
        lambda = next;
    }
    if (converged) *converged = ok;
    return lambda;
}

}  // namespace gfw
