#ifndef GFW_OBJECTIVES_HPP
#define GFW_OBJECTIVES_HPP

#include <optional>
#include <stdexcept>

#include <Eigen/Core>

namespace gfw {

/// Convex differentiable objective. Implementations are immutable and
/// evaluation is pure.
class Objective {
public:
    virtual ~Objective() = default;
    virtual int dim() const = 0;
    virtual double value(const Eigen::VectorXd& x) const = 0;
    virtual Eigen::VectorXd gradient(const Eigen::VectorXd& x) const = 0;

protected:
    void check_dim(const Eigen::VectorXd& x) const {
        if (x.size() != dim()) throw std::invalid_argument("objective: dimension mismatch");
    }
};

/// f(x) = ||Ax - y||^2 / 2
class LeastSquares : public Objective {
public:
    LeastSquares(Eigen::MatrixXd A, Eigen::VectorXd y);

    int dim() const override { return static_cast<int>(A_.cols()); }
    double value(const Eigen::VectorXd& x) const override;
    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const override;

    const Eigen::MatrixXd& A() const { return A_; }
    const Eigen::VectorXd& y() const { return y_; }

private:
    Eigen::MatrixXd A_;
    Eigen::VectorXd y_;
};

/// f(x) = x'x/2 - x'b, unconstrained minimizer b. 1-smooth, 1-strongly convex.
class ShiftedQuadratic : public Objective {
public:
    explicit ShiftedQuadratic(Eigen::VectorXd b) : b_(std::move(b)) {}

    int dim() const override { return static_cast<int>(b_.size()); }
    double value(const Eigen::VectorXd& x) const override;
    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const override;

    const Eigen::VectorXd& b() const { return b_; }

private:
    Eigen::VectorXd b_;
};

/// Smoothness constant estimate plus an optional user-supplied quadratic
/// growth constant (never auto-estimated).
struct SmoothnessInfo {
    double L = 1.0;
    std::optional<double> mu;
};

/// Largest eigenvalue of A'A by power iteration, to relative tolerance tol.
/// Non-convergence returns the last Rayleigh quotient (callers wanting to
/// know can pass `converged`).
double estimate_L(const Eigen::MatrixXd& A, double tol = 1e-8, int max_iter = 1000,
                  bool* converged = nullptr);

}  // namespace gfw

#endif
