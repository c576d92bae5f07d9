#ifndef GFW_THEORY_HPP
#define GFW_THEORY_HPP

#include <optional>
#include <vector>

#include "gfw/solvers.hpp"

namespace gfw {

/// Inputs shared by the rate-bound calculators. `A` / `A_seq` cap the
/// instance-adaptive sequence A_t; when both are set the sequence wins.
struct BoundParams {
    double delta = 1.0;
    double L = 1.0;
    double C = 1.0;
    std::optional<double> mu;  // quadratic growth constant
    double h0 = 0.0;           // initial primal error
    int s = 1;                 // max support size
    double B = 0.0;            // bound on ||grad f||_inf, 0 means unknown
    double nu = 1.0;           // gradient decay exponent, in (0,1]
    double Dstar = 0.0;        // min_{x*} ||x*||_2
    double A = 0.0;            // scalar cap for A_t, 0 means unset
    std::vector<double> A_seq;

    void validate() const;
};

/// Piecewise rate for the plain method with Option I updates. Uses
/// P(delta,nu) = (1-delta)*9^delta/(t+2)^(2*delta)*h0
///             + (ln(t+1)+1)/(t+2)^nu * A_t.
/// delta <= 1/2: min{2*C*sqrt(s)*B, P(delta,2*delta)} (the B term only when
/// B > 0); delta > 1/2: min{P(delta,1), (3(1-delta)h0+A_t)/((2delta-1)(t+2))}.
double bound_fw1(int t, const BoundParams& p);

/// Option II rate: 8*L*C^2/(delta^2*(t+2)).
double bound_fw2(int t, const BoundParams& p);

/// Accelerated rate when every minimizer is on the boundary:
/// 4*exp(4L/mu)*h0/(t+2)^2.
double bound_accfw_boundary(int t, const BoundParams& p);

/// Accelerated rate with interior minimizers:
/// min{3L*exp(2L/mu)(C^2-D*^2)/(t+2) + 4*exp(4L/mu)h0/(t+2)^2,
///     2L(5C^2-D*^2)/(t+2)}.
double bound_accfw_interior(int t, const BoundParams& p);

/// Accelerated Option II rate:
/// 4*exp(4L/mu)h0/(t+3)^2 + 28L^2(C^2/delta^2 - D*^2)/(5*mu*(t+3)).
double bound_accfw2(int t, const BoundParams& p);

/// Envelope with implementation constant c=2 (the O-constant is not pinned
/// down by the rate statements; label output accordingly).
/// decaying: 2*B*C*sqrt(s)/t^nu; otherwise the constant 2*B*C*sqrt(s)(1-delta)/delta.
double bound_practical(int t, const BoundParams& p, bool decaying);

/// Exact unroll of h_{k+1} = (1 - 2*delta/(k+2))h_k + A_k/(k+2)^2 through
/// step t (so recurrence_H(0,...) performs one step and consumes A_0).
/// Requires A_seq length >= t+1.
double recurrence_H(int t, double delta, double h0, const std::vector<double>& A_seq);

/// Closed-form majorant of recurrence_H with a scalar cap A for the A_k;
/// the piecewise composite curve the recurrence is compared against.
double composite_bound(int t, double delta, double h0, double A);

/// sqrt(2*sqrt(s)*C*grad_inf_at_opt/mu) + sqrt(2*max(h_t,0)/mu).
double estimation_error_bound(double h_t, const BoundParams& p, double grad_inf_at_opt);

/// Instance-adaptive sequence A_t = max_{i<=t} 4(1-delta)(i+2)|<x_i, grad f(x_i)>|
/// + 8*L*C^2, computed from a recorded trace.
std::vector<double> a_t_from_trace(const IterateTrace& trace, double delta, double L, double C);

}  // namespace gfw

#endif
