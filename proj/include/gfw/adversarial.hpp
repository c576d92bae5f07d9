#ifndef GFW_ADVERSARIAL_HPP
#define GFW_ADVERSARIAL_HPP

#include "gfw/graph.hpp"
#include "gfw/objectives.hpp"

namespace gfw {

/// Grid instance with a planted 4-node optimum: b is 1 on the four center
/// nodes (relabeled to indices 0..3) and tau elsewhere, f(x) = x'x/2 - x'b,
/// and the unique optimum over the hull is x* = [1/2,1/2,1/2,1/2,0,...].
struct AdversarialInstance {
    Graph graph;
    SubgraphModel model;  // s=4, g=1, C=1
    ShiftedQuadratic objective;
    double tau = 0.0;
    Eigen::VectorXd x_star;
    Support optimal_support;  // {0,1,2,3}
};

AdversarialInstance build_grid_instance(double tau, int width = 4, int height = 4);

/// The nearly-optimal vertex that trades one center node for an adjacent
/// tau node: unit vector on {0,1,2,j} aligned with b - x*, where j is the
/// smallest off-center neighbor of {0,1,2}.
Eigen::VectorXd one_wrong_vertex(const AdversarialInstance& inst);

/// Exact duality gap at x* minus the gap certified by `vbar`; equals
/// 1 - sqrt(3/4 + tau^2) for one_wrong_vertex, a positive constant, so no
/// decaying additive gap tolerance can hold.
double gap_additive_violation(const AdversarialInstance& inst, const Eigen::VectorXd& vbar);

/// Gap certified by the one-wrong vertex at x*; equals
/// sqrt(3/4 + tau^2) - 1 < 0, so no multiplicative gap factor can hold.
double gap_multiplicative_violation(const AdversarialInstance& inst);

/// Dual-value ratio ||z_{S'}||/||z_{S*}|| achieved by the one-wrong support
/// at x*; equals sqrt(3/4 + tau^2), which still clears the approximation
/// factor 3/4 + tau^2.
double one_wrong_dmo_ratio(const AdversarialInstance& inst);

/// Path-graph probe instance (d=30, s=4, g=1, C=1): gradient at the probe
/// point is [1,1,1,1,tau,...]. The exact dual maximizer is the window
/// {0,1,2,3} at value -2; the best support containing a tau entry reaches
/// only -sqrt(3 + tau^2); the gap comparison at the probe point has a
/// positive additive violation with a negative certified gap.
struct PathProbeReport {
    double tau = 0.0;
    double optimal_value = 0.0;    // min over vertices of <grad, v>
    double best_wrong_value = 0.0; // same, restricted to non-optimal supports
    double additive_violation = 0.0;  // exact gap minus certified gap
    double certified_gap = 0.0;       // <grad, x - vbar>, negative
    double probe_xg = 0.0;            // <x, grad f(x)> at the probe
    double wrong_ratio = 0.0;         // dual-value ratio of the best wrong support
    double heuristic_ratio = 0.0;     // ratio achieved by heuristic_dmo
};

struct PathProbeInstance {
    AdversarialInstance base;  // path graph, probe objective
    Eigen::VectorXd x_probe;
    PathProbeReport report;
};

PathProbeInstance build_path_probe_instance(double tau);

}  // namespace gfw

#endif
