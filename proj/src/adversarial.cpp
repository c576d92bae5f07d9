#include "gfw/adversarial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gfw/oracles.hpp"

namespace gfw {

namespace {

// Relabel a width x height grid so the central 2x2 block becomes indices
// 0..3 (row-major within the block) and everything else follows row-major.
AdversarialInstance make_grid_core(double tau, int width, int height) {
    if (width < 2 || height < 2 || width * height < 5)
        throw std::invalid_argument("adversarial: grid too small for a center block");
    const int d = width * height;
    const int r0 = height / 2 - 1;
    const int c0 = width / 2 - 1;
    auto is_center = [&](int r, int c) {
        return (r == r0 || r == r0 + 1) && (c == c0 || c == c0 + 1);
    };

    std::vector<int> relabel(d, -1);
    int next_center = 0, next_other = 4;
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c) {
            int old_id = r * width + c;
            relabel[old_id] = is_center(r, c) ? next_center++ : next_other++;
        }

    Graph base = Graph::grid(width, height);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(base.edges.size());
    for (auto [u, v] : base.edges) edges.emplace_back(relabel[u], relabel[v]);

    AdversarialInstance inst{
        Graph::from_edges(d, std::move(edges)),
        SubgraphModel(),
        ShiftedQuadratic([&] {
            Eigen::VectorXd b = Eigen::VectorXd::Constant(d, tau);
            for (int i = 0; i < 4; ++i) b[i] = 1.0;
            return b;
        }()),
        tau,
        Eigen::VectorXd::Zero(d),
        Support({0, 1, 2, 3}),
    };
    inst.model = SubgraphModel(inst.graph, 4, 1, 1.0);
    for (int i = 0; i < 4; ++i) inst.x_star[i] = 0.5;
    return inst;
}

}  // namespace

AdversarialInstance build_grid_instance(double tau, int width, int height) {
    if (!(tau > 0.0 && tau < 0.5))
        throw std::invalid_argument("adversarial: tau must be in (0, 1/2)");
    return make_grid_core(tau, width, height);
}

Eigen::VectorXd one_wrong_vertex(const AdversarialInstance& inst) {
    Eigen::VectorXd z = -inst.objective.gradient(inst.x_star);  // b - x*
    // Smallest off-center node adjacent to the three kept centers.
    int j = -1;
    for (int center : {0, 1, 2})
        for (int nbr : inst.graph.adjacency[center])
            if (nbr > 3 && (j == -1 || nbr < j)) j = nbr;
    if (j == -1) throw std::logic_error("adversarial: no off-center neighbor");
    return support_to_vertex(z, Support({0, 1, 2, j}), inst.model.C);
}

double gap_additive_violation(const AdversarialInstance& inst, const Eigen::VectorXd& vbar) {
    Eigen::VectorXd grad = inst.objective.gradient(inst.x_star);
    double exact_min = -inst.model.C * brute_force_best_support(grad, inst.model).value;
    double exact_gap = grad.dot(inst.x_star) - exact_min;
    double certified_gap = grad.dot(inst.x_star - vbar);
    return exact_gap - certified_gap;
}

double gap_multiplicative_violation(const AdversarialInstance& inst) {
    Eigen::VectorXd grad = inst.objective.gradient(inst.x_star);
    return grad.dot(inst.x_star - one_wrong_vertex(inst));
}

double one_wrong_dmo_ratio(const AdversarialInstance& inst) {
    Eigen::VectorXd z = -inst.objective.gradient(inst.x_star);
    Eigen::VectorXd vbar = one_wrong_vertex(inst);
    double achieved = 0.0;
    for (int i = 0; i < z.size(); ++i)
        if (vbar[i] != 0.0) achieved += z[i] * z[i];
    double best = brute_force_best_support(z, inst.model).value;
    return std::sqrt(achieved) / best;
}

PathProbeInstance build_path_probe_instance(double tau) {
    if (!(tau > 0.0 && tau < 1.0))
        throw std::invalid_argument("adversarial: tau must be in (0, 1)");
    const int d = 30;
    const int s = 4;
    const double scale = std::sqrt(3.0 + tau * tau);

    Eigen::VectorXd x_probe = Eigen::VectorXd::Zero(d);
    x_probe[0] = x_probe[1] = x_probe[2] = -1.0 / scale;
    x_probe[3] = -tau / scale;

    Eigen::VectorXd grad = Eigen::VectorXd::Constant(d, tau);
    for (int i = 0; i < s; ++i) grad[i] = 1.0;

    PathProbeInstance out{
        {
            Graph::path(d),
            SubgraphModel(Graph::path(d), s, 1, 1.0),
            ShiftedQuadratic(x_probe - grad),  // so grad f(x_probe) = grad
            tau,
            Eigen::VectorXd::Zero(d),
            Support({0, 1, 2, 3}),
        },
        x_probe,
        {},
    };

    // On a path with g=1 every model support is a contiguous window, so an
    // exact scan over windows of length <= s replaces brute force.
    double best = 0.0, best_wrong = 0.0;
    for (int len = 1; len <= s; ++len)
        for (int start = 0; start + len <= d; ++start) {
            double acc = 0.0;
            for (int i = start; i < start + len; ++i) acc += grad[i] * grad[i];
            double norm = std::sqrt(acc);
            best = std::max(best, norm);
            bool is_opt = (len == s && start == 0);
            if (!is_opt) best_wrong = std::max(best_wrong, norm);
        }

    PathProbeReport& rep = out.report;
    rep.tau = tau;
    rep.optimal_value = -out.base.model.C * best;
    rep.best_wrong_value = -out.base.model.C * best_wrong;
    rep.probe_xg = x_probe.dot(grad);
    double exact_gap = rep.probe_xg - rep.optimal_value;
    rep.certified_gap = rep.probe_xg - rep.best_wrong_value;
    rep.additive_violation = exact_gap - rep.certified_gap;
    rep.wrong_ratio = best_wrong / best;
    DmoResult heur = heuristic_dmo(-grad, out.base.model);
    rep.heuristic_ratio = heur.dual_value / best;
    return out;
}

}  // namespace gfw
