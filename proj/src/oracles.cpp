#include "gfw/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gfw {

namespace {

double masked_norm(const Eigen::VectorXd& z, const Support& support) {
    double acc = 0.0;
    for (int i : support.indices) acc += z[i] * z[i];
    return std::sqrt(acc);
}

// Indices ordered by descending |z_i|, ties broken by lower index.
std::vector<int> magnitude_order(const Eigen::VectorXd& z) {
    std::vector<int> order(z.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&z](int a, int b) { return std::abs(z[a]) > std::abs(z[b]); });
    return order;
}

}  // namespace

DmoResult heuristic_dmo(const Eigen::VectorXd& z, const SubgraphModel& model) {
    const int d = model.graph.d;
    if (z.size() != d) throw std::invalid_argument("heuristic_dmo: z length != d");

    auto order = magnitude_order(z);
    std::vector<char> in_set(d, 0);
    int size = 0;
    for (int k = 0; k < model.g; ++k) {
        in_set[order[k]] = 1;
        ++size;
    }

    // Neighbor-visiting sweeps over edges in ascending (u,v) order; repeat
    // until no node is absorbed or the sparsity budget is exhausted.
    bool grew = true;
    while (grew && size < model.s) {
        grew = false;
        for (const auto& [u, v] : model.graph.edges) {
            if (in_set[u] != in_set[v]) {
                in_set[in_set[u] ? v : u] = 1;
                ++size;
                grew = true;
                if (size == model.s) break;
            }
        }
    }

    std::vector<int> idx;
    idx.reserve(size);
    for (int i = 0; i < d; ++i)
        if (in_set[i]) idx.push_back(i);
    Support support(std::move(idx));

    double delta = std::sqrt(1.0 / std::ceil(static_cast<double>(model.s) / model.g));
    return {Support(support), masked_norm(z, support), delta};
}

DmoResult top_s_dmo(const Eigen::VectorXd& z, int s) {
    if (s < 1 || s > z.size()) throw std::invalid_argument("top_s_dmo: need 1 <= s <= d");
    auto order = magnitude_order(z);
    order.resize(s);
    Support support(std::move(order));
    return {Support(support), masked_norm(z, support), 1.0};
}

DmoResult degraded_ksupport_dmo(const Eigen::VectorXd& z, int s, double delta,
                                CounterRng& rng) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("degraded_ksupport_dmo: delta must be in (0,1]");
    if (delta == 1.0) return top_s_dmo(z, s);

    DmoResult exact = top_s_dmo(z, s);
    const double threshold = delta * exact.dual_value;

    auto order = magnitude_order(z);
    // Min-norm start: the s smallest magnitudes.
    std::vector<int> current(order.end() - s, order.end());
    std::sort(current.begin(), current.end());

    // Swap in exact-oracle elements (cycling over S*) until the dual value
    // crosses the threshold. The removal victim is uniform over the current
    // set, so previously added elements can be evicted again; the iteration
    // cap only guards against the resulting (vanishing-probability) walks.
    const int max_swaps = 1000 * s;
    for (int iter = 0; iter < max_swaps; ++iter) {
        double norm = masked_norm(z, Support(std::vector<int>(current)));
        if (norm >= threshold) return {Support(std::move(current)), norm, delta};
        int victim = static_cast<int>(rng.next_below(current.size()));
        current.erase(current.begin() + victim);
        int incoming = exact.support.indices[iter % s];
        auto pos = std::lower_bound(current.begin(), current.end(), incoming);
        if (pos == current.end() || *pos != incoming) current.insert(pos, incoming);
    }
    Support support(std::move(current));
    double norm = masked_norm(z, support);
    return {Support(support), norm, delta};
}

DmoResult brute_force_dmo(const Eigen::VectorXd& z, const SubgraphModel& model) {
    auto best = brute_force_best_support(z, model);
    return {best.support, best.value, 1.0};
}

Eigen::VectorXd support_to_vertex(const Eigen::VectorXd& z, const Support& support, double C) {
    double norm = masked_norm(z, support);
    if (norm == 0.0) throw std::domain_error("support_to_vertex: ||z_S||_2 = 0");
    Eigen::VectorXd v = Eigen::VectorXd::Zero(z.size());
    for (int i : support.indices) v[i] = C * z[i] / norm;
    return v;
}

bool verify_ipo(const Eigen::VectorXd& z, const Eigen::VectorXd& v, double delta,
                const SubgraphModel& model, double tol) {
    auto best = brute_force_best_support(z, model);
    double exact_min = -model.C * best.value;
    return z.dot(v) <= delta * exact_min + tol;
}

OracleSpec OracleSpec::parse(const std::string& text) {
    OracleSpec spec;
    if (text == "heuristic") {
        spec.kind = OracleKind::Heuristic;
    } else if (text == "top-s") {
        spec.kind = OracleKind::TopS;
    } else if (text == "brute") {
        spec.kind = OracleKind::BruteForce;
    } else if (text.rfind("ksupport:", 0) == 0) {
        spec.kind = OracleKind::DegradedKSupport;
        spec.delta = std::stod(text.substr(9));
        if (!(spec.delta > 0.0 && spec.delta <= 1.0))
            throw std::invalid_argument("oracle: ksupport delta must be in (0,1]");
    } else {
        throw std::invalid_argument("unknown oracle: " + text);
    }
    return spec;
}

std::string OracleSpec::describe() const {
    switch (kind) {
        case OracleKind::Heuristic: return "heuristic";
        case OracleKind::TopS: return "top-s";
        case OracleKind::DegradedKSupport: return "ksupport:" + std::to_string(delta);
        case OracleKind::BruteForce: return "brute";
        case OracleKind::External: return "external:" + name;
    }
    return "?";
}

DmoFn make_oracle(const OracleSpec& spec, CounterRng& rng) {
    switch (spec.kind) {
        case OracleKind::Heuristic:
            return [](const Eigen::VectorXd& z, const SubgraphModel& m) {
                return heuristic_dmo(z, m);
            };
        case OracleKind::TopS:
            return [](const Eigen::VectorXd& z, const SubgraphModel& m) {
                return top_s_dmo(z, m.s);
            };
        case OracleKind::DegradedKSupport: {
            double delta = spec.delta;
            CounterRng* stream = &rng;
            return [delta, stream](const Eigen::VectorXd& z, const SubgraphModel& m) {
                return degraded_ksupport_dmo(z, m.s, delta, *stream);
            };
        }
        case OracleKind::BruteForce:
            return [](const Eigen::VectorXd& z, const SubgraphModel& m) {
                return brute_force_dmo(z, m);
            };
        case OracleKind::External:
            if (!spec.external) throw std::invalid_argument("external oracle not bound");
            return spec.external;
    }
    throw std::invalid_argument("unknown oracle kind");
}

DmoCheckReport dmo_property_check(int trials, std::uint64_t seed, int max_d) {
    if (trials < 1) throw std::invalid_argument("dmo_property_check: trials must be >= 1");
    if (max_d < 4) throw std::invalid_argument("dmo_property_check: max_d must be >= 4");
    CounterRng rng(seed);
    DmoCheckReport report;
    report.trials = trials;
    report.min_margin = std::numeric_limits<double>::infinity();

    for (int trial = 0; trial < trials; ++trial) {
        Graph graph;
        switch (rng.next_below(3)) {
            case 0:
                graph = Graph::path(4 + static_cast<int>(rng.next_below(max_d - 3)));
                break;
            case 1: {
                int w = 2 + static_cast<int>(rng.next_below(3));
                int h = 2 + static_cast<int>(rng.next_below(max_d / w - 1));
                graph = Graph::grid(w, std::min(h, max_d / w));
                break;
            }
            default: {
                int d = 4 + static_cast<int>(rng.next_below(max_d - 3));
                std::vector<std::pair<int, int>> edges;
                for (int u = 0; u < d; ++u)
                    for (int v = u + 1; v < d; ++v)
                        if (rng.next_uniform() < 0.3) edges.emplace_back(u, v);
                graph = Graph::from_edges(d, std::move(edges));
            }
        }
        const int d = graph.d;
        int s = 1 + static_cast<int>(rng.next_below(d));
        int g = 1 + static_cast<int>(rng.next_below(s));
        SubgraphModel model(graph, s, g, 1.0);

        Eigen::VectorXd z(d);
        for (int i = 0; i < d; ++i)
            z[i] = (rng.next_uniform() < 0.2) ? 0.0 : rng.next_normal();

        DmoResult heur = heuristic_dmo(z, model);
        BestSupport best = brute_force_best_support(z, model);
        double margin = heur.dual_value - heur.delta_guarantee * best.value;
        report.min_margin = std::min(report.min_margin, margin);
        if (margin < -1e-12) ++report.guarantee_violations;
        if (heur.dual_value > 0.0) {
            Eigen::VectorXd v = support_to_vertex(z, heur.support, model.C);
            if (!verify_ipo(-z, v, heur.delta_guarantee, model)) ++report.ipo_violations;
        }
    }
    return report;
}

}  // namespace gfw
