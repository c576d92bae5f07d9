#include "gfw/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gfw {

Graph Graph::from_edges(int d, std::vector<std::pair<int, int>> edges) {
    if (d < 1) throw std::invalid_argument("Graph: d must be >= 1");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u < 0 || v < 0 || u >= d || v >= d)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge");

    Graph g;
    g.d = d;
    g.edges = std::move(edges);
    g.adjacency.assign(d, {});
    for (const auto& [u, v] : g.edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

Graph Graph::grid(int width, int height) {
    if (width < 1 || height < 1) throw std::invalid_argument("grid: dims must be >= 1");
    std::vector<std::pair<int, int>> edges;
    auto id = [width](int r, int c) { return r * width + c; };
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c) {
            if (c + 1 < width) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < height) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return from_edges(width * height, std::move(edges));
}

Graph Graph::path(int d) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < d; ++i) edges.emplace_back(i, i + 1);
    return from_edges(d, std::move(edges));
}

Graph Graph::complete(int d) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v) edges.emplace_back(u, v);
    return from_edges(d, std::move(edges));
}

Graph Graph::edgeless(int d) { return from_edges(d, {}); }

Graph Graph::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::string line;
    int d = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("d=", 0) == 0) {
            d = std::stoi(line.substr(2));
            continue;
        }
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("bad edge line: " + line);
        edges.emplace_back(u, v);
    }
    if (d < 1) throw std::invalid_argument("graph file missing d=<n> header");
    return from_edges(d, std::move(edges));
}

void Graph::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write graph file: " + path);
    out << "d=" << d << "\n";
    for (const auto& [u, v] : edges) out << u << " " << v << "\n";
}

Support::Support(std::vector<int> idx) : indices(std::move(idx)) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
}

bool Support::contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

SubgraphModel::SubgraphModel(Graph graph_, int s_, int g_, double C_)
    : graph(std::move(graph_)), s(s_), g(g_), C(C_) {
    if (!(1 <= g && g <= s && s <= graph.d))
        throw std::invalid_argument("SubgraphModel: need 1 <= g <= s <= d");
    if (!(C > 0)) throw std::invalid_argument("SubgraphModel: C must be positive");
}

SubgraphModel SubgraphModel::cardinality(int d, int s, double C) {
    return SubgraphModel(Graph::edgeless(d), s, s, C);
}

std::vector<Support> connected_components(const Graph& graph, const Support& support) {
    for (int i : support.indices)
        if (i < 0 || i >= graph.d) throw std::invalid_argument("support index out of range");

    std::vector<char> in_support(graph.d, 0), visited(graph.d, 0);
    for (int i : support.indices) in_support[i] = 1;

    std::vector<Support> components;
    std::vector<int> stack;
    for (int start : support.indices) {
        if (visited[start]) continue;
        std::vector<int> comp;
        stack.push_back(start);
        visited[start] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : graph.adjacency[u])
                if (in_support[v] && !visited[v]) {
                    visited[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(Support(std::move(comp)));
    }
    // support.indices is sorted, so components come out ordered by smallest member
    return components;
}

bool is_member(const Support& support, const SubgraphModel& model) {
    if (support.size() > model.s) return false;
    if (support.empty()) return true;
    return static_cast<int>(connected_components(model.graph, support).size()) <= model.g;
}

namespace {

// Connected-component count of the induced subgraph over a node bitmask,
// using precomputed per-node neighbor bitmasks. d <= 20 only.
int component_count(std::uint32_t mask, const std::vector<std::uint32_t>& nbr) {
    int count = 0;
    std::uint32_t remaining = mask;
    while (remaining) {
        ++count;
        std::uint32_t frontier = remaining & (~remaining + 1);  // lowest set bit
        std::uint32_t comp = 0;
        while (frontier) {
            comp |= frontier;
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= nbr[u];
            }
            frontier = next & mask & ~comp;
        }
        remaining &= ~comp;
    }
    return count;
}

}  // namespace

BestSupport brute_force_best_support(const Eigen::VectorXd& z, const SubgraphModel& model,
                                     int cap) {
    const int d = model.graph.d;
    if (z.size() != d) throw std::invalid_argument("brute_force_best_support: z length != d");
    if (d > cap)
        throw std::invalid_argument("brute_force_best_support: d exceeds enumeration cap");

    std::vector<std::uint32_t> nbr(d, 0);
    for (const auto& [u, v] : model.graph.edges) {
        nbr[u] |= std::uint32_t{1} << v;
        nbr[v] |= std::uint32_t{1} << u;
    }
    std::vector<double> z2(d);
    for (int i = 0; i < d; ++i) z2[i] = z[i] * z[i];

    // Empty support is a member with value 0 and is the lexicographic minimum.
    std::uint32_t best_mask = 0;
    double best_val2 = 0.0;

    auto lex_less = [](std::uint32_t a, std::uint32_t b) {
        // Lexicographic comparison of the sorted index lists (a proper prefix
        // is smaller, so the empty support beats any singleton on ties).
        std::uint32_t diff = a ^ b;
        if (!diff) return false;
        int i = std::countr_zero(diff);
        std::uint32_t above = ~((std::uint32_t{2} << i) - 1);
        if ((a >> i) & 1) return (b & above) != 0;
        return (a & above) == 0;
    };

    const std::uint32_t total = std::uint32_t{1} << d;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (std::popcount(mask) > model.s) continue;
        if (component_count(mask, nbr) > model.g) continue;
        double val2 = 0.0;
        for (std::uint32_t m = mask; m; m &= m - 1) val2 += z2[std::countr_zero(m)];
        if (val2 > best_val2 || (val2 == best_val2 && lex_less(mask, best_mask))) {
            best_val2 = val2;
            best_mask = mask;
        }
    }

    std::vector<int> idx;
    for (std::uint32_t m = best_mask; m; m &= m - 1) idx.push_back(std::countr_zero(m));
    return {Support(std::move(idx)), std::sqrt(best_val2)};
}

}  // namespace gfw
