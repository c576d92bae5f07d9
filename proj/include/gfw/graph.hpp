#ifndef GFW_GRAPH_HPP
#define GFW_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace gfw {

/// Undirected graph on nodes 0..d-1. Edges are stored as (u,v) with u < v,
/// sorted and duplicate-free; adjacency lists are derived and sorted.
struct Graph {
    int d = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency;

    static Graph from_edges(int d, std::vector<std::pair<int, int>> edges);
    static Graph grid(int width, int height);  // 4-neighborhood
    static Graph path(int d);
    static Graph complete(int d);
    static Graph edgeless(int d);

    // Edge-list text format: header "d=<n>", then one "u v" pair per line.
    static Graph load(const std::string& path);
    void save(const std::string& path) const;
};

/// Sorted, duplicate-free index subset of {0,...,d-1}.
struct Support {
    std::vector<int> indices;

    Support() = default;
    explicit Support(std::vector<int> idx);

    int size() const { return static_cast<int>(indices.size()); }
    bool empty() const { return indices.empty(); }
    bool contains(int i) const;
    bool operator==(const Support& other) const { return indices == other.indices; }
    // Lexicographic order on the sorted index lists.
    bool operator<(const Support& other) const { return indices < other.indices; }
};

/// Parameters (s, g) of the g-subgraph structure model together with the
/// Euclidean radius C of the support-set hull.
struct SubgraphModel {
    Graph graph;
    int s = 1;  // max support size
    int g = 1;  // max number of connected components
    double C = 1.0;

    SubgraphModel() = default;
    SubgraphModel(Graph graph, int s, int g, double C);

    // Cardinality model {S : |S| <= s}: edgeless graph, g = s.
    static SubgraphModel cardinality(int d, int s, double C);
};

/// Maximal connected subsets of the induced subgraph G[S], each sorted,
/// ordered by smallest member. Throws std::invalid_argument on bad indices.
std::vector<Support> connected_components(const Graph& graph, const Support& support);

/// True iff |S| <= s and G[S] has at most g connected components.
/// The empty support is a member.
bool is_member(const Support& support, const SubgraphModel& model);

struct BestSupport {
    Support support;
    double value = 0.0;  // ||z_S||_2
};

/// Exact maximizer of ||z_S||_2 over all model members, by exhaustive subset
/// enumeration. Ties broken by lexicographically smallest support (so the
/// empty support wins when z = 0). Test-only oracle: refuses d > cap.
BestSupport brute_force_best_support(const Eigen::VectorXd& z, const SubgraphModel& model,
                                     int cap = 20);

}  // namespace gfw

#endif
