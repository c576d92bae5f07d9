#ifndef GFW_ORACLES_HPP
#define GFW_ORACLES_HPP

#include <functional>
#include <string>

#include <Eigen/Core>

#include "gfw/graph.hpp"
#include "gfw/rng.hpp"

namespace gfw {

/// Result of a dual maximization oracle call: a model support S, the dual
/// value ||z_S||_2 it achieves, and the approximation factor the oracle
/// promises relative to the best member support.
struct DmoResult {
    Support support;
    double dual_value = 0.0;
    double delta_guarantee = 1.0;
};

enum class OracleKind { Heuristic, TopS, DegradedKSupport, BruteForce, External };

/// Top-g seeds + repeated neighbor-visiting sweeps. Seeds are the g largest
/// magnitudes (ties: lower index); edges are swept in ascending (u,v) order
/// and any node adjacent to the current set is absorbed until |S| = s or a
/// fixed point is reached. Guarantee delta = sqrt(1 / ceil(s/g)).
DmoResult heuristic_dmo(const Eigen::VectorXd& z, const SubgraphModel& model);

/// Exact oracle for the cardinality model {S : |S| <= s}; delta = 1.
DmoResult top_s_dmo(const Eigen::VectorXd& z, int s);

/// Deliberately degraded k-support oracle: starts from the s smallest
/// magnitudes and swaps in elements of the exact top-s set (removing a
/// random element each time) until the dual value crosses
/// delta * ||z_{S*}||_2. delta = 1 short-circuits to top_s_dmo.
DmoResult degraded_ksupport_dmo(const Eigen::VectorXd& z, int s, double delta,
                                CounterRng& rng);

/// Exhaustive oracle backed by brute_force_best_support; delta = 1.
DmoResult brute_force_dmo(const Eigen::VectorXd& z, const SubgraphModel& model);

/// The vertex C * z_S / ||z_S||_2 induced by a support.
/// Throws std::domain_error when ||z_S||_2 = 0.
Eigen::VectorXd support_to_vertex(const Eigen::VectorXd& z, const Support& support, double C);

/// Checks <z, v> <= delta * min_{s in D} <z, s>, the exact minimum being
/// -C * ||z_{S*}||_2 from the brute-force oracle. Test utility; subject to
/// the brute-force enumeration cap.
bool verify_ipo(const Eigen::VectorXd& z, const Eigen::VectorXd& v, double delta,
                const SubgraphModel& model, double tol = 1e-12);

using DmoFn = std::function<DmoResult(const Eigen::VectorXd&, const SubgraphModel&)>;

/// Oracle selection for solver configs and the CLI
/// (`--oracle {heuristic|top-s|ksupport:<delta>|brute}`).
struct OracleSpec {
    OracleKind kind = OracleKind::Heuristic;
    double delta = 1.0;       // target delta for DegradedKSupport
    std::string name;         // External only
    DmoFn external;           // External only; caller supplies delta_guarantee

    static OracleSpec parse(const std::string& text);
    std::string describe() const;
};

/// Bind an OracleSpec to a callable. The degraded oracle draws from `rng`,
/// which must outlive the returned function.
DmoFn make_oracle(const OracleSpec& spec, CounterRng& rng);

/// Property battery over random small instances (paths, grids, random
/// graphs, d <= max_d): the heuristic oracle must clear its stated
/// approximation factor against brute force, and the induced vertex must
/// pass verify_ipo. `min_margin` is the smallest observed slack
/// ||z_S|| - delta * ||z_{S*}||.
struct DmoCheckReport {
    int trials = 0;
    int guarantee_violations = 0;
    int ipo_violations = 0;
    double min_margin = 0.0;
};

DmoCheckReport dmo_property_check(int trials, std::uint64_t seed, int max_d = 12);

}  // namespace gfw

#endif
