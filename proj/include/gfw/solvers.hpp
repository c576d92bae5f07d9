#ifndef GFW_SOLVERS_HPP
#define GFW_SOLVERS_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gfw/graph.hpp"
#include "gfw/objectives.hpp"
#include "gfw/oracles.hpp"

namespace gfw {

enum class Variant { DmoFw, DmoAccFw };
enum class StepOption { I, II };

struct SolverConfig {
    Variant variant = Variant::DmoFw;
    StepOption option = StepOption::I;
    double delta = 1.0;  // oracle approximation factor, scales Option II updates
    double L = 1.0;      // smoothness constant (AccFW dual vector, IHT step)
    double C = 1.0;      // radius of the support-set hull
    int max_iter = 100;
    std::uint64_t seed = 0;
    OracleSpec oracle;
    Eigen::VectorXd x0;  // empty means 0

    void validate() const;
};

struct TraceRow {
    int t = 0;
    double f = 0.0;
    double h = std::numeric_limits<double>::quiet_NaN();        // f - f_star when known
    double grad_inf = 0.0;                                      // ||grad f(x_t)||_inf
    double gap = std::numeric_limits<double>::quiet_NaN();      // <grad, x_t - v_t>
    double est_err = std::numeric_limits<double>::quiet_NaN();  // ||x_t - x~*|| when known
    int nnz = 0;
    double xg = 0.0;  // <x_t, grad f(x_t)>, feeds the A_t bound sequence
};

struct IterateTrace {
    std::vector<TraceRow> rows;
    int best_index = 0;  // argmin_t f(x_t) over recorded rows
    double best_f = 0.0;
    Eigen::VectorXd x_final;
    Eigen::VectorXd x_best;
    double wall_seconds = 0.0;
    std::vector<std::pair<std::string, std::string>> meta;

    const TraceRow& final_row() const { return rows.back(); }
};

struct StepDetail {
    Eigen::VectorXd x_next;
    Eigen::VectorXd vertex;  // v_t (zero when degenerate)
    Support support;
    double gap = std::numeric_limits<double>::quiet_NaN();
    bool degenerate = false;
};

/// One update of the FW-type iteration (Option I inside the hull, Option II
/// over the delta-relaxed hull), step size eta = 2/(t+2). The dual vector is
/// -grad f(x) for the plain variant and the projection target
/// x - grad f(x)/(L*eta) for the accelerated variant; the vertex aligns with
/// the dual vector on the oracle support. A zero dual vector is treated as
/// stationary; a zero restriction with a nonzero dual vector falls back to
/// `prev_vertex` when given.
StepDetail fw_step_detail(const Eigen::VectorXd& x, int t, const SolverConfig& config,
                          const Objective& obj, const SubgraphModel& model,
                          const DmoFn& oracle, const Eigen::VectorXd* prev_vertex = nullptr);

Eigen::VectorXd fw_step(const Eigen::VectorXd& x, int t, const SolverConfig& config,
                        const Objective& obj, const SubgraphModel& model,
                        const DmoFn& oracle);

/// Full solver run with per-iteration trace capture. Rows are recorded for
/// t = 0..max_iter inclusive.
IterateTrace run(const SolverConfig& config, const Objective& obj, const SubgraphModel& model,
                 const Eigen::VectorXd* x_tilde_star = nullptr, const double* f_star = nullptr);

/// Generalized matching pursuit: atom from the oracle on -grad, exact
/// line-search step against curvature L, clipped at 0.
IterateTrace gen_mp(const Objective& obj, const SubgraphModel& model, const OracleSpec& oracle,
                    int max_iter, double L, std::uint64_t seed = 0,
                    const Eigen::VectorXd* x_tilde_star = nullptr,
                    const double* f_star = nullptr);

enum class IhtThresholding { TopS, HeuristicDmo };

/// Iterative hard thresholding: gradient step 1/L, support selected on the
/// stepped vector, rescaled into the C-ball when violated.
IterateTrace iht(const Objective& obj, const SubgraphModel& model, double L, int max_iter,
                 IhtThresholding thresholding,
                 const Eigen::VectorXd* x_tilde_star = nullptr, const double* f_star = nullptr);

/// CoSaMP with plain top-s thresholding: 2s proxy support, merged
/// least-squares solve (ridge 1e-12), prune to s.
IterateTrace cosamp_lite(const LeastSquares& obj, int s, int max_iter,
                         const Eigen::VectorXd* x_tilde_star = nullptr,
                         const double* f_star = nullptr);

/// CSV with fixed column order t,f,h,grad_inf,gap,est_err,nnz; doubles are
/// written with %.17g so repeated runs are byte-identical.
void write_trace_csv(const IterateTrace& trace, std::ostream& out);
void write_trace_csv(const IterateTrace& trace, const std::string& path);

/// "key: value" sidecar with config, seed, oracle kind, delta, L, C.
void write_meta(const IterateTrace& trace, std::ostream& out);
void write_meta(const IterateTrace& trace, const std::string& path);

std::string format_double(double v);  // %.17g, shared by all CSV writers

}  // namespace gfw

#endif
