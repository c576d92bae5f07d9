#ifndef GFW_EXPERIMENTS_HPP
#define GFW_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gfw/graph.hpp"
#include "gfw/objectives.hpp"
#include "gfw/solvers.hpp"

namespace gfw {

/// i.i.d. N(0, 1/n) entries (std 1/sqrt(n)), drawn row-major from the
/// counter-based generator so the stream order is fixed.
Eigen::MatrixXd gen_gaussian_matrix(int n, int d, std::uint64_t seed);

/// y = A x + e with e ~ N(0, sigma^2 I); sigma = 0 adds nothing and draws
/// nothing.
Eigen::VectorXd gen_measurements(const Eigen::MatrixXd& A, const Eigen::VectorXd& x,
                                 double sigma, std::uint64_t seed);

struct GridSignal {
    Graph graph;
    Eigen::VectorXd signal;  // unit norm
    int width = 0;
    int height = 0;
    int components = 0;
};

/// Unit-norm signal on a width x height grid whose support is grown by
/// seeded random BFS into (at most) `g` connected blobs of total size
/// `support_size`, with i.i.d. positive values.
GridSignal gen_grid_signal(int width, int height, int support_size, int g, std::uint64_t seed);

/// Whitespace-separated intensity matrix; entries above `threshold` form the
/// support, the rest are zeroed, and the result is normalized.
GridSignal load_grid_image(const std::string& path, double threshold);

enum class Algo { Fw, AccFw, GenMp, Iht, CosampLite };

struct SolverEntry {
    std::string name;
    Algo algo = Algo::Fw;
    StepOption option = StepOption::I;
    OracleSpec oracle;                  // also selects IHT thresholding
    double delta = 0.0;                 // 0 means derive from the oracle

    /// Text form: "fw:I:heuristic", "accfw:II:ksupport:0.5", "iht:top-s",
    /// "gen-mp:heuristic", "cosamp".
    static SolverEntry parse(const std::string& name, const std::string& text);
};

/// Approximation factor implied by an oracle on a given model: heuristic ->
/// sqrt(1/ceil(s/g)); degraded -> its target delta; exact oracles -> 1.
double resolve_delta(const OracleSpec& spec, const SubgraphModel& model);

struct ExperimentConfig {
    std::string name = "custom";
    int grid_width = 32;
    int grid_height = 32;
    std::string image_file;  // overrides the synthetic signal when set
    double image_threshold = 0.5;
    int support_size = 50;
    int g = 1;
    double sampling_ratio = 2.5;  // n = round(ratio * |supp|)
    double sigma = 0.0;
    double C = 1.0;
    int trials = 20;
    std::uint64_t seed = 1;
    int max_iter = 200;
    std::optional<double> L;  // unset -> estimate_L per trial
    std::string out_dir;      // empty -> nothing written
    std::vector<SolverEntry> solvers;

    void validate() const;

    /// Built-in recipes: "fig4-desk" (32x32 grid, 5 solvers) and
    /// "fig3-desk" (16x16 grid, plain vs accelerated).
    static ExperimentConfig recipe(const std::string& name);

    /// Flat key=value text with [problem], [run], [solvers] sections.
    static ExperimentConfig load(const std::string& path);
};

struct TrialRecord {
    bool failed = false;
    std::string error;
    double final_h = std::numeric_limits<double>::quiet_NaN();
    double final_err = std::numeric_limits<double>::quiet_NaN();
};

struct SolverSummary {
    std::string name;
    double median_h = 0.0, iqr_h = 0.0;
    double median_err = 0.0, iqr_err = 0.0;
    int failures = 0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<std::vector<TrialRecord>> records;  // [solver][trial]
    std::vector<std::vector<IterateTrace>> traces;  // [solver][trial]
    std::vector<SolverSummary> summary;
    std::vector<std::pair<std::string, std::string>> verdicts;
};

/// Runs trials sequentially (each trial owns its problem and outputs; order
/// cannot affect results), writes per-run trace CSVs plus summary.csv and
/// meta.txt when out_dir is set. Solver failures are recorded per trial.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Cardinality-model sweep over oracle quality: planted sign signal of size
/// `signal_support` in dimension d, n measurements, k-support model with
/// sparsity s, one degraded-oracle run per delta per trial.
struct KSupportConfig {
    int n = 200;
    int d = 500;
    int signal_support = 50;
    int s = 5;
    double C = 1.0;
    std::vector<double> deltas = {0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
    int max_iter = 1000;
    int trials = 20;
    std::uint64_t seed = 1;
    std::string out_dir;
};

struct KSupportResult {
    KSupportConfig config;
    std::vector<std::vector<IterateTrace>> traces;  // [trial][delta]
    std::vector<double> f_ref;                      // per-trial reference value
};

KSupportResult run_ksupport_sweep(const KSupportConfig& config);

/// Least-squares slope of log h against log t over rows with t in
/// [t_lo, t_hi] and h > 0; NaN when fewer than two usable rows.
double fitted_loglog_slope(const IterateTrace& trace, int t_lo, int t_hi);

/// Linear-interpolation quantile of the finite entries; NaN when empty.
double quantile(std::vector<double> values, double q);
double median_of(const std::vector<double>& values);
double iqr_of(const std::vector<double>& values);

}  // namespace gfw

#endif
