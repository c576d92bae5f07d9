#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfw/adversarial.hpp"
#include "gfw/experiments.hpp"
#include "gfw/theory.hpp"

namespace {

constexpr int kExitInvariant = 2;
constexpr int kExitInput = 3;

int cmd_recover(const std::string& config_arg, std::optional<std::uint64_t> seed,
                std::optional<int> trials, const std::string& out,
                const std::string& oracle_override) {
    gfw::ExperimentConfig cfg = std::filesystem::exists(config_arg)
                                    ? gfw::ExperimentConfig::load(config_arg)
                                    : gfw::ExperimentConfig::recipe(config_arg);
    if (seed) cfg.seed = *seed;
    if (trials) cfg.trials = *trials;
    if (!out.empty()) cfg.out_dir = out;
    if (!oracle_override.empty()) {
        gfw::OracleSpec spec = gfw::OracleSpec::parse(oracle_override);
        for (gfw::SolverEntry& entry : cfg.solvers)
            if (entry.algo == gfw::Algo::Fw || entry.algo == gfw::Algo::AccFw ||
                entry.algo == gfw::Algo::GenMp)
                entry.oracle = spec;
    }

    gfw::ExperimentResult res = gfw::run_experiment(cfg);
    std::cout << "experiment: " << cfg.name << " (seed " << cfg.seed << ", " << cfg.trials
              << " trials)\n";
    std::cout << "solver,median_h,iqr_h,median_est_err,iqr_est_err,failures\n";
    for (const gfw::SolverSummary& s : res.summary)
        std::cout << s.name << ',' << gfw::format_double(s.median_h) << ','
                  << gfw::format_double(s.iqr_h) << ',' << gfw::format_double(s.median_err)
                  << ',' << gfw::format_double(s.iqr_err) << ',' << s.failures << '\n';
    for (const auto& [key, value] : res.verdicts) std::cout << key << ": " << value << '\n';
    for (const auto& per_solver : res.records)
        for (const gfw::TrialRecord& r : per_solver)
            if (r.failed) std::cerr << "trial failure: " << r.error << '\n';
    return 0;
}

int cmd_ksupport(std::uint64_t seed, int trials, int iters, const std::string& out) {
    gfw::KSupportConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.max_iter = iters;
    cfg.out_dir = out;
    gfw::KSupportResult res = gfw::run_ksupport_sweep(cfg);

    std::cout << "delta,median_final_h\n";
    for (std::size_t k = 0; k < cfg.deltas.size(); ++k) {
        std::vector<double> finals;
        for (int trial = 0; trial < cfg.trials; ++trial)
            finals.push_back(res.traces[trial][k].final_row().h);
        std::cout << gfw::format_double(cfg.deltas[k]) << ','
                  << gfw::format_double(gfw::median_of(finals)) << '\n';
    }

    int exact_wins = 0;
    for (int trial = 0; trial < cfg.trials; ++trial)
        if (res.traces[trial].back().final_row().f < res.traces[trial].front().final_row().f)
            ++exact_wins;
    std::cout << "exact_below_worst: " << exact_wins << "/" << cfg.trials << '\n';
    return 0;
}

int cmd_adversarial(int tau_points) {
    bool ok = true;
    std::cout << "tau,additive_violation,multiplicative_gap,dmo_ratio\n";
    for (int i = 1; i <= tau_points; ++i) {
        double tau = 0.5 * i / (tau_points + 1);
        gfw::AdversarialInstance inst = gfw::build_grid_instance(tau);
        double add = gfw::gap_additive_violation(inst, gfw::one_wrong_vertex(inst));
        double mult = gfw::gap_multiplicative_violation(inst);
        double ratio = gfw::one_wrong_dmo_ratio(inst);
        double root = std::sqrt(0.75 + tau * tau);
        std::cout << gfw::format_double(tau) << ',' << gfw::format_double(add) << ','
                  << gfw::format_double(mult) << ',' << gfw::format_double(ratio) << '\n';
        if (!(add > 0.0) || std::abs(add - (1.0 - root)) > 1e-12) ok = false;
        if (!(mult < 0.0) || std::abs(mult - (root - 1.0)) > 1e-12) ok = false;
        if (std::abs(ratio - root) > 1e-12 || ratio < 0.75 + tau * tau) ok = false;
    }

    gfw::PathProbeInstance probe = gfw::build_path_probe_instance(0.5);
    const gfw::PathProbeReport& rep = probe.report;
    std::cout << "probe_optimal: " << gfw::format_double(rep.optimal_value) << '\n'
              << "probe_best_wrong: " << gfw::format_double(rep.best_wrong_value) << '\n'
              << "probe_additive_violation: " << gfw::format_double(rep.additive_violation)
              << '\n'
              << "probe_certified_gap: " << gfw::format_double(rep.certified_gap) << '\n'
              << "probe_heuristic_ratio: " << gfw::format_double(rep.heuristic_ratio) << '\n';
    if (std::abs(rep.optimal_value + 2.0) > 1e-12) ok = false;
    if (std::abs(rep.best_wrong_value + std::sqrt(3.25)) > 1e-12) ok = false;
    if (!(rep.additive_violation > 0.0) || !(rep.certified_gap < 0.0)) ok = false;

    std::cout << "certification: " << (ok ? "pass" : "FAIL") << '\n';
    return ok ? 0 : kExitInvariant;
}

struct ParsedTrace {
    std::vector<int> t;
    std::vector<double> h;
};

ParsedTrace read_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("bounds: cannot read " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("t,f,h,", 0) != 0)
        throw std::invalid_argument("bounds: not a trace CSV: " + path);
    ParsedTrace out;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() < 3) throw std::invalid_argument("bounds: short row in " + path);
        out.t.push_back(std::stoi(cells[0]));
        out.h.push_back(std::stod(cells[2]));
    }
    if (out.t.empty()) throw std::invalid_argument("bounds: empty trace " + path);
    return out;
}

int cmd_bounds(const std::string& trace_path, gfw::BoundParams params, double A_flag,
               double h0_flag, const std::string& out_path) {
    ParsedTrace trace = read_trace(trace_path);

    if (h0_flag >= 0.0)
        params.h0 = h0_flag;
    else if (std::isfinite(trace.h.front()))
        params.h0 = std::max(trace.h.front(), 0.0);
    else
        throw std::invalid_argument("bounds: trace has no h column values; pass --h0");
    // Scalar A_t cap; 8LC^2 is the exact-oracle floor of the adaptive sequence.
    params.A = (A_flag > 0.0) ? A_flag : 8.0 * params.L * params.C * params.C;

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::invalid_argument("bounds: cannot write " + out_path);
        out = &file;
    }

    *out << "t,h,fw1,fw2";
    if (params.mu) *out << ",accfw_boundary,accfw_interior,accfw2";
    if (params.B > 0.0) *out << ",envelope_decay,envelope_const";
    *out << '\n';
    for (std::size_t i = 0; i < trace.t.size(); ++i) {
        int t = trace.t[i];
        if (t < 1) continue;
        *out << t << ',' << gfw::format_double(trace.h[i]) << ','
             << gfw::format_double(gfw::bound_fw1(t, params)) << ','
             << gfw::format_double(gfw::bound_fw2(t, params));
        if (params.mu)
            *out << ',' << gfw::format_double(gfw::bound_accfw_boundary(t, params)) << ','
                 << gfw::format_double(gfw::bound_accfw_interior(t, params)) << ','
                 << gfw::format_double(gfw::bound_accfw2(t, params));
        if (params.B > 0.0)
            *out << ',' << gfw::format_double(gfw::bound_practical(t, params, true)) << ','
                 << gfw::format_double(gfw::bound_practical(t, params, false));
        *out << '\n';
    }
    return 0;
}

int cmd_dmo_check(int trials, std::uint64_t seed) {
    gfw::DmoCheckReport report = gfw::dmo_property_check(trials, seed);
    std::cout << "trials: " << report.trials << '\n'
              << "guarantee_violations: " << report.guarantee_violations << '\n'
              << "ipo_violations: " << report.ipo_violations << '\n'
              << "min_margin: " << gfw::format_double(report.min_margin) << '\n';
    return (report.guarantee_violations == 0 && report.ipo_violations == 0) ? 0
                                                                            : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate Frank-Wolfe over graph-structured supports"};
    app.require_subcommand(1);

    std::string config_arg, out, oracle_override;
    std::optional<std::uint64_t> seed_opt;
    std::optional<int> trials_opt;
    auto* recover = app.add_subcommand("recover", "Run a sensing experiment config or recipe");
    recover->add_option("--config", config_arg, "Config file path or recipe name")->required();
    recover->add_option("--seed", seed_opt, "Master seed override");
    recover->add_option("--trials", trials_opt, "Trial count override");
    recover->add_option("--out", out, "Output directory");
    recover->add_option("--oracle", oracle_override,
                        "Oracle override (heuristic|top-s|ksupport:<delta>|brute)");

    std::uint64_t ks_seed = 1;
    int ks_trials = 20, ks_iters = 1000;
    std::string ks_out;
    auto* ksupport = app.add_subcommand("ksupport-fig",
                                        "Oracle-quality sweep on the k-support model");
    ksupport->add_option("--seed", ks_seed, "Master seed");
    ksupport->add_option("--trials", ks_trials, "Trial count");
    ksupport->add_option("--iters", ks_iters, "Iterations per run");
    ksupport->add_option("--out", ks_out, "Output directory");

    int tau_points = 50;
    auto* adversarial = app.add_subcommand("adversarial",
                                           "Certify the gap-oracle failure instances");
    adversarial->add_option("--tau-grid", tau_points, "Number of tau samples in (0, 1/2)")
        ->check(CLI::PositiveNumber);

    std::string trace_path, bounds_out;
    gfw::BoundParams params;
    double A_flag = 0.0, h0_flag = -1.0, mu_flag = 0.0;
    auto* bounds = app.add_subcommand("bounds", "Overlay rate bounds on a recorded trace");
    bounds->add_option("--trace", trace_path, "Trace CSV")->required();
    bounds->add_option("--delta", params.delta, "Oracle approximation factor")->required();
    bounds->add_option("--L", params.L, "Smoothness constant");
    bounds->add_option("--C", params.C, "Hull radius");
    bounds->add_option("--mu", mu_flag, "Quadratic growth constant");
    bounds->add_option("--h0", h0_flag, "Initial primal error (default: trace row 0)");
    bounds->add_option("--s", params.s, "Max support size");
    bounds->add_option("--B", params.B, "Gradient inf-norm bound");
    bounds->add_option("--nu", params.nu, "Gradient decay exponent");
    bounds->add_option("--dstar", params.Dstar, "Min optimizer norm");
    bounds->add_option("--A", A_flag, "Scalar A_t cap (default 8*L*C^2)");
    bounds->add_option("--out", bounds_out, "Output CSV (default stdout)");

    int dmo_trials = 1000;
    std::uint64_t dmo_seed = 1;
    auto* dmo = app.add_subcommand("dmo-check", "Oracle property battery vs brute force");
    dmo->add_option("--trials", dmo_trials, "Instance count")->check(CLI::PositiveNumber);
    dmo->add_option("--seed", dmo_seed, "Seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (recover->parsed())
            return cmd_recover(config_arg, seed_opt, trials_opt, out, oracle_override);
        if (ksupport->parsed()) return cmd_ksupport(ks_seed, ks_trials, ks_iters, ks_out);
        if (adversarial->parsed()) return cmd_adversarial(tau_points);
        if (bounds->parsed()) {
            if (mu_flag > 0.0) params.mu = mu_flag;
            return cmd_bounds(trace_path, params, A_flag, h0_flag, bounds_out);
        }
        if (dmo->parsed()) return cmd_dmo_check(dmo_trials, dmo_seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return 0;
}
