#include "gfw/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gfw/rng.hpp"

namespace fs = std::filesystem;

namespace gfw {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string sanitize(const std::string& name) {
    std::string out = name;
    for (char& c : out)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '_' && c != '-')
            c = '-';
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, sep)) out.push_back(token);
    return out;
}

std::string trim(const std::string& text) {
    auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

}  // namespace

Eigen::MatrixXd gen_gaussian_matrix(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 1) throw std::invalid_argument("gen_gaussian_matrix: need n, d >= 1");
    CounterRng rng(seed);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::MatrixXd A(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) A(i, j) = scale * rng.next_normal();
    return A;
}

Eigen::VectorXd gen_measurements(const Eigen::MatrixXd& A, const Eigen::VectorXd& x,
                                 double sigma, std::uint64_t seed) {
    if (A.cols() != x.size()) throw std::invalid_argument("gen_measurements: dimension mismatch");
    if (sigma < 0.0) throw std::invalid_argument("gen_measurements: sigma must be >= 0");
    Eigen::VectorXd y = A * x;
    if (sigma > 0.0) {
        CounterRng rng(seed);
        for (int i = 0; i < y.size(); ++i) y[i] += sigma * rng.next_normal();
    }
    return y;
}

GridSignal gen_grid_signal(int width, int height, int support_size, int g, std::uint64_t seed) {
    if (width < 1 || height < 1) throw std::invalid_argument("gen_grid_signal: bad grid dims");
    const int d = width * height;
    if (support_size < 1 || support_size > d)
        throw std::invalid_argument("gen_grid_signal: support_size out of range");
    if (g < 1 || g > support_size)
        throw std::invalid_argument("gen_grid_signal: need 1 <= g <= support_size");

    Graph graph = Graph::grid(width, height);
    CounterRng rng(seed);

    // Blob sizes as even as possible; each blob grows by random frontier
    // expansion over unused nodes.
    std::vector<int> sizes(g, support_size / g);
    for (int i = 0; i < support_size % g; ++i) ++sizes[i];

    std::vector<char> used(d, 0);
    const int max_attempts = 200;
    for (int target : sizes) {
        bool placed = false;
        for (int attempt = 0; attempt < max_attempts && !placed; ++attempt) {
            int start = static_cast<int>(rng.next_below(d));
            if (used[start]) continue;
            std::vector<int> blob = {start};
            std::vector<char> in_blob(d, 0);
            in_blob[start] = 1;
            std::vector<int> frontier;
            auto extend = [&](int node) {
                for (int nbr : graph.adjacency[node])
                    if (!used[nbr] && !in_blob[nbr]) frontier.push_back(nbr);
            };
            extend(start);
            while (static_cast<int>(blob.size()) < target && !frontier.empty()) {
                int pick = static_cast<int>(rng.next_below(frontier.size()));
                int node = frontier[pick];
                frontier.erase(frontier.begin() + pick);
                if (in_blob[node]) continue;
                in_blob[node] = 1;
                blob.push_back(node);
                extend(node);
            }
            if (static_cast<int>(blob.size()) == target) {
                for (int node : blob) used[node] = 1;
                placed = true;
            }
        }
        if (!placed)
            throw std::invalid_argument("gen_grid_signal: could not place a connected blob");
    }

    Eigen::VectorXd signal = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < d; ++i)
        if (used[i]) signal[i] = 0.5 + rng.next_uniform();
    signal /= signal.norm();

    std::vector<int> supp;
    for (int i = 0; i < d; ++i)
        if (used[i]) supp.push_back(i);
    Support support(std::move(supp));
    int components = static_cast<int>(connected_components(graph, support).size());
    if (!is_member(support, SubgraphModel(graph, support_size, g, 1.0)))
        throw std::logic_error("gen_grid_signal: generated support is not a model member");

    return {std::move(graph), std::move(signal), width, height, components};
}

GridSignal load_grid_image(const std::string& path, double threshold) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_grid_image: cannot read " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::istringstream ls(line);
        std::vector<double> row;
        double v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw std::invalid_argument("load_grid_image: non-numeric entry");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("load_grid_image: empty image");
    const int height = static_cast<int>(rows.size());
    const int width = static_cast<int>(rows[0].size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != width)
            throw std::invalid_argument("load_grid_image: ragged rows");

    Graph graph = Graph::grid(width, height);
    Eigen::VectorXd signal = Eigen::VectorXd::Zero(width * height);
    std::vector<int> supp;
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            if (rows[r][c] > threshold) {
                signal[r * width + c] = rows[r][c];
                supp.push_back(r * width + c);
            }
    if (supp.empty()) throw std::invalid_argument("load_grid_image: empty support");
    signal /= signal.norm();
    int components =
        static_cast<int>(connected_components(graph, Support(std::move(supp))).size());
    return {std::move(graph), std::move(signal), width, height, components};
}

SolverEntry SolverEntry::parse(const std::string& name, const std::string& text) {
    auto tokens = split(text, ':');
    if (tokens.empty()) throw std::invalid_argument("solver spec empty: " + name);
    SolverEntry entry;
    entry.name = name;

    auto oracle_from = [&tokens](std::size_t start, const std::string& fallback) {
        if (start >= tokens.size()) return OracleSpec::parse(fallback);
        std::string joined = tokens[start];
        for (std::size_t i = start + 1; i < tokens.size(); ++i) joined += ":" + tokens[i];
        return OracleSpec::parse(joined);
    };

    const std::string& algo = tokens[0];
    if (algo == "fw" || algo == "accfw") {
        entry.algo = (algo == "fw") ? Algo::Fw : Algo::AccFw;
        std::size_t next = 1;
        if (tokens.size() > 1 && (tokens[1] == "I" || tokens[1] == "II")) {
            entry.option = (tokens[1] == "I") ? StepOption::I : StepOption::II;
            next = 2;
        }
        entry.oracle = oracle_from(next, "heuristic");
    } else if (algo == "gen-mp") {
        entry.algo = Algo::GenMp;
        entry.oracle = oracle_from(1, "heuristic");
    } else if (algo == "iht") {
        entry.algo = Algo::Iht;
        entry.oracle = oracle_from(1, "heuristic");
        if (entry.oracle.kind != OracleKind::Heuristic && entry.oracle.kind != OracleKind::TopS)
            throw std::invalid_argument("iht thresholding must be heuristic or top-s");
    } else if (algo == "cosamp") {
        if (tokens.size() > 1) throw std::invalid_argument("cosamp takes no options");
        entry.algo = Algo::CosampLite;
    } else {
        throw std::invalid_argument("unknown solver algorithm: " + algo);
    }
    return entry;
}

double resolve_delta(const OracleSpec& spec, const SubgraphModel& model) {
    switch (spec.kind) {
        case OracleKind::Heuristic:
            return std::sqrt(1.0 / std::ceil(static_cast<double>(model.s) / model.g));
        case OracleKind::DegradedKSupport:
        case OracleKind::External:
            return spec.delta;
        case OracleKind::TopS:
        case OracleKind::BruteForce:
            return 1.0;
    }
    throw std::invalid_argument("resolve_delta: unknown oracle kind");
}

void ExperimentConfig::validate() const {
    if (grid_width < 1 || grid_height < 1)
        throw std::invalid_argument("experiment: bad grid dims");
    if (support_size < 1) throw std::invalid_argument("experiment: support_size must be >= 1");
    if (g < 1) throw std::invalid_argument("experiment: g must be >= 1");
    if (!(sampling_ratio > 0.0)) throw std::invalid_argument("experiment: ratio must be > 0");
    if (sigma < 0.0) throw std::invalid_argument("experiment: sigma must be >= 0");
    if (!(C > 0.0)) throw std::invalid_argument("experiment: C must be > 0");
    if (trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
    if (max_iter < 1) throw std::invalid_argument("experiment: max_iter must be >= 1");
    if (L && !(*L > 0.0)) throw std::invalid_argument("experiment: L must be > 0");
    if (solvers.empty()) throw std::invalid_argument("experiment: no solvers configured");
}

ExperimentConfig ExperimentConfig::recipe(const std::string& name) {
    ExperimentConfig cfg;
    cfg.name = name;
    if (name == "fig4-desk") {
        cfg.solvers = {
            SolverEntry::parse("accfw-I-heuristic", "accfw:I:heuristic"),
            SolverEntry::parse("fw-I-heuristic", "fw:I:heuristic"),
            SolverEntry::parse("iht", "iht:heuristic"),
            SolverEntry::parse("gen-mp", "gen-mp:heuristic"),
            SolverEntry::parse("cosamp", "cosamp"),
        };
    } else if (name == "fig3-desk") {
        cfg.grid_width = 16;
        cfg.grid_height = 16;
        cfg.support_size = 20;
        cfg.sampling_ratio = 5.0;
        // The accelerated-vs-plain comparison targets the delta = 1 regime;
        // the exact graph oracle is out of reach at this size, so both
        // solvers run the exact cardinality oracle instead.
        cfg.solvers = {
            SolverEntry::parse("accfw-I-tops", "accfw:I:top-s"),
            SolverEntry::parse("fw-I-tops", "fw:I:top-s"),
        };
    } else {
        throw std::invalid_argument("unknown recipe: " + name);
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("experiment config: cannot read " + path);
    ExperimentConfig cfg;
    cfg.solvers.clear();
    std::string section, line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("experiment config: expected key=value: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section == "solvers") {
            cfg.solvers.push_back(SolverEntry::parse(key, value));
        } else if (section == "problem") {
            if (key == "width") cfg.grid_width = std::stoi(value);
            else if (key == "height") cfg.grid_height = std::stoi(value);
            else if (key == "support") cfg.support_size = std::stoi(value);
            else if (key == "g") cfg.g = std::stoi(value);
            else if (key == "ratio" || key == "r") cfg.sampling_ratio = std::stod(value);
            else if (key == "sigma") cfg.sigma = std::stod(value);
            else if (key == "C") cfg.C = std::stod(value);
            else if (key == "image") cfg.image_file = value;
            else if (key == "threshold") cfg.image_threshold = std::stod(value);
            else throw std::invalid_argument("experiment config: unknown problem key " + key);
        } else if (section == "run") {
            if (key == "trials") cfg.trials = std::stoi(value);
            else if (key == "seed") cfg.seed = std::stoull(value);
            else if (key == "max_iter") cfg.max_iter = std::stoi(value);
            else if (key == "L") cfg.L = std::stod(value);
            else if (key == "out") cfg.out_dir = value;
            else if (key == "name") cfg.name = value;
            else throw std::invalid_argument("experiment config: unknown run key " + key);
        } else {
            throw std::invalid_argument("experiment config: key outside a known section: " + line);
        }
    }
    return cfg;
}

namespace {

IterateTrace run_entry(const SolverEntry& entry, const LeastSquares& obj,
                       const SubgraphModel& model, double L, int max_iter, std::uint64_t seed,
                       const Eigen::VectorXd* x_tilde_star, const double* f_star) {
    switch (entry.algo) {
        case Algo::Fw:
        case Algo::AccFw: {
            SolverConfig cfg;
            cfg.variant = (entry.algo == Algo::Fw) ? Variant::DmoFw : Variant::DmoAccFw;
            cfg.option = entry.option;
            cfg.delta = entry.delta > 0.0 ? entry.delta : resolve_delta(entry.oracle, model);
            cfg.L = L;
            cfg.C = model.C;
            cfg.max_iter = max_iter;
            cfg.seed = seed;
            cfg.oracle = entry.oracle;
            return run(cfg, obj, model, x_tilde_star, f_star);
        }
        case Algo::GenMp:
            return gen_mp(obj, model, entry.oracle, max_iter, L, seed, x_tilde_star, f_star);
        case Algo::Iht:
            return iht(obj, model, L, max_iter,
                       entry.oracle.kind == OracleKind::TopS ? IhtThresholding::TopS
                                                             : IhtThresholding::HeuristicDmo,
                       x_tilde_star, f_star);
        case Algo::CosampLite:
            return cosamp_lite(obj, model.s, max_iter, x_tilde_star, f_star);
    }
    throw std::invalid_argument("run_entry: unknown algorithm");
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    const std::size_t n_solvers = config.solvers.size();
    ExperimentResult res;
    res.config = config;
    res.records.assign(n_solvers, {});
    res.traces.assign(n_solvers, {});
    if (!config.out_dir.empty()) fs::create_directories(config.out_dir);

    for (int trial = 0; trial < config.trials; ++trial) {
        CounterRng root(config.seed + static_cast<std::uint64_t>(trial));
        std::uint64_t signal_seed = root.next_u64();
        std::uint64_t matrix_seed = root.next_u64();
        std::uint64_t noise_seed = root.next_u64();

        GridSignal gs =
            config.image_file.empty()
                ? gen_grid_signal(config.grid_width, config.grid_height, config.support_size,
                                  config.g, signal_seed)
                : load_grid_image(config.image_file, config.image_threshold);
        const Eigen::VectorXd& x_star = gs.signal;
        int supp = 0;
        for (int i = 0; i < x_star.size(); ++i)
            if (x_star[i] != 0.0) ++supp;

        const int n = std::max(1, static_cast<int>(std::lround(config.sampling_ratio * supp)));
        Eigen::MatrixXd A = gen_gaussian_matrix(n, gs.graph.d, matrix_seed);
        Eigen::VectorXd y = gen_measurements(A, x_star, config.sigma, noise_seed);
        LeastSquares obj(std::move(A), std::move(y));
        double L = config.L ? *config.L : estimate_L(obj.A());
        SubgraphModel model(gs.graph, supp, std::max(config.g, gs.components), config.C);

        // The planted signal is feasible and noiseless residual is zero, so
        // the optimum value is known exactly in that case.
        double f_star_value = 0.0;
        const double* f_star =
            (config.sigma == 0.0 && config.C >= 1.0) ? &f_star_value : nullptr;

        for (std::size_t i = 0; i < n_solvers; ++i) {
            std::uint64_t solver_seed = root.next_u64();
            TrialRecord record;
            IterateTrace trace;
            try {
                trace = run_entry(config.solvers[i], obj, model, L, config.max_iter,
                                  solver_seed, &x_star, f_star);
                record.final_h = trace.final_row().h;
                record.final_err = trace.final_row().est_err;
            } catch (const std::exception& e) {
                record.failed = true;
                record.error = e.what();
            }
            if (!config.out_dir.empty() && !record.failed) {
                std::string stem = config.out_dir + "/trace_" +
                                   sanitize(config.solvers[i].name) + "_trial" +
                                   std::to_string(trial);
                write_trace_csv(trace, stem + ".csv");
                write_meta(trace, stem + ".meta.txt");
            }
            res.records[i].push_back(std::move(record));
            res.traces[i].push_back(std::move(trace));
        }
    }

    // Per-solver summary over non-failed trials.
    for (std::size_t i = 0; i < n_solvers; ++i) {
        SolverSummary s;
        s.name = config.solvers[i].name;
        std::vector<double> hs, errs;
        for (const TrialRecord& r : res.records[i]) {
            if (r.failed) {
                ++s.failures;
                continue;
            }
            hs.push_back(r.final_h);
            errs.push_back(r.final_err);
        }
        s.median_h = median_of(hs);
        s.iqr_h = iqr_of(hs);
        s.median_err = median_of(errs);
        s.iqr_err = iqr_of(errs);
        res.summary.push_back(std::move(s));
    }

    // Head-to-head verdicts against the first solver, by final objective
    // value (offset-free, so they work without a known optimum).
    for (std::size_t i = 1; i < n_solvers; ++i) {
        int wins = 0, valid = 0;
        for (int trial = 0; trial < config.trials; ++trial) {
            const TrialRecord& a = res.records[0][trial];
            const TrialRecord& b = res.records[i][trial];
            if (a.failed || b.failed) continue;
            ++valid;
            if (res.traces[0][trial].final_row().f <= res.traces[i][trial].final_row().f) ++wins;
        }
        res.verdicts.emplace_back(
            sanitize(config.solvers[0].name) + "_final_f_leq_" + sanitize(config.solvers[i].name),
            std::to_string(wins) + "/" + std::to_string(valid));
    }

    if (!config.out_dir.empty()) {
        std::ofstream sum(config.out_dir + "/summary.csv");
        if (!sum) throw std::runtime_error("cannot write summary.csv");
        sum << "solver,median_h,iqr_h,median_est_err,iqr_est_err,failures\n";
        for (const SolverSummary& s : res.summary)
            sum << sanitize(s.name) << ',' << format_double(s.median_h) << ','
                << format_double(s.iqr_h) << ',' << format_double(s.median_err) << ','
                << format_double(s.iqr_err) << ',' << s.failures << '\n';

        std::ofstream meta(config.out_dir + "/meta.txt");
        if (!meta) throw std::runtime_error("cannot write meta.txt");
        meta << "name: " << config.name << '\n'
             << "seed: " << config.seed << '\n'
             << "trials: " << config.trials << '\n'
             << "grid: " << config.grid_width << "x" << config.grid_height << '\n'
             << "support: " << config.support_size << '\n'
             << "g: " << config.g << '\n'
             << "ratio: " << format_double(config.sampling_ratio) << '\n'
             << "sigma: " << format_double(config.sigma) << '\n'
             << "C: " << format_double(config.C) << '\n'
             << "max_iter: " << config.max_iter << '\n'
             << "L: " << (config.L ? format_double(*config.L) : std::string("estimated")) << '\n'
             << "rng: counter-splitmix64\n"
             << "gaussian: box-muller-trig, row-major stream\n";
        for (const auto& [key, value] : res.verdicts) meta << key << ": " << value << '\n';
    }
    return res;
}

KSupportResult run_ksupport_sweep(const KSupportConfig& config) {
    if (config.n < 1 || config.d < 1 || config.signal_support < 1 ||
        config.signal_support > config.d || config.s < 1 || config.s > config.d ||
        config.max_iter < 1 || config.trials < 1 || !(config.C > 0.0) || config.deltas.empty())
        throw std::invalid_argument("ksupport sweep: bad config");
    for (double delta : config.deltas)
        if (!(delta > 0.0 && delta <= 1.0))
            throw std::invalid_argument("ksupport sweep: delta must be in (0,1]");

    KSupportResult res;
    res.config = config;
    if (!config.out_dir.empty()) fs::create_directories(config.out_dir);

    for (int trial = 0; trial < config.trials; ++trial) {
        CounterRng root(config.seed + static_cast<std::uint64_t>(trial));

        // Planted sign signal: signal_support distinct coordinates, values
        // +-1/sqrt(signal_support).
        std::set<int> chosen;
        while (static_cast<int>(chosen.size()) < config.signal_support)
            chosen.insert(static_cast<int>(root.next_below(config.d)));
        Eigen::VectorXd x_star = Eigen::VectorXd::Zero(config.d);
        const double mag = 1.0 / std::sqrt(static_cast<double>(config.signal_support));
        for (int i : chosen) x_star[i] = (root.next_u64() & 1) ? mag : -mag;

        Eigen::MatrixXd A = gen_gaussian_matrix(config.n, config.d, root.next_u64());
        Eigen::VectorXd y = A * x_star;
        LeastSquares obj(std::move(A), std::move(y));
        double L = estimate_L(obj.A());
        SubgraphModel model = SubgraphModel::cardinality(config.d, config.s, config.C);

        // Reference value: a longer accelerated run with the exact oracle.
        SolverConfig ref_cfg;
        ref_cfg.variant = Variant::DmoAccFw;
        ref_cfg.option = StepOption::I;
        ref_cfg.L = L;
        ref_cfg.C = config.C;
        ref_cfg.max_iter = 3 * config.max_iter;
        ref_cfg.seed = root.next_u64();
        ref_cfg.oracle.kind = OracleKind::TopS;
        double f_ref = run(ref_cfg, obj, model, nullptr, nullptr).best_f;

        std::vector<IterateTrace> trial_traces;
        for (double delta : config.deltas) {
            SolverConfig cfg;
            cfg.variant = Variant::DmoFw;
            cfg.option = StepOption::I;
            cfg.delta = delta;
            cfg.L = L;
            cfg.C = config.C;
            cfg.max_iter = config.max_iter;
            cfg.seed = root.next_u64();
            cfg.oracle.kind = OracleKind::DegradedKSupport;
            cfg.oracle.delta = delta;
            trial_traces.push_back(run(cfg, obj, model, &x_star, nullptr));
            f_ref = std::min(f_ref, trial_traces.back().best_f);
        }
        for (std::size_t k = 0; k < trial_traces.size(); ++k) {
            for (TraceRow& row : trial_traces[k].rows) row.h = row.f - f_ref;
            if (!config.out_dir.empty()) {
                std::string stem = config.out_dir + "/trace_delta" +
                                   sanitize(format_double(config.deltas[k])) + "_trial" +
                                   std::to_string(trial);
                write_trace_csv(trial_traces[k], stem + ".csv");
                write_meta(trial_traces[k], stem + ".meta.txt");
            }
        }
        res.traces.push_back(std::move(trial_traces));
        res.f_ref.push_back(f_ref);
    }
    return res;
}

double fitted_loglog_slope(const IterateTrace& trace, int t_lo, int t_hi) {
    std::vector<double> xs, ys;
    for (const TraceRow& row : trace.rows) {
        if (row.t < t_lo || row.t > t_hi || row.t < 1) continue;
        if (!(row.h > 0.0) || !std::isfinite(row.h)) continue;
        xs.push_back(std::log(static_cast<double>(row.t)));
        ys.push_back(std::log(row.h));
    }
    if (xs.size() < 2) return kNaN;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double cov = 0.0, var = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cov += (xs[i] - mx) * (ys[i] - my);
        var += (xs[i] - mx) * (xs[i] - mx);
    }
    return var > 0.0 ? cov / var : kNaN;
}

double quantile(std::vector<double> values, double q) {
    values.erase(std::remove_if(values.begin(), values.end(),
                                [](double v) { return !std::isfinite(v); }),
                 values.end());
    if (values.empty()) return kNaN;
    std::sort(values.begin(), values.end());
    double pos = q * (values.size() - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    std::size_t hi = std::min(lo + 1, values.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[hi] * frac;
}

double median_of(const std::vector<double>& values) { return quantile(values, 0.5); }

double iqr_of(const std::vector<double>& values) {
    return quantile(values, 0.75) - quantile(values, 0.25);
}

}  // namespace gfw
