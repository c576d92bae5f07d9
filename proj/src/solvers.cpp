#include "gfw/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace gfw {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int count_nnz(const Eigen::VectorXd& x) {
    int n = 0;
    for (int i = 0; i < x.size(); ++i)
        if (x[i] != 0.0) ++n;
    return n;
}

TraceRow make_row(int t, const Eigen::VectorXd& x, double f, const Eigen::VectorXd& grad,
                  double gap, const Eigen::VectorXd* x_tilde_star, const double* f_star) {
    TraceRow row;
    row.t = t;
    row.f = f;
    row.h = f_star ? f - *f_star : kNaN;
    row.grad_inf = grad.lpNorm<Eigen::Infinity>();
    row.gap = gap;
    row.est_err = x_tilde_star ? (x - *x_tilde_star).norm() : kNaN;
    row.nnz = count_nnz(x);
    row.xg = x.dot(grad);
    return row;
}

void push_row(IterateTrace& trace, TraceRow row) {
    if (trace.rows.empty() || row.f < trace.best_f) {
        trace.best_index = static_cast<int>(trace.rows.size());
        trace.best_f = row.f;
    }
    trace.rows.push_back(row);
}

Eigen::VectorXd check_gradient(const Objective& obj, const Eigen::VectorXd& x, int t) {
    Eigen::VectorXd grad = obj.gradient(x);
    if (!grad.allFinite())
        throw std::runtime_error("solver: non-finite gradient at t=" + std::to_string(t));
    return grad;
}

StepDetail step_impl(const Eigen::VectorXd& x, const Eigen::VectorXd& grad, int t,
                     const SolverConfig& config, const SubgraphModel& model,
                     const DmoFn& oracle, const Eigen::VectorXd* prev_vertex) {
    StepDetail out;
    const double eta = 2.0 / (t + 2);
    Eigen::VectorXd z;
    if (config.variant == Variant::DmoFw)
        z = -grad;
    else
        z = x - grad / (config.L * eta);

    Eigen::VectorXd v;
    if (z.lpNorm<Eigen::Infinity>() == 0.0) {
        out.degenerate = true;
    } else {
        DmoResult res = oracle(z, model);
        if (res.dual_value == 0.0) {
            if (prev_vertex)
                v = *prev_vertex;
            else
                out.degenerate = true;
        } else {
            v = support_to_vertex(z, res.support, config.C);
            out.support = res.support;
        }
    }

    if (out.degenerate) {
        out.x_next = x;
        out.vertex = Eigen::VectorXd::Zero(x.size());
        out.gap = 0.0;
        return out;
    }
    out.vertex = v;
    out.gap = grad.dot(x - v);
    Eigen::VectorXd target = (config.option == StepOption::I) ? v : (v / config.delta).eval();
    out.x_next = x + eta * (target - x);
    return out;
}

void assert_feasible_x0(const Eigen::VectorXd& x0, const SubgraphModel& model, double C) {
    if (x0.norm() > C * (1.0 + 1e-9))
        throw std::invalid_argument("solver: x0 outside the radius-C ball");
    std::vector<int> supp;
    for (int i = 0; i < x0.size(); ++i)
        if (x0[i] != 0.0) supp.push_back(i);
    if (!supp.empty() && !is_member(Support(std::move(supp)), model))
        throw std::invalid_argument("solver: supp(x0) is not a model support");
}

}  // namespace

void SolverConfig::validate() const {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("solver: delta must be in (0,1]");
    if (!(L > 0.0)) throw std::invalid_argument("solver: L must be positive");
    if (!(C > 0.0)) throw std::invalid_argument("solver: C must be positive");
    if (max_iter < 1) throw std::invalid_argument("solver: max_iter must be >= 1");
}

StepDetail fw_step_detail(const Eigen::VectorXd& x, int t, const SolverConfig& config,
                          const Objective& obj, const SubgraphModel& model,
                          const DmoFn& oracle, const Eigen::VectorXd* prev_vertex) {
    return step_impl(x, check_gradient(obj, x, t), t, config, model, oracle, prev_vertex);
}

Eigen::VectorXd fw_step(const Eigen::VectorXd& x, int t, const SolverConfig& config,
                        const Objective& obj, const SubgraphModel& model, const DmoFn& oracle) {
    return fw_step_detail(x, t, config, obj, model, oracle).x_next;
}

IterateTrace run(const SolverConfig& config, const Objective& obj, const SubgraphModel& model,
                 const Eigen::VectorXd* x_tilde_star, const double* f_star) {
    config.validate();
    CounterRng rng(config.seed);
    DmoFn oracle = make_oracle(config.oracle, rng);

    Eigen::VectorXd x;
    if (config.x0.size() == 0) {
        x = Eigen::VectorXd::Zero(obj.dim());
    } else {
        if (config.x0.size() != obj.dim())
            throw std::invalid_argument("solver: x0 dimension mismatch");
        x = config.x0;
        assert_feasible_x0(x, model, config.C);
    }

    IterateTrace trace;
    trace.rows.reserve(config.max_iter + 1);
    auto start = std::chrono::steady_clock::now();
    Eigen::VectorXd prev_vertex;

    for (int t = 0; t <= config.max_iter; ++t) {
        Eigen::VectorXd grad = check_gradient(obj, x, t);
        StepDetail det = step_impl(x, grad, t, config, model, oracle,
                                   prev_vertex.size() ? &prev_vertex : nullptr);
        push_row(trace, make_row(t, x, obj.value(x), grad, det.gap, x_tilde_star, f_star));
        if (trace.best_index == static_cast<int>(trace.rows.size()) - 1) trace.x_best = x;
        if (t < config.max_iter) {
            if (!det.degenerate) prev_vertex = det.vertex;
            x = det.x_next;
        }
    }
    trace.x_final = x;
    trace.wall_seconds = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start).count();

    trace.meta = {
        {"algorithm", config.variant == Variant::DmoFw ? "dmo-fw" : "dmo-accfw"},
        {"option", config.option == StepOption::I ? "I" : "II"},
        {"delta", format_double(config.delta)},
        {"L", format_double(config.L)},
        {"C", format_double(config.C)},
        {"max_iter", std::to_string(config.max_iter)},
        {"seed", std::to_string(config.seed)},
        {"oracle", config.oracle.describe()},
    };
    return trace;
}

IterateTrace gen_mp(const Objective& obj, const SubgraphModel& model, const OracleSpec& oracle_spec,
                    int max_iter, double L, std::uint64_t seed,
                    const Eigen::VectorXd* x_tilde_star, const double* f_star) {
    if (!(L > 0.0)) throw std::invalid_argument("gen_mp: L must be positive");
    if (max_iter < 1) throw std::invalid_argument("gen_mp: max_iter must be >= 1");
    CounterRng rng(seed);
    DmoFn oracle = make_oracle(oracle_spec, rng);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(obj.dim());
    IterateTrace trace;
    trace.rows.reserve(max_iter + 1);
    auto start = std::chrono::steady_clock::now();

    for (int t = 0; t <= max_iter; ++t) {
        Eigen::VectorXd grad = check_gradient(obj, x, t);
        Eigen::VectorXd z = -grad;
        double gap = 0.0;
        Eigen::VectorXd x_next = x;
        if (z.lpNorm<Eigen::Infinity>() != 0.0) {
            DmoResult res = oracle(z, model);
            if (res.dual_value != 0.0) {
                Eigen::VectorXd v = support_to_vertex(z, res.support, model.C);
                gap = grad.dot(x - v);
                double gamma = std::max(0.0, -grad.dot(v) / (L * v.squaredNorm()));
                x_next = x + gamma * v;
            }
        }
        push_row(trace, make_row(t, x, obj.value(x), grad, gap, x_tilde_star, f_star));
        if (trace.best_index == static_cast<int>(trace.rows.size()) - 1) trace.x_best = x;
        if (t < max_iter) x = x_next;
    }
    trace.x_final = x;
    trace.wall_seconds = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start).count();
    trace.meta = {
        {"algorithm", "gen-mp"},
        {"L", format_double(L)},
        {"C", format_double(model.C)},
        {"max_iter", std::to_string(max_iter)},
        {"seed", std::to_string(seed)},
        {"oracle", oracle_spec.describe()},
    };
    return trace;
}

IterateTrace iht(const Objective& obj, const SubgraphModel& model, double L, int max_iter,
                 IhtThresholding thresholding,
                 const Eigen::VectorXd* x_tilde_star, const double* f_star) {
    if (!(L > 0.0)) throw std::invalid_argument("iht: L must be positive");
    if (max_iter < 1) throw std::invalid_argument("iht: max_iter must be >= 1");

    Eigen::VectorXd x = Eigen::VectorXd::Zero(obj.dim());
    IterateTrace trace;
    trace.rows.reserve(max_iter + 1);
    auto start = std::chrono::steady_clock::now();

    for (int t = 0; t <= max_iter; ++t) {
        Eigen::VectorXd grad = check_gradient(obj, x, t);
        push_row(trace, make_row(t, x, obj.value(x), grad, kNaN, x_tilde_star, f_star));
        if (trace.best_index == static_cast<int>(trace.rows.size()) - 1) trace.x_best = x;
        if (t == max_iter) break;

        Eigen::VectorXd w = x - grad / L;
        Support support = (thresholding == IhtThresholding::TopS)
                              ? top_s_dmo(w, model.s).support
                              : heuristic_dmo(w, model).support;
        Eigen::VectorXd x_next = Eigen::VectorXd::Zero(w.size());
        for (int i : support.indices) x_next[i] = w[i];
        double norm = x_next.norm();
        if (norm > model.C) x_next *= model.C / norm;
        x = x_next;
    }
    trace.x_final = x;
    trace.wall_seconds = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start).count();
    trace.meta = {
        {"algorithm", "iht"},
        {"thresholding", thresholding == IhtThresholding::TopS ? "top-s" : "heuristic"},
        {"L", format_double(L)},
        {"C", format_double(model.C)},
        {"max_iter", std::to_string(max_iter)},
    };
    return trace;
}

IterateTrace cosamp_lite(const LeastSquares& obj, int s, int max_iter,
                         const Eigen::VectorXd* x_tilde_star, const double* f_star) {
    const int d = obj.dim();
    if (s < 1 || s > d) throw std::invalid_argument("cosamp_lite: need 1 <= s <= d");
    if (max_iter < 1) throw std::invalid_argument("cosamp_lite: max_iter must be >= 1");
    const Eigen::MatrixXd& A = obj.A();
    const Eigen::VectorXd& y = obj.y();

    Eigen::VectorXd x = Eigen::VectorXd::Zero(d);
    IterateTrace trace;
    trace.rows.reserve(max_iter + 1);
    auto start = std::chrono::steady_clock::now();

    for (int t = 0; t <= max_iter; ++t) {
        Eigen::VectorXd grad = check_gradient(obj, x, t);
        push_row(trace, make_row(t, x, obj.value(x), grad, kNaN, x_tilde_star, f_star));
        if (trace.best_index == static_cast<int>(trace.rows.size()) - 1) trace.x_best = x;
        if (t == max_iter) break;

        // Proxy support from the residual correlation, merged with the
        // current support, then a ridge-regularized least-squares refit.
        Eigen::VectorXd proxy = -grad;  // A'(y - Ax)
        Support proxy_supp = top_s_dmo(proxy, std::min(2 * s, d)).support;
        std::vector<int> merged = proxy_supp.indices;
        for (int i = 0; i < d; ++i)
            if (x[i] != 0.0) merged.push_back(i);
        Support merged_supp(std::move(merged));

        const int m = merged_supp.size();
        Eigen::MatrixXd At(A.rows(), m);
        for (int j = 0; j < m; ++j) At.col(j) = A.col(merged_supp.indices[j]);
        Eigen::MatrixXd gram = At.transpose() * At;
        gram.diagonal().array() += 1e-12;
        Eigen::VectorXd b_sub = gram.ldlt().solve(At.transpose() * y);

        Eigen::VectorXd b = Eigen::VectorXd::Zero(d);
        for (int j = 0; j < m; ++j) b[merged_supp.indices[j]] = b_sub[j];
        Support keep = top_s_dmo(b, s).support;
        Eigen::VectorXd x_next = Eigen::VectorXd::Zero(d);
        for (int i : keep.indices) x_next[i] = b[i];
        x = x_next;
    }
    trace.x_final = x;
    trace.wall_seconds = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start).count();
    trace.meta = {
        {"algorithm", "cosamp-lite"},
        {"s", std::to_string(s)},
        {"max_iter", std::to_string(max_iter)},
    };
    return trace;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_trace_csv(const IterateTrace& trace, std::ostream& out) {
    out << "t,f,h,grad_inf,gap,est_err,nnz\n";
    for (const TraceRow& r : trace.rows) {
        out << r.t << ',' << format_double(r.f) << ',' << format_double(r.h) << ','
            << format_double(r.grad_inf) << ',' << format_double(r.gap) << ','
            << format_double(r.est_err) << ',' << r.nnz << '\n';
    }
}

void write_trace_csv(const IterateTrace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_trace_csv(trace, out);
}

void write_meta(const IterateTrace& trace, std::ostream& out) {
    for (const auto& [key, value] : trace.meta) out << key << ": " << value << '\n';
    out << "rows: " << trace.rows.size() << '\n';
    out << "best_index: " << trace.best_index << '\n';
    out << "best_f: " << format_double(trace.best_f) << '\n';
}

void write_meta(const IterateTrace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_meta(trace, out);
}

}  // namespace gfw
