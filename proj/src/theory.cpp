#include "gfw/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gfw {

namespace {

void require_t(int t) {
    if (t < 1) throw std::invalid_argument("bound: t must be >= 1");
}

double require_mu(const BoundParams& p) {
    if (!p.mu || !(*p.mu > 0.0)) throw std::invalid_argument("bound: mu required");
    return *p.mu;
}

double a_at(const BoundParams& p, int t) {
    if (!p.A_seq.empty()) {
        if (t >= static_cast<int>(p.A_seq.size()))
            throw std::invalid_argument("bound: A_t sequence shorter than t");
        return p.A_seq[t];
    }
    if (p.A > 0.0) return p.A;
    throw std::invalid_argument("bound: A_t required");
}

double p_curve(int t, double delta, double nu, double h0, double a) {
    double first = (1.0 - delta) * std::pow(9.0, delta) / std::pow(t + 2.0, 2.0 * delta) * h0;
    double second = (std::log(t + 1.0) + 1.0) / std::pow(t + 2.0, nu) * a;
    return first + second;
}

}  // namespace

void BoundParams::validate() const {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("bound params: delta must be in (0,1]");
    if (!(L > 0.0)) throw std::invalid_argument("bound params: L must be positive");
    if (!(C > 0.0)) throw std::invalid_argument("bound params: C must be positive");
    if (mu && !(*mu > 0.0)) throw std::invalid_argument("bound params: mu must be positive");
    if (h0 < 0.0) throw std::invalid_argument("bound params: h0 must be >= 0");
    if (s < 1) throw std::invalid_argument("bound params: s must be >= 1");
    if (B < 0.0) throw std::invalid_argument("bound params: B must be >= 0");
    if (!(nu > 0.0 && nu <= 1.0)) throw std::invalid_argument("bound params: nu must be in (0,1]");
    if (Dstar < 0.0) throw std::invalid_argument("bound params: Dstar must be >= 0");
}

double bound_fw1(int t, const BoundParams& p) {
    require_t(t);
    p.validate();
    double a = a_at(p, t);
    if (p.delta <= 0.5) {
        double curve = p_curve(t, p.delta, 2.0 * p.delta, p.h0, a);
        if (p.B > 0.0) return std::min(2.0 * p.C * std::sqrt(double(p.s)) * p.B, curve);
        return curve;
    }
    double curve = p_curve(t, p.delta, 1.0, p.h0, a);
    double linear = (3.0 * (1.0 - p.delta) * p.h0 + a) / ((2.0 * p.delta - 1.0) * (t + 2.0));
    return std::min(curve, linear);
}

double bound_fw2(int t, const BoundParams& p) {
    require_t(t);
    p.validate();
    return 8.0 * p.L * p.C * p.C / (p.delta * p.delta * (t + 2.0));
}

double bound_accfw_boundary(int t, const BoundParams& p) {
    require_t(t);
    p.validate();
    double mu = require_mu(p);
    return 4.0 * std::exp(4.0 * p.L / mu) * p.h0 / ((t + 2.0) * (t + 2.0));
}

double bound_accfw_interior(int t, const BoundParams& p) {
    require_t(t);
    p.validate();
    double mu = require_mu(p);
    double gap2 = p.C * p.C - p.Dstar * p.Dstar;
    double first = 3.0 * p.L * std::exp(2.0 * p.L / mu) * gap2 / (t + 2.0)
                 + 4.0 * std::exp(4.0 * p.L / mu) * p.h0 / ((t + 2.0) * (t + 2.0));
    double z = 2.0 * p.L * (5.0 * p.C * p.C - p.Dstar * p.Dstar) / (t + 2.0);
    return std::min(first, z);
}

double bound_accfw2(int t, const BoundParams& p) {
    require_t(t);
    p.validate();
    double mu = require_mu(p);
    double first = 4.0 * std::exp(4.0 * p.L / mu) * p.h0 / ((t + 3.0) * (t + 3.0));
    double second = 28.0 * p.L * p.L * (p.C * p.C / (p.delta * p.delta) - p.Dstar * p.Dstar)
                  / (5.0 * mu * (t + 3.0));
    return first + second;
}

double bound_practical(int t, const BoundParams& p, bool decaying) {
    p.validate();
    if (p.B <= 0.0) throw std::invalid_argument("bound: B required");
    double base = 2.0 * p.B * p.C * std::sqrt(double(p.s));
    if (decaying) {
        require_t(t);
        return base / std::pow(double(t), p.nu);
    }
    return base * (1.0 - p.delta) / p.delta;
}

double recurrence_H(int t, double delta, double h0, const std::vector<double>& A_seq) {
    if (t < 0) throw std::invalid_argument("recurrence: t must be >= 0");
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("recurrence: delta must be in (0,1]");
    if (static_cast<int>(A_seq.size()) < t + 1)
        throw std::invalid_argument("recurrence: A sequence shorter than t+1");
    double h = h0;
    for (int k = 0; k <= t; ++k)
        h = (1.0 - 2.0 * delta / (k + 2.0)) * h + A_seq[k] / ((k + 2.0) * (k + 2.0));
    return h;
}

double composite_bound(int t, double delta, double h0, double A) {
    require_t(t);
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("composite bound: delta must be in (0,1]");
    if (delta <= 0.5) return p_curve(t, delta, 2.0 * delta, h0, A);
    double curve = p_curve(t, delta, 1.0, h0, A);
    double linear = (3.0 * (1.0 - delta) * h0 + A) / ((2.0 * delta - 1.0) * (t + 2.0));
    return std::min(curve, linear);
}

double estimation_error_bound(double h_t, const BoundParams& p, double grad_inf_at_opt) {
    p.validate();
    double mu = require_mu(p);
    if (grad_inf_at_opt < 0.0)
        throw std::invalid_argument("estimation bound: gradient norm must be >= 0");
    double first = std::sqrt(2.0 * std::sqrt(double(p.s)) * p.C * grad_inf_at_opt / mu);
    double second = std::sqrt(2.0 * std::max(h_t, 0.0) / mu);
    return first + second;
}

std::vector<double> a_t_from_trace(const IterateTrace& trace, double delta, double L, double C) {
    std::vector<double> out;
    out.reserve(trace.rows.size());
    double running = 0.0;
    const double offset = 8.0 * L * C * C;
    for (const TraceRow& row : trace.rows) {
        running = std::max(running, 4.0 * (1.0 - delta) * (row.t + 2.0) * std::abs(row.xg));
        out.push_back(running + offset);
    }
    return out;
}

}  // namespace gfw
