#include "radconvex/pointwise.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace radconvex {

namespace {

double margin_tol(double rhs) { return kMarginTol * std::max(1.0, std::abs(rhs)); }

// 0^0 := 1, matching the binomial-expansion convention for the k = m/2 term.
double powz(double base, double e) {
    if (e == 0.0) return 1.0;
    return std::pow(base, e);
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void check_weights(std::span<const double> w, std::span<const double> x) {
    if (w.size() != x.size() || w.empty())
        throw std::invalid_argument("weights and points must have equal nonzero length");
    double sum = 0.0;
    for (double wi : w) {
        if (!(wi >= 0.0)) throw std::invalid_argument("weights must be nonnegative");
        sum += wi;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("weights must sum to 1 (within 1e-12)");
}

}  // namespace

double algebraic_identity_residual(double a, double b, double t) {
    if (!(a >= 0.0) || !(b >= 0.0)) throw std::invalid_argument("requires a, b >= 0");
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("requires t in [0, 1]");
    double mean = (1.0 - t) * a + t * b;
    return (1.0 - t) * a * a + t * b * b - t * (1.0 - t) * (a - b) * (a - b) - mean * mean;
}

InequalityReport jensen2_refined(const FunctionSpec& f, double a, double b, double t) {
    double mean = (1.0 - t) * a + t * b;
    double refine_arg = std::sqrt(t * (1.0 - t)) * std::abs(a - b);
    InequalityReport r;
    r.theorem_id = TheoremId::JENSEN2;
    r.inputs = {{"a", a}, {"b", b}, {"t", t}};
    r.lhs_terms = {{"main", evaluate(f, mean)}, {"refine", evaluate(f, refine_arg)}};
    r.rhs = (1.0 - t) * evaluate(f, a) + t * evaluate(f, b);
    r.margin = r.rhs - (r.lhs_terms[0].second + r.lhs_terms[1].second);
    r.pass = r.margin >= -margin_tol(r.rhs);
    return r;
}

InequalityReport jensen_n_chain(const FunctionSpec& f, std::span<const double> w,
                                std::span<const double> x) {
    check_weights(w, x);
    const std::size_t n = w.size();
    double xbar = 0.0;
    for (std::size_t i = 0; i < n; ++i) xbar += w[i] * x[i];

    double q1 = evaluate(f, xbar);
    double q2 = 0.0, refine = 0.0, q5 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        q2 += w[i] * evaluate(f, 0.5 * (xbar + x[i]));
        refine += w[i] * evaluate(f, 0.5 * std::abs(xbar - x[i]));
        q5 += w[i] * evaluate(f, x[i]);
    }
    double q3 = q2 + refine;
    double q4 = 0.5 * (q1 + q5);

    InequalityReport r;
    r.theorem_id = TheoremId::JENSEN_N;
    r.inputs.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        r.inputs.emplace_back("w" + std::to_string(i), w[i]);
        r.inputs.emplace_back("x" + std::to_string(i), x[i]);
    }
    r.lhs_terms = {{"Q1", q1}, {"Q2", q2}, {"Q3", q3}, {"Q4", q4}, {"Q5", q5}};
    r.rhs = q5;
    r.margin = std::min({q2 - q1, q3 - q2, q4 - q3, q5 - q4});
    r.pass = r.margin >= -margin_tol(q5);
    return r;
}

UpperCurve upper_curve(const FunctionSpec& f, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("upper_curve: t in [0, 1]");
    double f1 = evaluate(f, 1.0);
    return {evaluate(f, t), f1 * t - evaluate(f, std::sqrt(t * (1.0 - t))), f1 * t};
}

InequalityReport amgm_refined(const FunctionSpec& f, std::span<const double> w,
                              std::span<const double> x, double x_hi) {
    check_weights(w, x);
    const std::size_t n = w.size();
    std::vector<double> y(n);
    double geo = 1.0, ybar = 0.0, rhs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0)) throw std::invalid_argument("amgm_refined: points must be > 0");
        y[i] = inverse(f, x[i], x_hi);
        ybar += w[i] * y[i];
        geo *= std::pow(x[i], w[i]);
        rhs += w[i] * x[i];
    }
    double mid = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        mid += w[i] * (evaluate(f, 0.5 * (ybar + y[i])) +
                       evaluate(f, 0.5 * std::abs(ybar - y[i])));

    InequalityReport r;
    r.theorem_id = TheoremId::AMGM;
    for (std::size_t i = 0; i < n; ++i) {
        r.inputs.emplace_back("w" + std::to_string(i), w[i]);
        r.inputs.emplace_back("x" + std::to_string(i), x[i]);
    }
    r.lhs_terms = {{"geomean", geo}, {"mid", mid}};
    r.rhs = rhs;
    r.margin = std::min(mid - geo, rhs - mid);
    r.pass = r.margin >= -margin_tol(rhs);
    return r;
}

InequalityReport superadditivity_refined(const FunctionSpec& f, double a, double b) {
    if (!(a >= 0.0) || !(b >= 0.0)) throw std::invalid_argument("requires a, b >= 0");
    InequalityReport r;
    r.theorem_id = TheoremId::SUPERADD;
    r.inputs = {{"a", a}, {"b", b}};
    r.lhs_terms = {{"f(a)", evaluate(f, a)},
                   {"f(b)", evaluate(f, b)},
                   {"f(sqrt(2ab))", evaluate(f, std::sqrt(2.0 * a * b))}};
    r.rhs = evaluate(f, a + b);
    double lhs = 0.0;
    for (const auto& [_, v] : r.lhs_terms) lhs += v;
    r.margin = r.rhs - lhs;
    r.pass = r.margin >= -margin_tol(r.rhs);
    return r;
}

InequalityReport mradical_bound(const FunctionSpec& f, int m, double a, double b, double t) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("mradical_bound: m must be even, >= 2");
    if (!(a >= 0.0) || !(b >= 0.0)) throw std::invalid_argument("requires a, b >= 0");
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("requires t in [0, 1]");

    double mean = (1.0 - t) * a + t * b;
    double diff = std::abs(a - b);
    InequalityReport r;
    r.theorem_id = TheoremId::MRADICAL;
    r.inputs = {{"m", static_cast<double>(m)}, {"a", a}, {"b", b}, {"t", t}};
    double lhs = 0.0;
    for (int k = 0; k <= m / 2; ++k) {
        double arg = std::pow(binom(m / 2, k), 1.0 / m) * powz(t * (1.0 - t), double(k) / m) *
                     powz(diff, 2.0 * k / m) * powz(mean, 1.0 - 2.0 * k / m);
        double term = evaluate(f, arg);
        r.lhs_terms.emplace_back("k" + std::to_string(k), term);
        lhs += term;
    }
    r.rhs = (1.0 - t) * evaluate(f, a) + t * evaluate(f, b);
    r.margin = r.rhs - lhs;
    r.pass = r.margin >= -margin_tol(r.rhs);
    return r;
}

InequalityReport fourradical_bound(const FunctionSpec& f, double a, double b, double t) {
    if (!(a >= 0.0) || !(b >= 0.0)) throw std::invalid_argument("requires a, b >= 0");
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("requires t in [0, 1]");
    double mean = (1.0 - t) * a + t * b;
    double diff = std::abs(a - b);
    InequalityReport r;
    r.theorem_id = TheoremId::FOURRADICAL;
    r.inputs = {{"a", a}, {"b", b}, {"t", t}};
    r.lhs_terms = {
        {"k0", evaluate(f, mean)},
        {"k1", evaluate(f, std::pow(2.0 * t * (1.0 - t), 0.25) * std::sqrt(diff * mean))},
        {"k2", evaluate(f, std::sqrt(t * (1.0 - t)) * diff)},
    };
    r.rhs = (1.0 - t) * evaluate(f, a) + t * evaluate(f, b);
    double lhs = 0.0;
    for (const auto& [_, v] : r.lhs_terms) lhs += v;
    r.margin = r.rhs - lhs;
    r.pass = r.margin >= -margin_tol(r.rhs);
    return r;
}

}  // namespace radconvex
