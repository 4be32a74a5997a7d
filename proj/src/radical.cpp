#include "radconvex/radical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "radconvex/quadrature.hpp"

namespace radconvex {

ConvexityVerdict is_p_radical(const FunctionSpec& f, double p, int grid_n, double x_max,
                              double tol) {
    if (!(p >= 1.0)) throw std::invalid_argument("is_p_radical: p must be >= 1");
    if (grid_n < 3) throw std::invalid_argument("is_p_radical: grid_n must be >= 3");
    if (!(x_max > 0.0)) throw std::invalid_argument("is_p_radical: x_max must be > 0");
    double d = f.domain_end();
    if (!std::isinf(d) && std::pow(x_max, 1.0 / p) >= d)
        throw std::domain_error("is_p_radical: x_max^{1/p} >= domain_end");

    double h = x_max / (grid_n - 1);
    std::vector<double> g(static_cast<std::size_t>(grid_n));
    for (int i = 0; i < grid_n; ++i) g[i] = evaluate(f, std::pow(i * h, 1.0 / p));

    double scale = std::max(1.0, g.back());
    double worst = 0.0, witness = 0.0;
    for (int i = 1; i + 1 < grid_n; ++i) {
        double d2 = (g[i - 1] - 2.0 * g[i] + g[i + 1]) / scale;
        if (d2 < worst) {
            worst = d2;
            witness = i * h;
        }
    }
    return {p, grid_n, x_max, worst >= -tol, worst, witness};
}

RadicalProfile max_radical_order(const FunctionSpec& f, double p_cap, int iters, int grid_n,
                                 double x_max, double tol) {
    if (!(p_cap >= 1.0)) throw std::invalid_argument("max_radical_order: p_cap must be >= 1");
    if (iters < 1) throw std::invalid_argument("max_radical_order: iters must be >= 1");

    RadicalProfile profile;
    auto probe = [&](double p) {
        bool pass = is_p_radical(f, p, grid_n, x_max, tol).pass;
        profile.trace.emplace_back(p, pass);
        return pass;
    };

    if (!probe(1.0)) {
        profile.p_max_estimate = 0.0;  // not radical convex even at p = 1
    } else if (p_cap == 1.0 || probe(p_cap)) {
        profile.p_max_estimate = p_cap;
    } else {
        double lo = 1.0, hi = p_cap;
        for (int i = 0; i < iters; ++i) {
            double mid = 0.5 * (lo + hi);
            (probe(mid) ? lo : hi) = mid;
        }
        profile.p_max_estimate = 0.5 * (lo + hi);
    }

    // Necessary-condition screening at a representative point.
    double d = f.domain_end();
    double x = std::isinf(d) ? 1.0 : 0.5 * d;
    std::vector<double> ps = {1.0, 2.0, 3.0, 4.0};
    if (profile.p_max_estimate > 0.0 &&
        std::none_of(ps.begin(), ps.end(),
                     [&](double q) { return std::abs(q - profile.p_max_estimate) < 1e-9; }))
        ps.push_back(profile.p_max_estimate);
    for (double q : ps) {
        auto checks = necessary_condition(f, q, std::span<const double>(&x, 1));
        profile.necessary_checks.push_back(checks.front());
    }
    return profile;
}

std::vector<NecessaryCheck> necessary_condition(const FunctionSpec& f, double p,
                                                std::span<const double> xs) {
    if (!(p >= 1.0)) throw std::invalid_argument("necessary_condition: p must be >= 1");
    std::vector<NecessaryCheck> out;
    out.reserve(xs.size());
    for (double x : xs) {
        if (!(x > 0.0) || x >= f.domain_end())
            throw std::domain_error("necessary_condition: x outside (0, domain_end)");
        double lhs = integrate([&](double t) { return evaluate(f, t); }, 0.0, x).value;
        double rhs = x * evaluate(f, x) / (p + 1.0);
        out.push_back({p, x, lhs, rhs, lhs <= rhs + 1e-9 * std::max(1.0, rhs)});
    }
    return out;
}

double default_u_max(const FunctionSpec& f, double p_cap) {
    double d = f.domain_end();
    if (std::isinf(d)) return 10.0;
    if (d > 1.0) return std::min(10.0, d * (1.0 - 1e-9));
    // bounded domain at or below 1: min_p d^p over [1, p_cap] is d^p_cap
    return 0.9 * std::pow(d, p_cap);
}

}  // namespace radconvex
