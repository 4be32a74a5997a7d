#include "radconvex/integral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "radconvex/common.hpp"
#include "radconvex/quadrature.hpp"
#include "radconvex/radical.hpp"

namespace radconvex {

namespace {

double pass_tol(double rhs, double quad_err) {
    return (1e-8 + 10.0 * quad_err) * std::max(1.0, std::abs(rhs));
}

// Integral routines clip to just inside bounded domains (GeomTrunc/NegLogTrunc
// blow up at the endpoint, out of scope here).
double clip_upper(const FunctionSpec& f, double b) {
    double d = f.domain_end();
    if (std::isinf(d)) return b;
    return std::min(b, d - 1e-6);
}

// Prefix integral F(x) = int_0^x f on a uniform cumulative grid with per-cell
// Simpson, queried via 4-point Lagrange interpolation. O(N) setup instead of
// nested adaptive calls.
class PrefixIntegral {
public:
    PrefixIntegral(const FunctionSpec& f, double hi, int cells = 4096)
        : hi_(hi), h_(hi / cells), values_(static_cast<std::size_t>(cells) + 1) {
        values_[0] = 0.0;
        err_ = 0.0;
        for (int i = 0; i < cells; ++i) {
            double a = i * h_, b = (i + 1) * h_, m = 0.5 * (a + b);
            double fa = evaluate(f, a), fm = evaluate(f, m), fb = evaluate(f, b);
            double coarse = h_ / 6.0 * (fa + 4.0 * fm + fb);
            double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            double fine = h_ / 12.0 * (fa + 4.0 * evaluate(f, lm) + 2.0 * fm +
                                       4.0 * evaluate(f, rm) + fb);
            err_ += std::abs(fine - coarse) / 15.0;
            values_[i + 1] = values_[i] + fine;
        }
    }

    double operator()(double x) const {
        int n = static_cast<int>(values_.size()) - 1;
        double u = x / h_;
        int i = static_cast<int>(u);
        i = std::clamp(i, 1, n - 2);
        // cubic through nodes i-1 .. i+2
        double s = u - i;
        double ym1 = values_[i - 1], y0 = values_[i], y1 = values_[i + 1], y2 = values_[i + 2];
        return y0 + s * (0.5 * (y1 - ym1) +
                         s * (ym1 - 2.5 * y0 + 2.0 * y1 - 0.5 * y2 +
                              s * (0.5 * (y2 - ym1) + 1.5 * (y0 - y1))));
    }

    double err() const { return err_; }

private:
    double hi_;
    double h_;
    double err_;
    std::vector<double> values_;
};

}  // namespace

IntegralReport hh_first(const FunctionSpec& f, double a, double b) {
    if (!(0.0 <= a && a < b)) throw std::invalid_argument("hh_first: requires 0 <= a < b");
    b = clip_upper(f, b);
    auto fx = [&](double x) { return evaluate(f, x); };
    double mid = evaluate(f, 0.5 * (a + b));
    QuadResult head = integrate(fx, 0.0, 0.5 * (b - a));
    QuadResult mean = integrate(fx, a, b);
    IntegralReport r;
    r.theorem_id = TheoremId::HH_FIRST;
    r.a = a;
    r.b = b;
    r.p = 0.0;
    r.lhs = mid + 2.0 / (b - a) * head.value;
    r.rhs = mean.value / (b - a);
    r.components = {{"midpoint", mid},
                    {"refine", 2.0 / (b - a) * head.value},
                    {"integral_mean", r.rhs}};
    r.quad_err = (2.0 * head.err_estimate + mean.err_estimate) / (b - a);
    r.margin = r.rhs - r.lhs;
    r.pass = r.margin >= -pass_tol(r.rhs, r.quad_err);
    return r;
}

IntegralReport hh_second(const FunctionSpec& f, double a, double b) {
    if (!(0.0 <= a && a < b)) throw std::invalid_argument("hh_second: requires 0 <= a < b");
    b = clip_upper(f, b);
    QuadResult mean = integrate([&](double x) { return evaluate(f, x); }, a, b);
    QuadResult refine = integrate_hh_refine_term(f, a, b);
    IntegralReport r;
    r.theorem_id = TheoremId::HH_SECOND;
    r.a = a;
    r.b = b;
    r.p = 0.0;
    r.lhs = mean.value / (b - a) + refine.value;
    r.rhs = 0.5 * (evaluate(f, a) + evaluate(f, b));
    r.components = {{"integral_mean", mean.value / (b - a)},
                    {"refine", refine.value},
                    {"endpoint_mean", r.rhs}};
    r.quad_err = mean.err_estimate / (b - a) + refine.err_estimate;
    r.margin = r.rhs - r.lhs;
    r.pass = r.margin >= -pass_tol(r.rhs, r.quad_err);
    return r;
}

IntegralReport unit_interval_chain(const FunctionSpec& f) {
    double hi = clip_upper(f, 1.0);
    auto fx = [&](double x) { return evaluate(f, x); };
    double left = evaluate(f, 0.5);
    QuadResult middle = integrate(
        [&](double x) {
            return evaluate(f, 0.5 * (x + 0.5)) + evaluate(f, 0.5 * std::abs(x - 0.5));
        },
        0.0, hi);
    QuadResult right = integrate(fx, 0.0, hi);
    IntegralReport r;
    r.theorem_id = TheoremId::UNIT_INT;
    r.a = 0.0;
    r.b = hi;
    r.p = 0.0;
    r.lhs = left;
    r.rhs = right.value;
    r.components = {{"left", left}, {"middle", middle.value}, {"right", right.value}};
    r.quad_err = middle.err_estimate + right.err_estimate;
    r.margin = std::min(middle.value - left, right.value - middle.value);
    r.pass = r.margin >= -pass_tol(r.rhs, r.quad_err);
    return r;
}

IntegralReport split_interval_bound(const FunctionSpec& f) {
    double hi = clip_upper(f, 1.0);
    auto fx = [&](double x) { return evaluate(f, x); };
    QuadResult q1 = integrate(fx, 0.0, 0.25);
    QuadResult q2 = integrate(fx, 0.25, 0.75);
    QuadResult q3 = integrate(fx, 0.75, hi);
    IntegralReport r;
    r.theorem_id = TheoremId::SPLIT_INT;
    r.a = 0.0;
    r.b = hi;
    r.p = 0.0;
    r.lhs = 3.0 * q1.value + q2.value;
    r.rhs = q3.value;
    r.components = {{"head", q1.value}, {"mid", q2.value}, {"tail", q3.value}};
    r.quad_err = 3.0 * q1.err_estimate + q2.err_estimate + q3.err_estimate;
    r.margin = r.rhs - r.lhs;
    r.pass = r.margin >= -pass_tol(r.rhs, r.quad_err);
    return r;
}

IntegralReport hh_general(const FunctionSpec& f, double a, double b) {
    if (!(0.0 <= a && a < b)) throw std::invalid_argument("hh_general: requires 0 <= a < b");
    b = clip_upper(f, b);
    double m = 0.5 * (a + b);
    double width = b - a;
    double left = evaluate(f, m);
    QuadResult middle = integrate(
        [&](double x) {
            return evaluate(f, 0.5 * (x + m)) + evaluate(f, 0.5 * std::abs(x - m));
        },
        a, b);
    QuadResult right = integrate([&](double x) { return evaluate(f, x); }, a, b);
    IntegralReport r;
    r.theorem_id = TheoremId::HH_GENERAL;
    r.a = a;
    r.b = b;
    r.p = 0.0;
    r.lhs = left;
    r.rhs = right.value / width;
    r.components = {{"left", left},
                    {"middle", middle.value / width},
                    {"right", right.value / width}};
    r.quad_err = (middle.err_estimate + right.err_estimate) / width;
    r.margin = std::min(middle.value / width - left, (right.value - middle.value) / width);
    r.pass = r.margin >= -pass_tol(r.rhs, r.quad_err);
    return r;
}

IntegralReport continuous_jensen(const FunctionSpec& f,
                                 const std::function<double(double)>& g, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("continuous_jensen: requires a < b");
    double width = b - a;
    QuadResult gint = integrate(g, a, b);
    double gbar = gint.value / width;
    double left = evaluate(f, gbar);
    QuadResult middle = integrate(
        [&](double x) {
            double gx = g(x);
            return evaluate(f, 0.5 * (gx + gbar)) + evaluate(f, 0.5 * std::abs(gx - gbar));
        },
        a, b);
    QuadResult right = integrate([&](double x) { return evaluate(f, g(x)); }, a, b);
    IntegralReport r;
    r.theorem_id = TheoremId::CONT_JENSEN;
    r.a = a;
    r.b = b;
    r.p = 0.0;
    r.lhs = left;
    r.rhs = right.value / width;
    r.components = {{"gbar", gbar},
                    {"left", left},
                    {"middle", middle.value / width},
                    {"right", right.value / width}};
    r.quad_err = (gint.err_estimate + middle.err_estimate + right.err_estimate) / width;
    r.margin = std::min(middle.value / width - left, (right.value - middle.value) / width);
    r.pass = r.margin >= -pass_tol(r.rhs, r.quad_err);
    return r;
}

IntegralReport hardy_finite(const FunctionSpec& f, double p, double alpha, double beta) {
    if (!(p >= 1.0)) throw std::invalid_argument("hardy_finite: p must be >= 1");
    if (!(0.0 < alpha && alpha < beta))
        throw std::invalid_argument("hardy_finite: requires 0 < alpha < beta");
    beta = clip_upper(f, beta);
    if (!(alpha < beta)) throw std::domain_error("hardy_finite: interval outside domain");

    PrefixIntegral prefix(f, beta);
    QuadResult lhs = integrate(
        [&](double x) { return std::pow(prefix(x) / x, p); }, alpha, beta);
    QuadResult fp = integrate([&](double x) { return std::pow(evaluate(f, x), p); }, alpha, beta);
    double scale = std::pow(1.0 / (p + 1.0), p);

    IntegralReport r;
    r.theorem_id = TheoremId::HARDY;
    r.a = alpha;
    r.b = beta;
    r.p = p;
    r.lhs = lhs.value;
    r.rhs = scale * fp.value;
    r.components = {{"running_avg_power", lhs.value},
                    {"f_power_integral", fp.value},
                    {"scale", scale}};
    r.quad_err = lhs.err_estimate + scale * fp.err_estimate +
                 p * prefix.err() * (beta - alpha) / alpha;
    r.margin = r.rhs - r.lhs;
    r.pass = r.margin >= -pass_tol(r.rhs, r.quad_err);
    return r;
}

IntegralReport average_value_report(const FunctionSpec& f, double p, double x) {
    NecessaryCheck check = necessary_condition(f, p, std::span<const double>(&x, 1)).front();
    double fx = evaluate(f, x);
    IntegralReport r;
    r.theorem_id = TheoremId::AVG_VALUE;
    r.a = 0.0;
    r.b = x;
    r.p = p;
    r.lhs = check.lhs / x;  // average value of f on [0, x]
    r.rhs = fx / (p + 1.0);
    r.components = {{"avg", r.lhs}, {"bound", r.rhs}, {"classical", 0.5 * fx}};
    r.quad_err = 0.0;
    r.margin = r.rhs - r.lhs;
    r.pass = r.margin >= -pass_tol(r.rhs, r.quad_err);
    return r;
}

}  // namespace radconvex
