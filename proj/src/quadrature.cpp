#include "radconvex/quadrature.hpp"

#include <cmath>

#include "radconvex/common.hpp"

namespace radconvex {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    long evals = 0;
    double err = 0.0;

    double eval(double x) {
        ++evals;
        return f(x);
    }

    // Standard adaptive Simpson step: whole-interval estimate vs the two
    // halves, local error |S2 - S| / 15. The coarse estimate is recomputed
    // from this node's own width; reusing the parent's half-sum injects the
    // rounding gap between (b-a)/2 and the child's b-a, which for large |x|
    // leaves delta with a noise floor that never meets the halved tolerance.
    double recurse(double a, double b, double fa, double fm, double fb, double tol,
                   int depth) {
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        double flm = eval(lm), frm = eval(rm);
        double h = b - a;
        double whole = h / 6.0 * (fa + 4.0 * fm + fb);
        double left = h / 12.0 * (fa + 4.0 * flm + fm);
        double right = h / 12.0 * (fm + 4.0 * frm + fb);
        double delta = left + right - whole;
        // Below the rounding floor of the local sum, splitting only chases noise.
        double floor_tol = 4e-16 * (std::abs(left) + std::abs(right));
        if (std::abs(delta) <= 15.0 * std::max(tol, floor_tol) || h <= 1e-300) {
            err += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        if (depth >= 60)
            throw NumericError("integrate: no convergence at depth 60 (singular integrand?)");
        return recurse(a, m, fa, flm, fm, 0.5 * tol, depth + 1) +
               recurse(m, b, fm, frm, fb, 0.5 * tol, depth + 1);
    }
};

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
    if (a == b) return {0.0, 0.0, 3};
    SimpsonState st{f};
    double m = 0.5 * (a + b);
    double fa = st.eval(a), fm = st.eval(m), fb = st.eval(b);
    double value = st.recurse(a, b, fa, fm, fb, tol * (b - a), 0);
    return {value, st.err, st.evals};
}

QuadResult integrate_hh_refine_term(const FunctionSpec& f, double a, double b, double tol) {
    if (!(b >= a) || !(a >= 0.0))
        throw std::invalid_argument("integrate_hh_refine_term: requires b >= a >= 0");
    if (a == b) return {0.0, 0.0, 3};
    double width = b - a;
    auto integrand = [&](double t) { return evaluate(f, std::sqrt(t * (1.0 - t)) * width); };
    QuadResult r = integrate(integrand, 0.0, 0.5, tol);
    return {2.0 * r.value, 2.0 * r.err_estimate, r.evals};
}

}  // namespace radconvex
