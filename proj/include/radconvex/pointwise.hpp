#pragma once

#include <span>

#include "radconvex/funcspec.hpp"
#include "radconvex/reports.hpp"

namespace radconvex {

// Residual of the two-point identity behind the refined Jensen inequality:
// (1-t)a^2 + t b^2 - t(1-t)(a-b)^2 - ((1-t)a + tb)^2. Zero up to rounding.
double algebraic_identity_residual(double a, double b, double t);

// f((1-t)a+tb) + f(sqrt(t(1-t)) |a-b|) <= (1-t) f(a) + t f(b).
// Exact (margin 0) for f(x) = x^2.
InequalityReport jensen2_refined(const FunctionSpec& f, double a, double b, double t);

// The five chained quantities of the refined n-point Jensen inequality:
//   Q1 = f(xbar), Q2 = sum w_i f((xbar+x_i)/2), Q3 = Q2 + sum w_i f(|xbar-x_i|/2),
//   Q4 = (Q1 + Q5)/2, Q5 = sum w_i f(x_i); Q1 <= Q2 <= Q3 <= Q4 <= Q5.
InequalityReport jensen_n_chain(const FunctionSpec& f, std::span<const double> w,
                                std::span<const double> x);

struct UpperCurve {
    double lhs;  // f(t)
    double mid;  // f(1) t - f(sqrt(t(1-t)))
    double rhs;  // f(1) t
};
UpperCurve upper_curve(const FunctionSpec& f, double t);

// Refined AM-GM: prod x_i^{w_i} <= sum w_i [f((ybar+y_i)/2) + f(|ybar-y_i|/2)]
// <= sum w_i x_i with y_i = f^{-1}(x_i).
InequalityReport amgm_refined(const FunctionSpec& f, std::span<const double> w,
                              std::span<const double> x, double x_hi);

// f(a) + f(b) + f(sqrt(2ab)) <= f(a+b).
InequalityReport superadditivity_refined(const FunctionSpec& f, double a, double b);

// Multi-term bound for m-radical convex f, m even:
// sum_{k=0}^{m/2} f( C(m/2,k)^{1/m} (t(1-t))^{k/m} |a-b|^{2k/m} mean^{1-2k/m} )
// <= (1-t) f(a) + t f(b), mean = (1-t)a + tb. Convention 0^0 = 1.
InequalityReport mradical_bound(const FunctionSpec& f, int m, double a, double b, double t);

// Explicit three-term form of the m=4 case; matches mradical_bound(f,4,...)
// term-by-term.
InequalityReport fourradical_bound(const FunctionSpec& f, double a, double b, double t);

}  // namespace radconvex
