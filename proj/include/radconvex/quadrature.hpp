#pragma once

#include <functional>

#include "radconvex/funcspec.hpp"

namespace radconvex {

struct QuadResult {
    double value;
    double err_estimate;
    long evals;
};

inline constexpr double kQuadTol = 1e-10;

// Adaptive Simpson with interval bisection; deterministic for fixed inputs.
// Throws NumericError past recursion depth 60.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol = kQuadTol);

// The Hermite-Hadamard refinement term
//   (1/(b-a)) * int_0^{(b-a)/2} 4 x f(x) / sqrt((b-a)^2 - 4x^2) dx,
// evaluated in the smooth t-parameterization 2 int_0^{1/2} f(sqrt(t(1-t)) (b-a)) dt.
// The x-space integrand has an inverse-square-root endpoint singularity and is
// never evaluated directly.
QuadResult integrate_hh_refine_term(const FunctionSpec& f, double a, double b,
                                    double tol = kQuadTol);

}  // namespace radconvex
