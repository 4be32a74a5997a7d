#pragma once

#include <span>
#include <utility>
#include <vector>

#include "radconvex/funcspec.hpp"

namespace radconvex {

struct ConvexityVerdict {
    double p;
    int grid_n;
    double x_max;
    bool pass;
    double worst_violation;  // most negative scaled second difference
    double witness_x;        // grid point u where it occurred
};

struct NecessaryCheck {
    double p;
    double x;
    double lhs;  // int_0^x f
    double rhs;  // x f(x) / (p+1)
    bool pass;
};

struct RadicalProfile {
    double p_max_estimate;  // 0 when the p=1 probe already fails
    std::vector<std::pair<double, bool>> trace;
    std::vector<NecessaryCheck> necessary_checks;
};

inline constexpr int kDefaultGridN = 1025;
inline constexpr double kDefaultTol = 1e-8;
inline constexpr double kDefaultPCap = 16.0;
inline constexpr int kDefaultIters = 40;

// Discrete convexity of g(u) = f(u^{1/p}) on the uniform u-grid [0, x_max]:
// g(u_{i-1}) - 2 g(u_i) + g(u_{i+1}) >= -tol * max(1, g(x_max)).
ConvexityVerdict is_p_radical(const FunctionSpec& f, double p,
                              int grid_n = kDefaultGridN, double x_max = 10.0,
                              double tol = kDefaultTol);

// Bisection over p in [1, p_cap]; the passing set is downward closed, so the
// predicate is monotone. Also screens the average-value necessary condition
// at p in {1, 2, 3, 4, p_max}.
RadicalProfile max_radical_order(const FunctionSpec& f, double p_cap = kDefaultPCap,
                                 int iters = kDefaultIters, int grid_n = kDefaultGridN,
                                 double x_max = 10.0, double tol = kDefaultTol);

// Necessary test only: lhs = int_0^x f, rhs = x f(x)/(p+1). Failure refutes
// p-radical convexity; passing proves nothing.
std::vector<NecessaryCheck> necessary_condition(const FunctionSpec& f, double p,
                                                std::span<const double> xs);

// Largest safe u-grid endpoint for a function, honoring bounded domains
// (x = u^{1/p} must stay below domain_end for every probed p <= p_cap).
double default_u_max(const FunctionSpec& f, double p_cap = kDefaultPCap);

}  // namespace radconvex
