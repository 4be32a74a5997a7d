#pragma once

#include <cstdint>
#include <functional>

#include "radconvex/funcspec.hpp"

// Independent brute-force checks, used only by tests. No numeric kernels are
// shared with the modules they validate.
namespace radconvex::oracle {

inline constexpr long kDefaultPanels = 1'000'000;
inline constexpr int kDefaultChordSamples = 10'000;

// Midpoint-rule Riemann sum over uniform panels, Kahan-summed. No adaptivity.
double riemann(const std::function<double(double)>& f, double a, double b,
               long panels = kDefaultPanels);

struct ChordResult {
    bool pass;
    double worst;  // most negative scaled chord margin
    double a, b, t;
};

// Random-chord test of convexity of g(u) = f(u^{1/p}) on [0, x_max]:
// g((1-t)a+tb) <= (1-t) g(a) + t g(b) for uniform draws. Deterministic by seed.
ChordResult chord_convexity(const FunctionSpec& f, double p, double x_max,
                            int samples = kDefaultChordSamples,
                            std::uint64_t seed = 1);

}  // namespace radconvex::oracle
