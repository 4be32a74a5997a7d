#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace radconvex {

// Signals a numeric breakdown (quadrature non-convergence, bracket failure).
// Distinct from std::domain_error so callers can map it to a separate exit code.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Counter-based generator: value i depends only on (seed, i), so any failing
// draw replays exactly from its index.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    // uniform double in [0, 1)
    double next() {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z = z ^ (z >> 31);
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace radconvex
