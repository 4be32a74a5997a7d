#include "radconvex/oracle.hpp"

#include <cmath>

#include "radconvex/common.hpp"

namespace radconvex::oracle {

double riemann(const std::function<double(double)>& f, double a, double b, long panels) {
    if (!(a <= b)) throw std::invalid_argument("riemann: requires a <= b");
    if (panels < 10) throw std::invalid_argument("riemann: panels must be >= 10");
    if (a == b) return 0.0;
    double h = (b - a) / panels;
    // Kahan summation; a million panels would otherwise lose digits.
    double sum = 0.0, comp = 0.0;
    for (long i = 0; i < panels; ++i) {
        double term = f(a + (i + 0.5) * h) - comp;
        double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    return sum * h;
}

ChordResult chord_convexity(const FunctionSpec& f, double p, double x_max, int samples,
                            std::uint64_t seed) {
    if (!(p >= 1.0)) throw std::invalid_argument("chord_convexity: p must be >= 1");
    if (samples < 1) throw std::invalid_argument("chord_convexity: samples must be >= 1");
    double d = f.domain_end();
    if (!std::isinf(d) && std::pow(x_max, 1.0 / p) >= d)
        throw std::domain_error("chord_convexity: x_max^{1/p} >= domain_end");

    auto g = [&](double u) { return evaluate(f, std::pow(u, 1.0 / p)); };
    double scale = std::max(1.0, g(x_max));

    CounterRng rng(seed);
    ChordResult result{true, 0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < samples; ++i) {
        double a = rng.uniform(0.0, x_max);
        double b = rng.uniform(0.0, x_max);
        double t = rng.next();
        double margin =
            ((1.0 - t) * g(a) + t * g(b) - g((1.0 - t) * a + t * b)) / scale;
        if (margin < result.worst) {
            result.worst = margin;
            result.a = a;
            result.b = b;
            result.t = t;
        }
    }
    result.pass = result.worst >= -1e-8;
    return result;
}

}  // namespace radconvex::oracle
