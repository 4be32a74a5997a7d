#include <doctest.h>

#include <cmath>

#include "radconvex/common.hpp"
#include "radconvex/oracle.hpp"
#include "radconvex/quadrature.hpp"

using namespace radconvex;

TEST_CASE("polynomial and exponential integrals") {
    auto sq = [](double x) { return x * x; };
    QuadResult r = integrate(sq, 0.0, 1.0, 1e-10);
    CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(r.evals >= 3);
    CHECK(r.err_estimate >= 0.0);

    auto f = [](double x) { return std::exp(x) - 1.0 - x; };
    CHECK(integrate(f, 0.0, 1.0, 1e-10).value ==
          doctest::Approx(std::exp(1.0) - 2.5).epsilon(1e-10));

    CHECK(integrate([](double x) { return x; }, 2.0, 2.0, 1e-10).value == 0.0);
}

TEST_CASE("cubic exactness") {
    auto cubic = [](double x) { return 2.0 * x * x * x - x * x + 4.0 * x - 7.0; };
    auto anti = [](double x) { return 0.5 * x * x * x * x - x * x * x / 3.0 + 2.0 * x * x - 7.0 * x; };
    for (auto [a, b] : {std::pair{0.0, 1.0}, {-3.0, 5.0}, {2.0, 2.5}}) {
        QuadResult r = integrate(cubic, a, b, 1e-10);
        double exact = anti(b) - anti(a);
        CHECK(std::abs(r.value - exact) <= 1e-13 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("additivity over adjacent intervals") {
    auto f = [](double x) { return std::exp(x) - 1.0; };
    CounterRng rng(7);
    for (int i = 0; i < 20; ++i) {
        double a = rng.uniform(0.0, 2.0);
        double b = a + rng.uniform(0.0, 2.0);
        double c = b + rng.uniform(0.0, 2.0);
        double whole = integrate(f, a, c).value;
        double split = integrate(f, a, b).value + integrate(f, b, c).value;
        CHECK(whole == doctest::Approx(split).epsilon(1e-9));
    }
}

TEST_CASE("divergent integrand fails loudly") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-10),
                    NumericError);
}

TEST_CASE("hh refine term in t-space") {
    auto sq = FunctionSpec::pow(2);
    // 2 int_0^{1/2} 4 t(1-t) dt = 2/3 for f = x^2 on (1, 3)
    CHECK(integrate_hh_refine_term(*sq, 1.0, 3.0).value ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(integrate_hh_refine_term(*sq, 2.0, 2.0).value == 0.0);

    // f = x^4 on (0, 2), cross-checked against the Riemann oracle of the same
    // t-parameterized integrand
    auto quartic = FunctionSpec::pow(4);
    double adaptive = integrate_hh_refine_term(*quartic, 0.0, 2.0).value;
    double brute = 2.0 * oracle::riemann(
                             [&](double t) {
                                 return evaluate(*quartic, std::sqrt(t * (1.0 - t)) * 2.0);
                             },
                             0.0, 0.5, 1'000'000);
    CHECK(adaptive == doctest::Approx(brute).epsilon(1e-9));
}
