// End-to-end acceptance checks. Each criterion prints a single pass/fail line;
// the process exits nonzero if any criterion fails.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <sys/wait.h>

#include "radconvex/common.hpp"
#include "radconvex/funcspec.hpp"
#include "radconvex/integral.hpp"
#include "radconvex/oracle.hpp"
#include "radconvex/pointwise.hpp"
#include "radconvex/quadrature.hpp"
#include "radconvex/radical.hpp"

using namespace radconvex;

namespace {

std::vector<std::string> g_failures;

void expect(bool cond, const std::string& what) {
    if (!cond) g_failures.push_back(what);
}

void expect_near(double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol)) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want << " (tol " << tol << ")";
        g_failures.push_back(os.str());
    }
}

SpecPtr parsed(const std::string& text) {
    auto res = parse(text);
    if (!std::holds_alternative<SpecPtr>(res)) {
        std::cerr << "internal: failed to parse " << text << "\n";
        std::exit(2);
    }
    return std::get<SpecPtr>(res);
}

double term(const InequalityReport& r, const std::string& name) {
    for (const auto& [k, v] : r.lhs_terms)
        if (k == name) return v;
    g_failures.push_back("missing lhs term " + name);
    return 0.0;
}

double comp(const IntegralReport& r, const std::string& name) {
    for (const auto& [k, v] : r.components)
        if (k == name) return v;
    g_failures.push_back("missing component " + name);
    return 0.0;
}

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(RADCONVEX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string strip_timing(const std::string& json_text) {
    std::istringstream in(json_text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("\"started_at\"") != std::string::npos) continue;
        if (line.find("\"duration_ms\"") != std::string::npos) continue;
        out << line << "\n";
    }
    return out.str();
}

// ---- criteria ----

void criterion_classification() {
    auto order = [](const std::string& text) {
        return max_radical_order(*parsed(text)).p_max_estimate;
    };
    expect_near(order("pow(2)"), 2.0, 0.05, "order of pow(2)");
    expect_near(order("pow(4)"), 4.0, 0.05, "order of pow(4)");
    expect_near(order("series(1, 1.0)"), 1.0, 0.05, "order of the identity map");
    expect(order("exptrunc(1)") >= 1.95, "order of exptrunc(1) should reach 2");

    double x = 1.0;
    auto check = necessary_condition(*parsed("exptrunc(0)"), 2.0,
                                     std::span<const double>(&x, 1)).front();
    expect(!check.pass, "exptrunc(0) must fail the order-2 average-value test");
    expect_near(check.lhs, std::exp(1.0) - 2.0, 1e-6, "exptrunc(0) average-value lhs");
    expect_near(check.rhs, (std::exp(1.0) - 1.0) / 3.0, 1e-6, "exptrunc(0) average-value rhs");
}

void criterion_identity_and_exactness() {
    CounterRng rng(2001);
    double worst = 0.0;
    for (int i = 0; i < 100'000; ++i) {
        double a = rng.uniform(0.0, 100.0);
        double b = rng.uniform(0.0, 100.0);
        double t = rng.next();
        double scale = std::max({1.0, a * a, b * b});
        worst = std::max(worst, std::abs(algebraic_identity_residual(a, b, t)) / scale);
    }
    expect(worst <= 1e-12, "two-point identity residual exceeds 1e-12 scaled");

    auto sq = parsed("pow(2)");
    for (int i = 0; i < 100; ++i) {
        double a = rng.uniform(0.1, 50.0);
        double b = rng.uniform(0.1, 50.0);
        if (a > b) std::swap(a, b);
        if (b - a < 1e-3) b += 1e-2;
        double t = rng.next();
        auto j = jensen2_refined(*sq, a, b, t);
        expect(std::abs(j.margin) <= 1e-8 * std::max(1.0, std::abs(j.rhs)),
               "jensen2 not exact for pow(2)");
        auto h1 = hh_first(*sq, a, b);
        expect(std::abs(h1.margin) <= 1e-8 * std::max(1.0, std::abs(h1.rhs)),
               "hh_first not exact for pow(2)");
        auto h2 = hh_second(*sq, a, b);
        expect(std::abs(h2.margin) <= 1e-8 * std::max(1.0, std::abs(h2.rhs)),
               "hh_second not exact for pow(2)");
    }
}

void criterion_jensen_chain() {
    for (const char* text : {"pow(2)", "pow(3)", "pow(4)", "exptrunc(1)"}) {
        auto f = parsed(text);
        CounterRng rng(3000 + std::string(text).size());
        for (int i = 0; i < 1000; ++i) {
            int n = 2 + static_cast<int>(rng.uniform(0.0, 7.0 - 1e-12));
            std::vector<double> w(n), x(n);
            double wsum = 0.0;
            for (int k = 0; k < n; ++k) {
                w[k] = std::exp(rng.uniform(-1.0, 1.0));
                wsum += w[k];
                x[k] = rng.uniform(0.0, 10.0);
            }
            double acc = 0.0;
            for (int k = 0; k + 1 < n; ++k) {
                w[k] /= wsum;
                acc += w[k];
            }
            w[n - 1] = 1.0 - acc;
            auto r = jensen_n_chain(*f, w, x);
            if (!r.pass) {
                std::ostringstream os;
                os << "jensen chain broke for " << text << " (instance " << i
                   << ", margin " << r.margin << ")";
                g_failures.push_back(os.str());
                return;
            }
        }
    }

    std::array<double, 2> w = {0.5, 0.5};
    std::array<double, 2> x = {0.0, 2.0};
    auto r = jensen_n_chain(*parsed("pow(2)"), w, x);
    expect_near(term(r, "Q1"), 1.0, 1e-12, "hand chain q1");
    expect_near(term(r, "Q2"), 1.25, 1e-12, "hand chain q2");
    expect_near(term(r, "Q3"), 1.5, 1e-12, "hand chain q3");
    expect_near(term(r, "Q4"), 1.5, 1e-12, "hand chain q4");
    expect_near(r.rhs, 2.0, 1e-12, "hand chain q5");
}

void criterion_hh_refinements() {
    auto h1 = hh_first(*parsed("pow(4)"), 1.0, 3.0);
    expect_near(h1.lhs, 16.2, 1e-7, "hh_first pow(4) lhs");
    expect_near(h1.rhs, 24.2, 1e-7, "hh_first pow(4) rhs");
    expect(h1.pass, "hh_first pow(4) should pass");

    auto h2 = hh_second(*parsed("pow(2)"), 1.0, 3.0);
    expect_near(h2.lhs, 5.0, 1e-7, "hh_second pow(2) lhs");
    expect_near(h2.rhs, 5.0, 1e-7, "hh_second pow(2) rhs");
    expect(h2.pass, "hh_second pow(2) should pass");

    auto u = unit_interval_chain(*parsed("pow(2)"));
    expect_near(comp(u, "left"), 0.25, 1e-8, "unit chain left");
    expect_near(comp(u, "middle"), 7.0 / 24.0, 1e-8, "unit chain middle");
    expect_near(comp(u, "right"), 1.0 / 3.0, 1e-8, "unit chain right");
    expect(u.pass, "unit chain pow(2) should pass");
}

void criterion_split_bound() {
    auto good = split_interval_bound(*parsed("pow(2)"));
    expect_near(good.lhs, 29.0 / 192.0, 1e-9, "split pow(2) lhs");
    expect_near(good.rhs, 37.0 / 192.0, 1e-9, "split pow(2) rhs");
    expect(good.pass, "split pow(2) should pass");

    auto bad = split_interval_bound(*parsed("series(1, 1.0)"));
    expect_near(bad.lhs, 11.0 / 32.0, 1e-9, "split identity lhs");
    expect_near(bad.rhs, 7.0 / 32.0, 1e-9, "split identity rhs");
    expect(!bad.pass, "split must fail for the identity map");
}

void criterion_hardy() {
    for (int p : {2, 3, 4}) {
        auto r = hardy_finite(*parsed("pow(" + std::to_string(p) + ")"),
                              static_cast<double>(p), 1.0, 2.0);
        expect(std::abs(r.lhs - r.rhs) <= 1e-6 * r.rhs,
               "hardy equality off for pow(" + std::to_string(p) + ")");
    }
    auto r = hardy_finite(*parsed("pow(4)"), 2.0, 1.0, 2.0);
    expect_near(r.lhs / r.rhs, 9.0 / 25.0, 1e-6, "hardy pow(4) at p=2 ratio");
}

void criterion_mradical() {
    auto f4 = parsed("pow(4)");
    CounterRng rng(7001);
    for (int i = 0; i < 1000; ++i) {
        double a = rng.uniform(0.0, 10.0);
        double b = rng.uniform(0.0, 10.0);
        double t = rng.next();
        auto two = mradical_bound(*f4, 2, a, b, t);
        auto j = jensen2_refined(*f4, a, b, t);
        double scale = std::max(1.0, std::abs(j.rhs));
        bool same = std::abs(term(two, "k0") - term(j, "main")) <= 1e-12 * scale &&
                    std::abs(term(two, "k1") - term(j, "refine")) <= 1e-12 * scale &&
                    std::abs(two.rhs - j.rhs) <= 1e-12 * scale;
        if (!same) {
            g_failures.push_back("m=2 bound does not match jensen2 (instance " +
                                 std::to_string(i) + ")");
            return;
        }
        auto four = fourradical_bound(*f4, a, b, t);
        auto m4 = mradical_bound(*f4, 4, a, b, t);
        for (const char* k : {"k0", "k1", "k2"}) {
            if (std::abs(term(four, k) - term(m4, k)) > 1e-12 * scale) {
                g_failures.push_back("explicit m=4 form disagrees with the general bound");
                return;
            }
        }
    }

    auto r = mradical_bound(*f4, 4, 0.0, 2.0, 0.5);
    expect_near(term(r, "k0"), 1.0, 1e-9, "m=4 hand term k0");
    expect_near(term(r, "k1"), 2.0, 1e-9, "m=4 hand term k1");
    expect_near(term(r, "k2"), 1.0, 1e-9, "m=4 hand term k2");
    expect_near(r.rhs, 8.0, 1e-9, "m=4 hand rhs");
}

void criterion_oracle_concordance() {
    const char* funcs[] = {"pow(1)",        "pow(2)",        "pow(3)",
                           "pow(4)",        "pow(5)",        "pow(6)",
                           "exptrunc(0)",   "exptrunc(1)",   "exptrunc(2)",
                           "exptrunc(3)",   "geomtrunc(0)",  "geomtrunc(1)",
                           "geomtrunc(2)",  "neglogtrunc(1)", "neglogtrunc(2)"};
    const double orders[] = {1.0, 1.5, 2.0, 3.0, 4.0, 5.0};
    for (const char* text : funcs) {
        auto f = parsed(text);
        double x_max = std::isinf(f->domain_end()) ? 10.0 : 0.9;
        for (double p : orders) {
            auto grid = is_p_radical(*f, p, kDefaultGridN, x_max);
            auto chord = oracle::chord_convexity(*f, p, x_max, 30'000, 3);
            if (grid.pass != chord.pass) {
                std::ostringstream os;
                os << "grid and chord verdicts differ for " << text << " at p=" << p
                   << " (grid " << grid.pass << ", chord " << chord.pass << ")";
                g_failures.push_back(os.str());
            }
        }
    }

    const char* pool[] = {"pow(2)", "pow(3)", "pow(4)", "exptrunc(0)",
                          "exptrunc(1)", "neglogtrunc(1)"};
    CounterRng rng(8001);
    for (int i = 0; i < 50; ++i) {
        auto f = parsed(pool[i % 6]);
        double hi = std::isinf(f->domain_end()) ? 10.0 : 0.9;
        double a = rng.uniform(0.0, 0.5 * hi);
        double b = rng.uniform(a + 0.1 * hi, hi);
        auto fx = [&](double x) { return evaluate(*f, x); };
        double adaptive = integrate(fx, a, b).value;
        double brute = oracle::riemann(fx, a, b);
        if (std::abs(adaptive - brute) > 1e-5 * std::max(1.0, std::abs(brute))) {
            std::ostringstream os;
            os << "integrator disagrees with the midpoint sum on " << pool[i % 6]
               << " over [" << a << ", " << b << "]";
            g_failures.push_back(os.str());
        }
    }
}

void criterion_cli() {
    expect(run_cli("classify \"pow(4)\"").exit_code == 0, "classify pow(4) exit code");
    expect(run_cli("classify \"exptrunc(0)\"").exit_code == 0,
           "classify exptrunc(0) exit code");
    expect(run_cli("classify \"pow(0.5)\"").exit_code == 2,
           "classify pow(0.5) should exit 2");
    expect(run_cli("verify split \"series(1, 1.0)\"").exit_code == 1,
           "verify split on the identity map should exit 1");

    auto first = run_cli("--format json verify jensen2 \"pow(3)\" --a 1 --b 4 --t 0.25 --seed 9");
    auto second = run_cli("--format json verify jensen2 \"pow(3)\" --a 1 --b 4 --t 0.25 --seed 9");
    expect(first.exit_code == 0 && second.exit_code == 0, "json verify exit codes");
    expect(!first.out.empty() && strip_timing(first.out) == strip_timing(second.out),
           "json output must be reproducible apart from timing fields");
}

struct Criterion {
    const char* name;
    void (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"classification and refutation", criterion_classification},
        {"two-point identity and exactness", criterion_identity_and_exactness},
        {"refined jensen chain", criterion_jensen_chain},
        {"hermite-hadamard refinements", criterion_hh_refinements},
        {"split interval bound", criterion_split_bound},
        {"hardy bound", criterion_hardy},
        {"multi-term radical bounds", criterion_mradical},
        {"oracle concordance", criterion_oracle_concordance},
        {"cli contract", criterion_cli},
    };

    int failed = 0;
    int idx = 0;
    for (const auto& c : criteria) {
        ++idx;
        g_failures.clear();
        try {
            c.run();
        } catch (const std::exception& e) {
            g_failures.push_back(std::string("exception: ") + e.what());
        }
        bool ok = g_failures.empty();
        std::cout << "criterion " << idx << " (" << c.name << "): "
                  << (ok ? "pass" : "FAIL") << "\n";
        for (const auto& msg : g_failures) std::cout << "    " << msg << "\n";
        if (!ok) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : "some criteria FAILED") << "\n";
    return failed == 0 ? 0 : 1;
}
