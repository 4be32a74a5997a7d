#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "radconvex/common.hpp"
#include "radconvex/funcspec.hpp"
#include "radconvex/integral.hpp"
#include "radconvex/oracle.hpp"
#include "radconvex/pointwise.hpp"
#include "radconvex/radical.hpp"
#include "radconvex/report_json.hpp"

namespace rc = radconvex;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit-code contract: 0 all-pass, 1 inequality violation, 2 usage/parse,
// 3 numeric failure.
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::string iso_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RADCONVEX_SEED")) return std::strtoull(env, nullptr, 10);
    return 12345;
}

rc::SpecPtr parse_or_exit(const std::string& text) {
    auto result = rc::parse(text);
    if (auto* err = std::get_if<rc::ParseError>(&result)) {
        std::cerr << "parse error at offset " << err->position << ": " << err->message << "\n";
        std::exit(kExitUsage);
    }
    return std::get<rc::SpecPtr>(result);
}

// Smallest x_hi (by doubling) with f(x_hi) >= y, for inverse brackets.
double bracket_hi(const rc::FunctionSpec& f, double y) {
    double d = f.domain_end();
    double hi = std::isinf(d) ? 1.0 : d * (1.0 - 1e-9);
    if (std::isinf(d)) {
        while (hi < 1e12 && rc::evaluate(f, hi) < y) hi *= 2.0;
    }
    return hi;
}

struct RunReport {
    std::string command;
    std::string spec_text;
    std::vector<ordered_json> results;
    bool overall_pass = true;

    void add(ordered_json j) {
        overall_pass = overall_pass && j.value("pass", true);
        results.push_back(std::move(j));
    }

    ordered_json to_json(double duration_ms) const {
        ordered_json j;
        j["tool_version"] = kVersion;
        j["command"] = command;
        j["spec_text"] = spec_text;
        j["started_at"] = iso_timestamp();
        j["duration_ms"] = duration_ms;
        j["overall_pass"] = overall_pass;
        j["results"] = results;
        return j;
    }
};

std::string csv_params(const ordered_json& r) {
    std::string out;
    auto append = [&](const ordered_json& obj) {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (!it->is_number()) continue;
            if (!out.empty()) out += ';';
            out += it.key() + "=" + it->dump();
        }
    };
    if (r.contains("inputs")) append(r["inputs"]);
    if (r.contains("interval"))
        out += (out.empty() ? "" : ";") + std::string("a=") + r["interval"][0].dump() +
               ";b=" + r["interval"][1].dump();
    if (r.contains("p")) out += (out.empty() ? "" : ";") + std::string("p=") + r["p"].dump();
    return out;
}

void emit(const RunReport& report, const std::string& format, double duration_ms) {
    if (format == "json") {
        std::cout << report.to_json(duration_ms).dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "theorem_id,spec,params,lhs,rhs,margin,pass\n";
        for (const auto& r : report.results) {
            double lhs = 0.0;
            if (r.contains("lhs")) {
                lhs = r["lhs"].get<double>();
            } else if (r.contains("lhs_terms")) {
                for (const auto& [_, v] : r["lhs_terms"].items()) lhs += v.get<double>();
            } else if (r.contains("p_max_estimate")) {
                lhs = r["p_max_estimate"].get<double>();
            }
            double rhs = r.contains("rhs") ? r["rhs"].get<double>() : 0.0;
            std::cout << r["theorem_id"].get<std::string>() << ",\"" << report.spec_text
                      << "\",\"" << csv_params(r) << "\"," << lhs << "," << rhs << ","
                      << r["margin"].dump() << "," << (r.value("pass", true) ? "true" : "false")
                      << "\n";
        }
        return;
    }
    // human-readable table
    for (const auto& r : report.results) {
        std::cout << r["theorem_id"].get<std::string>();
        if (r.contains("p_max_estimate"))
            std::cout << "  p_max_estimate=" << r["p_max_estimate"].dump();
        if (r.contains("lhs")) std::cout << "  lhs=" << r["lhs"].dump();
        if (r.contains("lhs_terms")) {
            for (const auto& [k, v] : r["lhs_terms"].items())
                std::cout << "  " << k << "=" << v.dump();
        }
        if (r.contains("rhs")) std::cout << "  rhs=" << r["rhs"].dump();
        std::cout << "  margin=" << r["margin"].dump()
                  << "  pass=" << (r.value("pass", true) ? "yes" : "no") << "\n";
        if (r.contains("trace")) {
            for (const auto& probe : r["trace"])
                std::cout << "  probe p=" << probe["p"].dump() << " "
                          << (probe["pass"].get<bool>() ? "pass" : "fail") << "\n";
        }
        if (r.contains("necessary_checks")) {
            for (const auto& c : r["necessary_checks"])
                std::cout << "  necessary p=" << c["p"].dump() << " x=" << c["x"].dump()
                          << " lhs=" << c["lhs"].dump() << " rhs=" << c["rhs"].dump() << " "
                          << (c["pass"].get<bool>() ? "pass" : "fail ("
                              "not " + c["p"].dump() + "-radical)")
                          << "\n";
        }
    }
    std::cout << (report.overall_pass ? "overall: pass" : "overall: VIOLATION") << "\n";
}

struct VerifyParams {
    double a = 1.0, b = 2.0, t = 0.5, p = 2.0, x = 1.0;
    int m = 4;
    int samples = 0;
    std::uint64_t seed = default_seed();
};

ordered_json run_theorem(const std::string& theorem, const rc::FunctionSpec& f,
                         const VerifyParams& q) {
    if (theorem == "jensen2") return rc::to_json(rc::jensen2_refined(f, q.a, q.b, q.t));
    if (theorem == "superadd") return rc::to_json(rc::superadditivity_refined(f, q.a, q.b));
    if (theorem == "mradical") return rc::to_json(rc::mradical_bound(f, q.m, q.a, q.b, q.t));
    if (theorem == "fourradical") return rc::to_json(rc::fourradical_bound(f, q.a, q.b, q.t));
    if (theorem == "jensenn") {
        std::vector<double> w = {0.2, 0.3, 0.5};
        std::vector<double> x = {q.a, 0.5 * (q.a + q.b), q.b};
        return rc::to_json(rc::jensen_n_chain(f, w, x));
    }
    if (theorem == "uppercurve") {
        rc::UpperCurve c = rc::upper_curve(f, q.t);
        rc::InequalityReport r;
        r.theorem_id = rc::TheoremId::UPPER_CURVE;
        r.inputs = {{"t", q.t}};
        r.lhs_terms = {{"f(t)", c.lhs}, {"curve", c.mid}};
        r.rhs = c.rhs;
        r.margin = std::min(c.mid - c.lhs, c.rhs - c.mid);
        r.pass = r.margin >= -1e-9 * std::max(1.0, std::abs(c.rhs));
        return rc::to_json(r);
    }
    if (theorem == "amgm") {
        std::vector<double> w = {0.5, 0.5};
        std::vector<double> x = {std::max(q.a, 1e-3), std::max(q.b, 1e-3)};
        double hi = bracket_hi(f, std::max(x[0], x[1]));
        return rc::to_json(rc::amgm_refined(f, w, x, hi));
    }
    if (theorem == "hhfirst") return rc::to_json(rc::hh_first(f, q.a, q.b));
    if (theorem == "hhsecond") return rc::to_json(rc::hh_second(f, q.a, q.b));
    if (theorem == "unitint") return rc::to_json(rc::unit_interval_chain(f));
    if (theorem == "split") return rc::to_json(rc::split_interval_bound(f));
    if (theorem == "hhgeneral") return rc::to_json(rc::hh_general(f, q.a, q.b));
    if (theorem == "contjensen")
        return rc::to_json(rc::continuous_jensen(f, [](double x) { return x; }, q.a, q.b));
    if (theorem == "hardy") return rc::to_json(rc::hardy_finite(f, q.p, q.a, q.b));
    if (theorem == "avgvalue") return rc::to_json(rc::average_value_report(f, q.p, q.x));
    throw CLI::ValidationError("unknown theorem '" + theorem + "'");
}

// Randomized instance generation: a, b from [0, x_hi], t from [0, 1], weights
// by normalized exponentials.
void run_samples(RunReport& report, const std::string& theorem, const rc::FunctionSpec& f,
                 const VerifyParams& q) {
    rc::CounterRng rng(q.seed);
    double d = f.domain_end();
    double x_hi = std::isinf(d) ? 10.0 : 0.9 * d;
    for (int s = 0; s < q.samples; ++s) {
        VerifyParams inst = q;
        inst.t = rng.next();
        if (theorem == "superadd") {
            inst.a = rng.uniform(0.0, 0.5 * x_hi);
            inst.b = rng.uniform(0.0, 0.5 * x_hi);
        } else if (theorem == "hhfirst" || theorem == "hhsecond" || theorem == "hhgeneral" ||
                   theorem == "hardy" || theorem == "contjensen") {
            double u = rng.uniform(0.05 * x_hi, x_hi);
            double v = rng.uniform(0.05 * x_hi, x_hi);
            inst.a = std::min(u, v);
            inst.b = std::max(u, v);
            if (inst.b - inst.a < 1e-3) inst.b = inst.a + 1e-3;
        } else if (theorem == "jensenn") {
            int n = 2 + static_cast<int>(rng.next() * 7);
            std::vector<double> w(n), x(n);
            double wsum = 0.0;
            for (int i = 0; i < n; ++i) {
                w[i] = std::exp(rng.uniform(-1.0, 1.0));
                wsum += w[i];
                x[i] = rng.uniform(0.0, x_hi);
            }
            double renorm = 0.0;
            for (int i = 0; i < n; ++i) {
                w[i] /= wsum;
                renorm += w[i];
            }
            w[n - 1] += 1.0 - renorm;  // exact unit sum
            report.add(rc::to_json(rc::jensen_n_chain(f, w, x)));
            continue;
        } else if (theorem == "avgvalue") {
            inst.x = rng.uniform(0.05 * x_hi, x_hi);
        } else {
            inst.a = rng.uniform(0.0, x_hi);
            inst.b = rng.uniform(0.0, x_hi);
        }
        report.add(run_theorem(theorem, f, inst));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radconvex: classification and inequality verification for radical convex "
                 "functions"};
    app.require_subcommand(1);

    std::string format = "human";
    app.add_option("--format", format, "Output format: human, json, csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    std::string spec_text;
    VerifyParams params;
    std::string theorem;
    double p_cap = rc::kDefaultPCap;
    int iters = rc::kDefaultIters;
    int grid_n = rc::kDefaultGridN;
    double x_max = 0.0;  // 0 = auto

    auto* classify = app.add_subcommand("classify", "Estimate the largest radical order p");
    classify->add_option("spec", spec_text, "Function in the radconvex DSL")->required();
    classify->add_option("--p-cap", p_cap, "Bisection cap for p");
    classify->add_option("--iters", iters, "Bisection iterations");
    classify->add_option("--grid-n", grid_n, "Convexity grid size");
    classify->add_option("--x-max", x_max, "Grid endpoint in u-space (0 = auto)");

    auto* verify = app.add_subcommand("verify", "Verify a named inequality");
    verify->add_option("theorem", theorem,
                       "jensen2|jensenn|uppercurve|amgm|superadd|mradical|fourradical|"
                       "hhfirst|hhsecond|unitint|split|hhgeneral|contjensen|hardy|avgvalue")
        ->required();
    verify->add_option("spec", spec_text, "Function in the radconvex DSL")->required();
    verify->add_option("--a", params.a, "Left parameter / interval start");
    verify->add_option("--b", params.b, "Right parameter / interval end");
    verify->add_option("--t", params.t, "Convex combination weight");
    verify->add_option("--p", params.p, "Radical order for hardy/avgvalue");
    verify->add_option("--m", params.m, "Even order for mradical");
    verify->add_option("--x", params.x, "Evaluation point for avgvalue");
    verify->add_option("--samples", params.samples, "Randomized instance count");
    verify->add_option("--seed", params.seed, "RNG seed (fallback: RADCONVEX_SEED)");

    auto* bound = app.add_subcommand("bound", "Print every term of a refinement bound");
    bound->add_option("spec", spec_text, "Function in the radconvex DSL")->required();
    double ba = 0.0, bb = 1.0, bt = 0.5;
    std::optional<int> bm;
    bound->add_option("--a", ba, "Left point");
    bound->add_option("--b", bb, "Right point");
    bound->add_option("--t", bt, "Convex combination weight");
    bound->add_option("--m", bm, "Even order (uses the multi-term bound)");

    CLI11_PARSE(app, argc, argv);

    std::string command;
    for (int i = 1; i < argc; ++i) command += std::string(i > 1 ? " " : "") + argv[i];

    auto started = std::chrono::steady_clock::now();
    RunReport report;
    report.command = command;
    report.spec_text = spec_text;

    rc::SpecPtr f = parse_or_exit(spec_text);

    try {
        if (classify->parsed()) {
            double u_max = x_max > 0.0 ? x_max : rc::default_u_max(*f, p_cap);
            rc::RadicalProfile profile =
                rc::max_radical_order(*f, p_cap, iters, grid_n, u_max);
            report.add(rc::to_json(profile));
        } else if (verify->parsed()) {
            if (params.samples > 0) {
                run_samples(report, theorem, *f, params);
            } else {
                report.add(run_theorem(theorem, *f, params));
            }
        } else if (bound->parsed()) {
            rc::InequalityReport r = bm ? rc::mradical_bound(*f, *bm, ba, bb, bt)
                                        : rc::jensen2_refined(*f, ba, bb, bt);
            report.add(rc::to_json(r));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const rc::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }

    double duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    emit(report, format, duration_ms);

    if (verify->parsed() && !report.overall_pass) return kExitViolation;
    return 0;
}
