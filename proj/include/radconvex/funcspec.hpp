#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace radconvex {

class FunctionSpec;
using SpecPtr = std::shared_ptr<const FunctionSpec>;

// Node kinds. Every representable f:[0,D)->[0,inf) satisfies f(0)=0 and is
// nondecreasing on its domain.
struct PowNode { double p; };                                // x^p, p >= 1
struct ExpTruncNode { int k; };                              // e^x - sum_{n=0}^{k} x^n/n!
struct GeomTruncNode { int k; };                             // 1/(1-x) - sum_{n=0}^{k} x^n, D = 1
struct NegLogTruncNode { int k; };                           // -ln(1-x) - sum_{n=1}^{k} x^n/n, D = 1
struct SeriesNode { int n0; std::vector<double> coeffs; };   // sum a_n x^n from n0 >= 1
struct ScaleNode { double c; SpecPtr inner; };               // c * f, c > 0
struct SumNode { SpecPtr left, right; };
struct ComposeNode { SpecPtr outer, inner; };                // outer must be a builtin leaf

namespace detail {
struct SpecAccess;
}

class FunctionSpec {
public:
    using Node = std::variant<PowNode, ExpTruncNode, GeomTruncNode, NegLogTruncNode,
                              SeriesNode, ScaleNode, SumNode, ComposeNode>;

    // Factories validate their arguments (std::invalid_argument on bad input).
    static SpecPtr pow(double p);
    static SpecPtr exp_trunc(int k);
    static SpecPtr geom_trunc(int k);
    static SpecPtr neg_log_trunc(int k);
    static SpecPtr series(int n0, std::vector<double> coeffs);
    static SpecPtr scale(double c, SpecPtr inner);
    static SpecPtr sum(SpecPtr left, SpecPtr right);
    static SpecPtr compose(SpecPtr outer, SpecPtr inner);

    const Node& node() const { return node_; }
    double domain_end() const { return domain_end_; }

private:
    friend struct detail::SpecAccess;

    FunctionSpec(Node node, double domain_end)
        : node_(std::move(node)), domain_end_(domain_end) {}

    Node node_;
    double domain_end_;
};

double evaluate(const FunctionSpec& f, double x);

// Monotone inverse on [0, x_hi] by bisection; closed form for pow.
// Throws NumericError when f(x_hi) < y (bracket failure).
double inverse(const FunctionSpec& f, double y, double x_hi);

// Canonical printer; parse(format(f)) is structurally equal to f.
std::string format(const FunctionSpec& f);

bool structurally_equal(const FunctionSpec& a, const FunctionSpec& b);

struct ParseError {
    std::size_t position;
    std::string message;
};

// Grammar:
//   expr := term { "+" term }
//   term := [ NUMBER "*" ] atom
//   atom := IDENT "(" args ")" | "(" expr ")"
// IDENTs: pow, exptrunc, geomtrunc, neglogtrunc, series, compose.
std::variant<SpecPtr, ParseError> parse(std::string_view text);

}  // namespace radconvex
