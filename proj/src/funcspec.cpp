#include "radconvex/funcspec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "radconvex/common.hpp"

namespace radconvex {

namespace detail {
struct SpecAccess {
    static SpecPtr make(FunctionSpec::Node node, double domain_end) {
        return std::shared_ptr<const FunctionSpec>(
            new FunctionSpec(std::move(node), domain_end));
    }
};
}  // namespace detail

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SpecPtr make(FunctionSpec::Node node, double domain_end) {
    return detail::SpecAccess::make(std::move(node), domain_end);
}

bool is_builtin_leaf(const FunctionSpec& f) {
    const auto& n = f.node();
    return std::holds_alternative<PowNode>(n) || std::holds_alternative<ExpTruncNode>(n) ||
           std::holds_alternative<GeomTruncNode>(n) ||
           std::holds_alternative<NegLogTruncNode>(n) || std::holds_alternative<SeriesNode>(n);
}

// Largest x with inner(x) < outer's domain end, given inner nondecreasing.
double compose_domain(const FunctionSpec& outer, const FunctionSpec& inner) {
    const double d_out = outer.domain_end();
    const double d_in = inner.domain_end();
    if (std::isinf(d_out)) return d_in;
    double hi;
    if (std::isinf(d_in)) {
        hi = 1.0;
        while (hi < 1e15 && evaluate(inner, hi) < d_out) hi *= 2.0;
        if (evaluate(inner, hi) < d_out) return kInf;
    } else {
        hi = d_in * (1.0 - 1e-9);
        if (evaluate(inner, hi) < d_out) return d_in;
    }
    return inverse(inner, d_out, hi);
}

double eval_exp_trunc(int k, double x) {
    // e^x - partial sum cancels catastrophically near 0; sum the tail instead.
    if (x < 0.5) {
        double term = 1.0;
        for (int n = 1; n <= k + 1; ++n) term *= x / n;
        double sum = term;
        for (int n = k + 2; n <= 60; ++n) {
            term *= x / n;
            sum += term;
            if (term < 1e-18 * sum) break;
        }
        return sum;
    }
    double partial = 0.0, term = 1.0;
    for (int n = 0; n <= k; ++n) {
        partial += term;
        term *= x / (n + 1);
    }
    return std::exp(x) - partial;
}

double eval_neg_log_trunc(int k, double x) {
    if (x == 0.0) return 0.0;
    if (x < 0.5) {
        double pw = std::pow(x, k + 1);
        double sum = pw / (k + 1);
        for (int n = k + 2; n <= 120; ++n) {
            pw *= x;
            double term = pw / n;
            sum += term;
            if (term < 1e-18 * sum) break;
        }
        return sum;
    }
    double partial = 0.0, pw = 1.0;
    for (int n = 1; n <= k; ++n) {
        pw *= x;
        partial += pw / n;
    }
    return -std::log1p(-x) - partial;
}

std::string fmt_num(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

SpecPtr FunctionSpec::pow(double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw std::invalid_argument("pow exponent must be >= 1");
    return make(PowNode{p}, kInf);
}

SpecPtr FunctionSpec::exp_trunc(int k) {
    if (k < 0 || k > 100) throw std::invalid_argument("exptrunc order must be in [0, 100]");
    return make(ExpTruncNode{k}, kInf);
}

SpecPtr FunctionSpec::geom_trunc(int k) {
    if (k < 0 || k > 1000) throw std::invalid_argument("geomtrunc order must be in [0, 1000]");
    return make(GeomTruncNode{k}, 1.0);
}

SpecPtr FunctionSpec::neg_log_trunc(int k) {
    if (k < 0 || k > 1000) throw std::invalid_argument("neglogtrunc order must be in [0, 1000]");
    return make(NegLogTruncNode{k}, 1.0);
}

SpecPtr FunctionSpec::series(int n0, std::vector<double> coeffs) {
    if (n0 < 1) throw std::invalid_argument("series must start at n0 >= 1 (f(0)=0)");
    if (coeffs.empty()) throw std::invalid_argument("series needs at least one coefficient");
    for (double c : coeffs)
        if (!(c >= 0.0) || !std::isfinite(c))
            throw std::invalid_argument("series coefficients must be nonnegative");
    return make(SeriesNode{n0, std::move(coeffs)}, kInf);
}

SpecPtr FunctionSpec::scale(double c, SpecPtr inner) {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("scale factor must be > 0");
    if (!inner) throw std::invalid_argument("scale needs an operand");
    double d = inner->domain_end();
    return make(ScaleNode{c, std::move(inner)}, d);
}

SpecPtr FunctionSpec::sum(SpecPtr left, SpecPtr right) {
    if (!left || !right) throw std::invalid_argument("sum needs two operands");
    double d = std::min(left->domain_end(), right->domain_end());
    return make(SumNode{std::move(left), std::move(right)}, d);
}

SpecPtr FunctionSpec::compose(SpecPtr outer, SpecPtr inner) {
    if (!outer || !inner) throw std::invalid_argument("compose needs two operands");
    if (!is_builtin_leaf(*outer))
        throw std::invalid_argument(
            "compose outer must be a builtin (pow/exptrunc/geomtrunc/neglogtrunc/series)");
    double d = compose_domain(*outer, *inner);
    return make(ComposeNode{std::move(outer), std::move(inner)}, d);
}

double evaluate(const FunctionSpec& f, double x) {
    if (!(x >= 0.0) || x >= f.domain_end())
        throw std::domain_error("evaluate: x outside [0, domain_end)");
    struct Visitor {
        double x;
        double operator()(const PowNode& n) const { return std::pow(x, n.p); }
        double operator()(const ExpTruncNode& n) const { return eval_exp_trunc(n.k, x); }
        double operator()(const GeomTruncNode& n) const {
            // geometric tail sum_{n>k} x^n has the exact closed form x^{k+1}/(1-x)
            return std::pow(x, n.k + 1) / (1.0 - x);
        }
        double operator()(const NegLogTruncNode& n) const { return eval_neg_log_trunc(n.k, x); }
        double operator()(const SeriesNode& n) const {
            double acc = 0.0;
            for (auto it = n.coeffs.rbegin(); it != n.coeffs.rend(); ++it) acc = acc * x + *it;
            return acc * std::pow(x, n.n0);
        }
        double operator()(const ScaleNode& n) const { return n.c * evaluate(*n.inner, x); }
        double operator()(const SumNode& n) const {
            return evaluate(*n.left, x) + evaluate(*n.right, x);
        }
        double operator()(const ComposeNode& n) const {
            return evaluate(*n.outer, evaluate(*n.inner, x));
        }
    };
    return std::visit(Visitor{x}, f.node());
}

double inverse(const FunctionSpec& f, double y, double x_hi) {
    if (!(y >= 0.0)) throw std::invalid_argument("inverse: y must be >= 0");
    if (const auto* p = std::get_if<PowNode>(&f.node())) return std::pow(y, 1.0 / p->p);
    if (y == 0.0) return 0.0;
    if (evaluate(f, x_hi) < y) throw NumericError("inverse: f(x_hi) < y, no bracket");
    double lo = 0.0, hi = x_hi;
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        double mid = 0.5 * (lo + hi);
        double v = evaluate(f, mid);
        if (std::abs(v - y) <= 1e-12 * std::max(1.0, y)) return mid;
        (v < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::string format(const FunctionSpec& f) {
    struct Visitor {
        const FunctionSpec& spec;
        std::string operator()(const PowNode& n) const { return "pow(" + fmt_num(n.p) + ")"; }
        std::string operator()(const ExpTruncNode& n) const {
            return "exptrunc(" + std::to_string(n.k) + ")";
        }
        std::string operator()(const GeomTruncNode& n) const {
            return "geomtrunc(" + std::to_string(n.k) + ")";
        }
        std::string operator()(const NegLogTruncNode& n) const {
            return "neglogtrunc(" + std::to_string(n.k) + ")";
        }
        std::string operator()(const SeriesNode& n) const {
            std::string s = "series(" + std::to_string(n.n0);
            for (double c : n.coeffs) s += "," + fmt_num(c);
            return s + ")";
        }
        std::string operator()(const ScaleNode& n) const {
            std::string inner = format(*n.inner);
            if (std::holds_alternative<SumNode>(n.inner->node()) ||
                std::holds_alternative<ScaleNode>(n.inner->node()))
                inner = "(" + inner + ")";
            return fmt_num(n.c) + "*" + inner;
        }
        std::string operator()(const SumNode& n) const {
            return format(*n.left) + " + " + format(*n.right);
        }
        std::string operator()(const ComposeNode& n) const {
            return "compose(" + format(*n.outer) + "," + format(*n.inner) + ")";
        }
    };
    return std::visit(Visitor{f}, f.node());
}

bool structurally_equal(const FunctionSpec& a, const FunctionSpec& b) {
    if (a.node().index() != b.node().index()) return false;
    struct Visitor {
        const FunctionSpec::Node& other;
        bool operator()(const PowNode& n) const { return std::get<PowNode>(other).p == n.p; }
        bool operator()(const ExpTruncNode& n) const {
            return std::get<ExpTruncNode>(other).k == n.k;
        }
        bool operator()(const GeomTruncNode& n) const {
            return std::get<GeomTruncNode>(other).k == n.k;
        }
        bool operator()(const NegLogTruncNode& n) const {
            return std::get<NegLogTruncNode>(other).k == n.k;
        }
        bool operator()(const SeriesNode& n) const {
            const auto& o = std::get<SeriesNode>(other);
            return o.n0 == n.n0 && o.coeffs == n.coeffs;
        }
        bool operator()(const ScaleNode& n) const {
            const auto& o = std::get<ScaleNode>(other);
            return o.c == n.c && structurally_equal(*o.inner, *n.inner);
        }
        bool operator()(const SumNode& n) const {
            const auto& o = std::get<SumNode>(other);
            return structurally_equal(*o.left, *n.left) && structurally_equal(*o.right, *n.right);
        }
        bool operator()(const ComposeNode& n) const {
            const auto& o = std::get<ComposeNode>(other);
            return structurally_equal(*o.outer, *n.outer) &&
                   structurally_equal(*o.inner, *n.inner);
        }
    };
    return std::visit(Visitor{b.node()}, a.node());
}

namespace {

struct ParseFail {
    std::size_t position;
    std::string message;
};

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    SpecPtr run() {
        SpecPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::string msg) const { throw ParseFail{pos_, std::move(msg)}; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_number() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
    }

    double number() {
        skip_ws();
        double v{};
        auto [ptr, ec] =
            std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (ec != std::errc{}) fail("expected a number");
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        return v;
    }

    int integer(const char* what) {
        double v = number();
        if (v != std::round(v) || std::abs(v) > 1e9) fail(std::string(what) + " must be an integer");
        return static_cast<int>(v);
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected an identifier");
        return std::string(s_.substr(start, pos_ - start));
    }

    SpecPtr expr() {
        SpecPtr left = term();
        while (eat('+')) left = checked([&] { return FunctionSpec::sum(left, term()); });
        return left;
    }

    SpecPtr term() {
        if (peek_number()) {
            double c = number();
            expect('*');
            SpecPtr inner = atom();
            return checked([&] { return FunctionSpec::scale(c, std::move(inner)); });
        }
        return atom();
    }

    SpecPtr atom() {
        skip_ws();
        if (eat('(')) {
            SpecPtr e = expr();
            expect(')');
            return e;
        }
        std::size_t name_pos = pos_;
        std::string name = ident();
        expect('(');
        SpecPtr result;
        if (name == "pow") {
            double p = number();
            result = checked([&] { return FunctionSpec::pow(p); });
        } else if (name == "exptrunc") {
            int k = integer("exptrunc order");
            result = checked([&] { return FunctionSpec::exp_trunc(k); });
        } else if (name == "geomtrunc") {
            int k = integer("geomtrunc order");
            result = checked([&] { return FunctionSpec::geom_trunc(k); });
        } else if (name == "neglogtrunc") {
            int k = integer("neglogtrunc order");
            result = checked([&] { return FunctionSpec::neg_log_trunc(k); });
        } else if (name == "series") {
            int n0 = integer("series start index");
            std::vector<double> coeffs;
            while (eat(',')) coeffs.push_back(number());
            result = checked([&] { return FunctionSpec::series(n0, std::move(coeffs)); });
        } else if (name == "compose") {
            SpecPtr outer = expr();
            expect(',');
            SpecPtr inner = expr();
            result = checked(
                [&] { return FunctionSpec::compose(std::move(outer), std::move(inner)); });
        } else {
            pos_ = name_pos;
            fail("unknown function '" + name + "'");
        }
        expect(')');
        return result;
    }

    template <class F>
    SpecPtr checked(F&& build) {
        try {
            return build();
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
};

}  // namespace

std::variant<SpecPtr, ParseError> parse(std::string_view text) {
    try {
        return Parser(text).run();
    } catch (const ParseFail& f) {
        return ParseError{f.position, f.message};
    }
}

}  // namespace radconvex
