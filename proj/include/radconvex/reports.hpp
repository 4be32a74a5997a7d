#pragma once

#include <string>
#include <utility>
#include <vector>

namespace radconvex {

enum class TheoremId {
    JENSEN2,
    JENSEN_N,
    UPPER_CURVE,
    AMGM,
    SUPERADD,
    MRADICAL,
    FOURRADICAL,
    ALGEBRAIC_ID,
    HH_FIRST,
    HH_SECOND,
    UNIT_INT,
    SPLIT_INT,
    HH_GENERAL,
    CONT_JENSEN,
    HARDY,
    AVG_VALUE,
};

const char* to_string(TheoremId id);

using NamedValues = std::vector<std::pair<std::string, double>>;

// One pointwise theorem instance. margin = rhs - sum(lhs terms), or the
// minimum link margin for chained inequalities.
struct InequalityReport {
    TheoremId theorem_id;
    NamedValues inputs;
    NamedValues lhs_terms;
    double rhs;
    double margin;
    bool pass;
};

// One integral theorem instance; pass tolerance couples to quadrature error:
// margin >= -(1e-8 + 10 * quad_err) * max(1, |rhs|).
struct IntegralReport {
    TheoremId theorem_id;
    double a;
    double b;
    double p;  // 0 when not applicable
    double lhs;
    double rhs;
    NamedValues components;
    double margin;
    bool pass;
    double quad_err;
};

inline constexpr double kMarginTol = 1e-9;

}  // namespace radconvex
