#pragma once

#include <functional>

#include "radconvex/funcspec.hpp"
#include "radconvex/reports.hpp"

namespace radconvex {

// f((a+b)/2) + (2/(b-a)) int_0^{(b-a)/2} f  <=  (1/(b-a)) int_a^b f.
IntegralReport hh_first(const FunctionSpec& f, double a, double b);

// (1/(b-a)) int_a^b f + refine_term  <=  (f(a)+f(b))/2.
IntegralReport hh_second(const FunctionSpec& f, double a, double b);

// f(1/2) <= int_0^1 [f((x+1/2)/2) + f(|x-1/2|/2)] dx <= int_0^1 f.
IntegralReport unit_interval_chain(const FunctionSpec& f);

// 3 int_0^{1/4} f + int_{1/4}^{3/4} f <= int_{3/4}^1 f.
IntegralReport split_interval_bound(const FunctionSpec& f);

// Interval form of the unit chain with midpoint m = (a+b)/2.
IntegralReport hh_general(const FunctionSpec& f, double a, double b);

// Continuous Jensen refinement with gbar = (1/(b-a)) int_a^b g:
// f(gbar) <= (1/(b-a)) int_a^b [f((g+gbar)/2) + f(|g-gbar|/2)] <= (1/(b-a)) int_a^b f(g).
IntegralReport continuous_jensen(const FunctionSpec& f,
                                 const std::function<double(double)>& g,
                                 double a, double b);

// Finite-interval Hardy bound:
// int_alpha^beta ((1/x) int_0^x f)^p dx <= (1/(p+1))^p int_alpha^beta f^p dx.
// Identity for f(x) = x^p.
IntegralReport hardy_finite(const FunctionSpec& f, double p, double alpha, double beta);

// Average-value necessary condition in report form; also carries the classical
// Hermite-Hadamard comparison value f(x)/2.
IntegralReport average_value_report(const FunctionSpec& f, double p, double x);

}  // namespace radconvex
