#pragma once

#include <optional>
#include <vector>

#include "fracineq/corpus.hpp"
#include "fracineq/identities.hpp"

namespace fracineq {

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;      // rhs - lhs
  double tightness = 0.0;  // lhs / rhs; 0 when rhs == 0 and lhs is within tolerance
  double tol_slack = 0.0;
  bool pass = false;
  double err_estimate = 0.0;
  bool bounds_exact = true;  // false when derivative bounds came from sampling
  std::vector<Term> lhs_terms;

  // Only filled by theorem_frac_check.
  std::optional<double> paper_bracket;
  std::optional<double> sharp_bracket;
  std::optional<double> bracket_ratio;  // paper / sharp
};

/// Fills slack, tightness, tolerance and pass from lhs and rhs.
InequalityReport make_inequality_report(double lhs, double rhs, double err_estimate,
                                        bool bounds_exact, const CheckConfig& cfg);

/// Declared exact bounds when iv is supported by f; otherwise sampled on a
/// 10001-point grid and widened outward by 1%, flagged exact = false.
DerivativeBounds derivative_bounds(const FunctionSpec& f, const Interval& iv);

/// |f(x) - mean| <= [1/4 + (x - (a+b)/2)^2/(b-a)^2] (b-a) M
InequalityReport classic_ostrowski_check(const FunctionSpec& f, const Interval& iv, double x,
                                         const CheckConfig& cfg);

/// |½f(x) - [(x-b)f(b) - (x-a)f(a)]/(2(b-a)) - mean|
///   <= (Γ-γ) [(x-a)^2 + (b-x)^2] / (8(b-a))
InequalityReport cheng_check(const FunctionSpec& f, const Interval& iv, double x,
                             const CheckConfig& cfg);

/// |f(x) - (f(b)-f(a))/(b-a) (x - (a+b)/2) - mean| <= (b-a)(Γ-γ)/4
InequalityReport dragomir_check(const FunctionSpec& f, const Interval& iv, double x,
                                const CheckConfig& cfg);

/// Fractional Ostrowski-Grüss inequality for alpha >= 1 with |f'| <= M.
/// Also reports the bracket integral before the |t - m| <= half-width
/// relaxation (sharp_bracket) and the ratio of the closed bracket to it.
InequalityReport theorem_frac_check(const FunctionSpec& f, const FracPoint& pt,
                                    const CheckConfig& cfg);

/// |½f(x) - [(x-b)f(b) - (x-a)f(a)]/(2(b-a)) - mean| <= M [(x-a)^2 + (b-x)^2] / (2(b-a))
InequalityReport remark2_check(const FunctionSpec& f, const Interval& iv, double x,
                               const CheckConfig& cfg);

/// [(b-a)^α (x-a) + (b-x)^α (a+b-2x)] / (2α)
double frac_paper_bracket(const Interval& iv, double x, double alpha);

/// ∫_a^x (b-t)^(α-1) |t-(a+x)/2| dt + ∫_x^b (b-t)^(α-1) |t-(b+x)/2| dt
TermValue frac_sharp_bracket(const Interval& iv, double x, double alpha,
                             const QuadratureConfig& cfg);

}  // namespace fracineq
