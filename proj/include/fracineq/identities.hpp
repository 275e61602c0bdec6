#pragma once

#include <string>
#include <vector>

#include "fracineq/corpus.hpp"
#include "fracineq/fractional.hpp"

namespace fracineq {

/// Tolerances for identity and inequality checks.
struct CheckConfig {
  QuadratureConfig quad;
  // Identity residuals pass when |residual| <= max(quad.abs_tol, rel_tol_identity * scale).
  double rel_tol_identity = 1e-7;
  // Inequalities pass when slack >= -slack_rel_tol * max(1, rhs).
  double slack_rel_tol = 1e-8;
};

/// One named, signed contribution to a side of an identity.
struct Term {
  std::string name;
  double value = 0.0;
};

struct IdentityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // lhs - rhs
  double scale = 0.0;     // largest |constituent term|
  double tolerance = 0.0;
  bool pass = false;
  double err_estimate = 0.0;  // summed quadrature error estimates
  std::vector<Term> lhs_terms;
  std::vector<Term> rhs_terms;
};

/// Builds a report from signed terms; lhs and rhs are the sums of their terms.
IdentityReport make_identity_report(std::vector<Term> lhs_terms, std::vector<Term> rhs_terms,
                                    double err_estimate, const CheckConfig& cfg);

/// Quadrature value with its error estimate.
struct TermValue {
  double value = 0.0;
  double err = 0.0;
};

/// The pieces shared by the fractional Montgomery identity and the fractional
/// Ostrowski-Grüss inequality, each from an independent quadrature call:
///
///   f(x) = mean_term + p2f_term + jm1_term + fa_term + 2 J_a^α(K1 f')(b)
///
/// with every coefficient already folded into the term values.
struct FracMontgomeryTerms {
  double fx = 0.0;
  TermValue mean_term;  //  (α+1) Γ(α) (b-x)^(1-α)/(b-a) · J_a^α f(b)
  TermValue p2f_term;   // -J_a^(α-1)(P2(x,·) f)(b)
  TermValue jm1_term;   // -(b-x)^(2-α) Γ(α)/(b-a) · J_a^(α-1) f(b)
  TermValue fa_term;    // -(b-x)^(1-α) (x-a)/(b-a)^(2-α) · f(a)
};

FracMontgomeryTerms frac_montgomery_terms(const FunctionSpec& f, const FracPoint& pt,
                                          const QuadratureConfig& cfg);

// Individual J-terms evaluated at b. At alpha = 1 the order alpha-1 terms use
// the identity operator.

/// J_a^α f(b)
TermValue j_f(const FunctionSpec& f, const FracPoint& pt, const QuadratureConfig& cfg);
/// J_a^(α-1) f(b)
TermValue j_m1_f(const FunctionSpec& f, const FracPoint& pt, const QuadratureConfig& cfg);
/// J_a^(α-1)(P2(x,·) f)(b)
TermValue j_m1_p2f(const FunctionSpec& f, const FracPoint& pt, const QuadratureConfig& cfg);
/// J_a^α(P2(x,·) f')(b)
TermValue j_p2_fprime(const FunctionSpec& f, const FracPoint& pt, const QuadratureConfig& cfg);
/// J_a^α(K1(x,·) f')(b)
TermValue j_k1_fprime(const FunctionSpec& f, const FracPoint& pt, const QuadratureConfig& cfg);
/// ∫_a^b (b-t)^(α-1) (t-x) f'(t) dt
TermValue weighted_shift_fprime(const FunctionSpec& f, const FracPoint& pt,
                                const QuadratureConfig& cfg);

/// Mean value (1/(b-a)) ∫_a^b f.
TermValue mean_value(const FunctionSpec& f, const Interval& iv, const QuadratureConfig& cfg);

/// f(x) = mean + ∫ P1(x,t) f'(t) dt
IdentityReport montgomery_classic_residual(const FunctionSpec& f, const Interval& iv, double x,
                                           const CheckConfig& cfg);

/// f(x) = Γ(α)(b-x)^(1-α)/(b-a) J^α f(b) - J^(α-1)(P2 f)(b) + J^α(P2 f')(b)
IdentityReport lemma_frac_residual(const FunctionSpec& f, const FracPoint& pt,
                                   const CheckConfig& cfg);

/// The five-term fractional Montgomery identity with kernel K1.
IdentityReport montgomery_frac_residual(const FunctionSpec& f, const FracPoint& pt,
                                        const CheckConfig& cfg);

/// J^α(K1 f')(b) = ½ J^α(P2 f')(b) + (b-x)^(1-α)/(2(b-a)) ∫(b-t)^(α-1)(t-x) f'(t) dt
IdentityReport eq10_residual(const FunctionSpec& f, const FracPoint& pt,
                             const CheckConfig& cfg);

/// ∫(b-t)^(α-1)(t-x) f'(t) dt
///   = (x-a)(b-a)^(α-1) f(a) + (b-x) Γ(α) J^(α-1) f(b) - Γ(α+1) J^α f(b)
IdentityReport eq11_residual(const FunctionSpec& f, const FracPoint& pt,
                             const CheckConfig& cfg);

/// Which normalization of the kernel integral the alpha = 1 identity uses.
///
/// `normalized` is what the fractional identity actually reduces to at
/// alpha = 1, namely (1/(b-a)) ∫ K f'. `as_printed` omits the 1/(b-a); it
/// coincides with `normalized` only when b - a = 1 or f is affine.
enum class RemarkForm { normalized, as_printed };

/// ½ f(x) = mean + [(x-b) f(b) - (x-a) f(a)] / (2(b-a)) + c · ∫ K(x,t) f'(t) dt
/// with c = 1/(b-a) (normalized) or c = 1 (as_printed).
IdentityReport remark1_residual(const FunctionSpec& f, const Interval& iv, double x,
                                const CheckConfig& cfg,
                                RemarkForm form = RemarkForm::normalized);

}  // namespace fracineq
