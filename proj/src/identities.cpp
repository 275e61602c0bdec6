#include "fracineq/identities.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fracineq {

IdentityReport make_identity_report(std::vector<Term> lhs_terms, std::vector<Term> rhs_terms,
                                    double err_estimate, const CheckConfig& cfg) {
  IdentityReport r;
  double scale = 0.0;
  for (const Term& t : lhs_terms) {
    r.lhs += t.value;
    scale = std::max(scale, std::abs(t.value));
  }
  for (const Term& t : rhs_terms) {
    r.rhs += t.value;
    scale = std::max(scale, std::abs(t.value));
  }
  scale = std::max({scale, std::abs(r.lhs), std::abs(r.rhs)});
  r.residual = r.lhs - r.rhs;
  r.scale = scale;
  r.tolerance = std::max(cfg.quad.abs_tol, cfg.rel_tol_identity * scale);
  r.pass = std::isfinite(r.residual) && std::abs(r.residual) <= r.tolerance;
  r.err_estimate = err_estimate;
  r.lhs_terms = std::move(lhs_terms);
  r.rhs_terms = std::move(rhs_terms);
  return r;
}

namespace {

// The kernel jump at t = x, when it is interior.
std::vector<double> jump_at(const Interval& iv, double x) {
  if (x > iv.a() && x < iv.b()) return {x};
  return {};
}

TermValue converged(const QuadResult& q, const char* what) {
  return TermValue{require_converged(q, what), q.err_estimate};
}

void check_x(const Interval& iv, double x) {
  if (!std::isfinite(x) || !iv.contains(x)) throw DomainError("x outside [a, b]");
}

}  // namespace

TermValue j_f(const FunctionSpec& f, const FracPoint& pt, const QuadratureConfig& cfg) {
  const Interval& iv = pt.interval();
  return converged(rl_integral_result(f.f, iv.a(), pt.alpha(), iv.b(), cfg), "J^a f(b)");
}

TermValue j_m1_f(const FunctionSpec& f, const FracPoint& pt, const QuadratureConfig& cfg) {
  const Interval& iv = pt.interval();
  return converged(rl_integral_result(f.f, iv.a(), pt.alpha() - 1.0, iv.b(), cfg),
                   "J^(a-1) f(b)");
}

TermValue j_m1_p2f(const FunctionSpec& f, const FracPoint& pt, const QuadratureConfig& cfg) {
  const Interval& iv = pt.interval();
  const double x = pt.x();
  const double alpha = pt.alpha();
  const double guard = cfg.endpoint_guard;
  auto g = [&](double t) { return kernel_p2(iv, x, t, alpha, guard) * f.f(t); };
  const auto bp = jump_at(iv, x);
  return converged(rl_integral_result(g, iv.a(), alpha - 1.0, iv.b(), cfg, bp),
                   "J^(a-1)(P2 f)(b)");
}

TermValue j_p2_fprime(const FunctionSpec& f, const FracPoint& pt, const QuadratureConfig& cfg) {
  const Interval& iv = pt.interval();
  const double x = pt.x();
  const double alpha = pt.alpha();
  const double guard = cfg.endpoint_guard;
  auto g = [&](double t) { return kernel_p2(iv, x, t, alpha, guard) * f.f_prime(t); };
  const auto bp = jump_at(iv, x);
  return converged(rl_integral_result(g, iv.a(), alpha, iv.b(), cfg, bp), "J^a(P2 f')(b)");
}

TermValue j_k1_fprime(const FunctionSpec& f, const FracPoint& pt, const QuadratureConfig& cfg) {
  const Interval& iv = pt.interval();
  const double x = pt.x();
  const double alpha = pt.alpha();
  const double guard = cfg.endpoint_guard;
  auto g = [&](double t) { return kernel_k1(iv, x, t, alpha, guard) * f.f_prime(t); };
  const auto bp = jump_at(iv, x);
  return converged(rl_integral_result(g, iv.a(), alpha, iv.b(), cfg, bp), "J^a(K1 f')(b)");
}

TermValue weighted_shift_fprime(const FunctionSpec& f, const FracPoint& pt,
                                const QuadratureConfig& cfg) {
  const Interval& iv = pt.interval();
  const double x = pt.x();
  auto g = [&](double t) { return (t - x) * f.f_prime(t); };
  return converged(integrate_weighted(g, iv.a(), iv.b(), pt.alpha(), {}, cfg),
                   "weighted (t-x) f' integral");
}

TermValue mean_value(const FunctionSpec& f, const Interval& iv, const QuadratureConfig& cfg) {
  const TermValue q = converged(integrate(f.f, iv.a(), iv.b(), {}, cfg), "integral of f");
  return TermValue{q.value / iv.length(), q.err / iv.length()};
}

FracMontgomeryTerms frac_montgomery_terms(const FunctionSpec& f, const FracPoint& pt,
                                          const QuadratureConfig& cfg) {
  const Interval& iv = pt.interval();
  const double a = iv.a();
  const double b = iv.b();
  const double x = pt.x();
  const double alpha = pt.alpha();
  const double len = iv.length();
  const double gam = gamma_function(alpha);
  const double w = std::pow(b - x, 1.0 - alpha);  // (b-x)^(1-α)

  FracMontgomeryTerms out;
  out.fx = f.f(x);

  const TermValue jf = j_f(f, pt, cfg);
  const double c_mean = (alpha + 1.0) * gam * w / len;
  out.mean_term = {c_mean * jf.value, std::abs(c_mean) * jf.err};

  const TermValue jp2 = j_m1_p2f(f, pt, cfg);
  out.p2f_term = {-jp2.value, jp2.err};

  const TermValue jm1 = j_m1_f(f, pt, cfg);
  const double c_jm1 = std::pow(b - x, 2.0 - alpha) * gam / len;
  out.jm1_term = {-c_jm1 * jm1.value, std::abs(c_jm1) * jm1.err};

  const double c_fa = w * (x - a) / std::pow(len, 2.0 - alpha);
  out.fa_term = {-c_fa * f.f(a), 0.0};
  return out;
}

IdentityReport montgomery_classic_residual(const FunctionSpec& f, const Interval& iv, double x,
                                           const CheckConfig& cfg) {
  check_x(iv, x);
  const TermValue mean = mean_value(f, iv, cfg.quad);
  auto g = [&](double t) { return kernel_p1(iv, x, t) * f.f_prime(t); };
  const auto bp = jump_at(iv, x);
  const TermValue kern =
      converged(integrate(g, iv.a(), iv.b(), bp, cfg.quad), "integral of P1 f'");
  return make_identity_report({{"f(x)", f.f(x)}},
                              {{"mean", mean.value}, {"int P1 f'", kern.value}},
                              mean.err + kern.err, cfg);
}

IdentityReport lemma_frac_residual(const FunctionSpec& f, const FracPoint& pt,
                                   const CheckConfig& cfg) {
  const Interval& iv = pt.interval();
  const double alpha = pt.alpha();
  const double c = gamma_function(alpha) * std::pow(iv.b() - pt.x(), 1.0 - alpha) / iv.length();

  const TermValue jf = j_f(f, pt, cfg.quad);
  const TermValue jp2 = j_m1_p2f(f, pt, cfg.quad);
  const TermValue jp2d = j_p2_fprime(f, pt, cfg.quad);
  return make_identity_report(
      {{"f(x)", f.f(pt.x())}},
      {{"G(a)(b-x)^(1-a)/(b-a) J^a f(b)", c * jf.value},
       {"-J^(a-1)(P2 f)(b)", -jp2.value},
       {"J^a(P2 f')(b)", jp2d.value}},
      std::abs(c) * jf.err + jp2.err + jp2d.err, cfg);
}

IdentityReport montgomery_frac_residual(const FunctionSpec& f, const FracPoint& pt,
                                        const CheckConfig& cfg) {
  const FracMontgomeryTerms t = frac_montgomery_terms(f, pt, cfg.quad);
  const TermValue k1 = j_k1_fprime(f, pt, cfg.quad);
  return make_identity_report(
      {{"f(x)", t.fx}},
      {{"(a+1)G(a)(b-x)^(1-a)/(b-a) J^a f(b)", t.mean_term.value},
       {"-J^(a-1)(P2 f)(b)", t.p2f_term.value},
       {"-(b-x)^(2-a)G(a)/(b-a) J^(a-1) f(b)", t.jm1_term.value},
       {"-(b-x)^(1-a)(x-a)/(b-a)^(2-a) f(a)", t.fa_term.value},
       {"2 J^a(K1 f')(b)", 2.0 * k1.value}},
      t.mean_term.err + t.p2f_term.err + t.jm1_term.err + 2.0 * k1.err, cfg);
}

IdentityReport eq10_residual(const FunctionSpec& f, const FracPoint& pt, const CheckConfig& cfg) {
  const Interval& iv = pt.interval();
  const double c = std::pow(iv.b() - pt.x(), 1.0 - pt.alpha()) / (2.0 * iv.length());
  const TermValue k1 = j_k1_fprime(f, pt, cfg.quad);
  const TermValue p2 = j_p2_fprime(f, pt, cfg.quad);
  const TermValue shift = weighted_shift_fprime(f, pt, cfg.quad);
  return make_identity_report(
      {{"J^a(K1 f')(b)", k1.value}},
      {{"1/2 J^a(P2 f')(b)", 0.5 * p2.value},
       {"(b-x)^(1-a)/(2(b-a)) int (b-t)^(a-1)(t-x) f'", c * shift.value}},
      k1.err + 0.5 * p2.err + std::abs(c) * shift.err, cfg);
}

IdentityReport eq11_residual(const FunctionSpec& f, const FracPoint& pt, const CheckConfig& cfg) {
  const Interval& iv = pt.interval();
  const double a = iv.a();
  const double b = iv.b();
  const double x = pt.x();
  const double alpha = pt.alpha();
  const TermValue shift = weighted_shift_fprime(f, pt, cfg.quad);
  const TermValue jm1 = j_m1_f(f, pt, cfg.quad);
  const TermValue jf = j_f(f, pt, cfg.quad);
  const double c_fa = (x - a) * std::pow(b - a, alpha - 1.0);
  const double c_jm1 = (b - x) * gamma_function(alpha);
  const double c_jf = gamma_function(alpha + 1.0);
  return make_identity_report(
      {{"int (b-t)^(a-1)(t-x) f'", shift.value}},
      {{"(x-a)(b-a)^(a-1) f(a)", c_fa * f.f(a)},
       {"(b-x)G(a) J^(a-1) f(b)", c_jm1 * jm1.value},
       {"-G(a+1) J^a f(b)", -c_jf * jf.value}},
      shift.err + std::abs(c_jm1) * jm1.err + c_jf * jf.err, cfg);
}

IdentityReport remark1_residual(const FunctionSpec& f, const Interval& iv, double x,
                                const CheckConfig& cfg, RemarkForm form) {
  check_x(iv, x);
  const double a = iv.a();
  const double b = iv.b();
  const double len = iv.length();
  const TermValue mean = mean_value(f, iv, cfg.quad);
  auto g = [&](double t) { return kernel_k(iv, x, t) * f.f_prime(t); };
  const auto bp = jump_at(iv, x);
  const TermValue kern = converged(integrate(g, a, b, bp, cfg.quad), "integral of K f'");
  const double c = form == RemarkForm::normalized ? 1.0 / len : 1.0;
  const double boundary = ((x - b) * f.f(b) - (x - a) * f.f(a)) / (2.0 * len);
  return make_identity_report({{"f(x)/2", 0.5 * f.f(x)}},
                              {{"mean", mean.value},
                               {"[(x-b)f(b)-(x-a)f(a)]/(2(b-a))", boundary},
                               {form == RemarkForm::normalized ? "int K f' / (b-a)" : "int K f'",
                                c * kern.value}},
                              mean.err + c * kern.err, cfg);
}

}  // namespace fracineq
